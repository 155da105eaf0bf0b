#pragma once

#include "superbialg/algebra.hpp"
#include "superbialg/element.hpp"

namespace superbialg {

/// Super-twist: linear extension of x(x)y -> (-1)^{[x][y]} y(x)x.
/// An involution.
Tensor2 twist_tau(const Tensor2& t);

/// Super-cyclic permutation: linear extension of
/// x1(x)x2(x)x3 -> (-1)^{[x1]([x2]+[x3])} x2(x)x3(x)x1.  Satisfies xi^3 = id.
Tensor3 cyclic_xi(const Tensor3& t);

/// Adjoint diagonal action of a single generator on a rank-2 basis key:
/// x*(a(x)b) = [x,a](x)b + (-1)^{[x][a]} a(x)[x,b].
Tensor2 act2_basis(const Generator& x, const Key2& k);

/// Adjoint diagonal action on a rank-3 basis key (Leibniz rule with super
/// signs accumulating the parities of the factors passed over).
Tensor3 act3_basis(const Generator& x, const Key3& k);

/// Adjoint diagonal action of a parity-homogeneous element on a tensor.
Tensor2 act2(const Element& x, const Tensor2& t);
Tensor3 act3(const Element& x, const Tensor3& t);

/// True iff (1+tau) t = 0.  Since tau is an involution and 1/2 is a scalar,
/// Ker(1+tau) = Im(1-tau), so this decides super-skew-symmetry exactly.
bool is_super_skew(const Tensor2& t);

/// Projection (1/2)(1 - tau); its image is exactly the super-skew tensors.
Tensor2 skew_project(const Tensor2& t);

}  // namespace superbialg
