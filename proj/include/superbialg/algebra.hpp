#pragma once

#include "superbialg/element.hpp"

namespace superbialg {

/// Structure constants of the centerless twisted N=2 superconformal algebra:
///   [L_m, L_n] = (m-n) L_{m+n}
///   [L_m, T_r] = -r T_{r+m}
///   [T_r, T_s] = 0
///   [L_m, G_p] = (m/2 - p) G_{p+m}
///   [T_r, G_p] = G_{p+r}
///   [G_p, G_q] = (-1)^{2p} 2 L_{p+q}        if p+q is an integer
///              = (-1)^{2p+1} (p-q) T_{p+q}  if p+q is half-odd
/// Orders not listed above are resolved by super-antisymmetry
/// [a,b] = -(-1)^{[a][b]} [b,a], keeping the table the single source of
/// truth.
Element bracket_basis(const Generator& a, const Generator& b);

/// Bilinear extension of bracket_basis.
Element bracket(const Element& x, const Element& y);

/// Graded Jacobi defect [x,[y,z]] - [[x,y],z] - (-1)^{[x][y]} [y,[x,z]];
/// identically zero for this algebra.  Arguments must be
/// parity-homogeneous.
Element jacobi_defect(const Element& x, const Element& y, const Element& z);

/// Test hook: when enabled, perturbs the [L_m, L_n] structure constant so
/// that verification suites fail deterministically.  Not part of the
/// public semantics; reachable only through a hidden CLI flag.
void set_corrupt_structure_constants(bool enabled);
bool corrupt_structure_constants_enabled();

}  // namespace superbialg
