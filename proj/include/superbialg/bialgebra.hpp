#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superbialg/tensor.hpp"

namespace superbialg {

/// An r-matrix: a parity-homogeneous rank-2 tensor.  Classification and the
/// co-Jacobi identity additionally require parity 0 and super-skewness.
struct RMatrix {
  Tensor2 value;
  int parity = 0;
};

/// Validated construction; throws HomogeneityError if the tensor mixes
/// parities.  The zero tensor counts as even.
RMatrix make_rmatrix(Tensor2 value);

/// Truncation window: a bound on |index| of the acting generators.
struct WindowSpec {
  HalfInt bound;
};

/// Coboundary of r: Delta_r(x) = (-1)^{[r][x]} x * r.
Tensor2 delta_r(const RMatrix& r, const Element& x);

/// [r^{12}, s^{13}] = sum (-1)^{[a_j][b_i]} [a_i,a_j] (x) b_i (x) b_j
/// over r = sum a_i (x) b_i and s = sum a_j (x) b_j.
Tensor3 bracket_12_13(const RMatrix& r, const RMatrix& s);

/// [r^{12}, s^{23}] = sum a_i (x) [b_i,a_j] (x) b_j (no extra sign).
Tensor3 bracket_12_23(const RMatrix& r, const RMatrix& s);

/// [r^{13}, s^{23}] = sum (-1)^{[a_j][b_i]} a_i (x) a_j (x) [b_i,b_j].
Tensor3 bracket_13_23(const RMatrix& r, const RMatrix& s);

/// Yang-Baxter expression c(r) = [r12,r13] + [r12,r23] + [r13,r23].
Tensor3 cybe(const RMatrix& r);

/// All generators x with |index| <= window.bound for which x * c(r) != 0,
/// ordered by ascending |index| then canonically.  Empty result means the
/// modified Yang-Baxter equation holds on the window.
std::vector<std::pair<Generator, Tensor3>> mybe_defects(const RMatrix& r,
                                                        WindowSpec window);

/// (1 (x) Delta_r) applied to a rank-2 tensor; r must be even, so the slot
/// sign is +1.
Tensor3 one_tensor_delta(const RMatrix& r, const Tensor2& t);

/// Defect of the identity (1 + xi + xi^2)(1 (x) Delta_r) Delta_r(x) =
/// x * c(r), valid for every even super-skew r and homogeneous x; must be
/// exactly zero.  Throws SkewnessError unless r is even and super-skew.
Tensor3 cojacobi_identity_defect(const RMatrix& r, const Element& x);

/// Defect of the 1-cocycle property
/// Delta_r([x,y]) - x*Delta_r(y) + (-1)^{[x][y]} y*Delta_r(x);
/// zero for every coboundary of an even r.
Tensor2 mixed_compat_defect(const RMatrix& r, const Element& x,
                            const Element& y);

/// Outcome of classifying an r-matrix on a window.
struct ClassifyReport {
  bool skew = false;
  bool cybe_zero = false;
  bool mybe_window_clean = false;
  std::optional<std::pair<Generator, Tensor3>> witness;
  WindowSpec window;
};

/// Classify an even r-matrix: super-skewness, exact c(r) = 0, windowed
/// modified-Yang-Baxter check with the first witness if dirty.  Throws
/// SkewnessError for odd r (classification is defined for even r only).
ClassifyReport classify_r(const RMatrix& r, WindowSpec window);

}  // namespace superbialg
