#pragma once

#include <vector>

#include "superbialg/linsys.hpp"
#include "superbialg/tensor.hpp"

namespace superbialg {

/// Truncation window for a homogeneous-derivation system d: algebra -> L(x)L
/// of fixed parity and degree.
///  - domain_bound:   d(w) is tracked for generators w with |index| <= this;
///  - target_bound:   tensor keys keep factors with |index| <= this;
///  - equation_bound: derivation equations are imposed for generator pairs
///                    (x, y) with both |indices| <= this.
struct DerivationSpec {
  int parity = 0;
  HalfInt degree{};
  long domain_bound = 5;
  long target_bound = 6;
  long equation_bound = 2;
};

/// Throws WindowError unless the bounds are coherent: positive, bracket
/// images of equation pairs stay within the domain window (2*eq <= domain),
/// and the interior band target_bound - equation_bound is nonempty.
void validate(const DerivationSpec& spec);

/// All rank-2 tensor keys of the given degree and parity with both factor
/// indices bounded by `bound` in absolute value, canonically ordered.
std::vector<Key2> tensor_keys(HalfInt degree, int parity, long bound);

/// Assemble the sparse system expressing
///   d([x,y]) - (-1)^{[d][x]} x*d(y) + (-1)^{[y]([d]+[x])} y*d(x) = 0
/// for all unordered equation pairs (x, y) (plus odd diagonal pairs),
/// with one unknown per coefficient of d(w) and each equation projected
/// onto the interior band of tensor keys: acting by x with |index| <= eq
/// shifts factor indices by at most eq, so keys with both factors within
/// target_bound - eq are free of truncation artifacts.
///
/// Unknown order: domain generators canonically, then keys canonically.
/// Row order: pair blocks in canonical pair order, then keys canonically;
/// identical specs produce identical systems.
LinearSystem build_derivation_system(const DerivationSpec& spec);

/// Raw (un-echeloned) inner-derivation vectors: for each tensor key u of
/// the spec's degree and parity (factors within target_bound), the
/// unknown-vector of w -> (-1)^{[u][w]} w*u, truncated to the unknown set.
/// These satisfy every system row exactly.
std::vector<SparseVec> inner_vectors(const DerivationSpec& spec);

/// Span of the inner vectors in canonical echelon form.
SolutionSpace inner_space(const DerivationSpec& spec);

/// Columns on which windowed derivations are fully pinned down by the
/// equations, so that kernel and inner span can be compared without
/// truncation artifacts: blocks with |index(w)| <= eq on keys with factors
/// within target - eq, and blocks with eq < |index(w)| <= 2*eq on keys
/// within target - 2*eq.  (Blocks beyond 2*eq appear in no equation, and
/// boundary keys are reachable from outside the window; both are excluded.)
std::vector<int> comparison_columns(const DerivationSpec& spec,
                                    const LinearSystem& sys);

struct H1Report {
  DerivationSpec spec;
  int der_dim = 0;       // dimension of the windowed derivation kernel
  int inn_dim = 0;       // rank of the inner vectors
  int quotient_dim = 0;  // derivations modulo inner span on the
                         // comparison columns
  std::vector<SparseVec> residuals;  // kernel basis vectors outside the
                                     // inner span (empty iff quotient 0)
};

/// Full computation bundle, for callers that also need the kernel
/// (e.g. to run check_claim1 on every basis vector).
struct H1Computation {
  H1Report report;
  LinearSystem system;
  SolutionSpace derivations;
};

H1Computation compute_h1(const DerivationSpec& spec);

/// der/inn/quotient dimensions and residual list for a window.
H1Report h1_report(const DerivationSpec& spec);

/// For degree != 0: reconstruct u = -(1/degree) d(L[0]) from a solution
/// vector and test whether the solution agrees with the inner derivation of
/// u on all comparison columns.  Throws DegreeZeroError for degree 0.
bool check_claim1(const DerivationSpec& spec, const SparseVec& solution);

}  // namespace superbialg
