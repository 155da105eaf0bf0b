#pragma once

#include <utility>
#include <vector>

#include "superbialg/element.hpp"
#include "superbialg/rational.hpp"

namespace superbialg {

/// Sparse rational vector: (column, coefficient) pairs sorted by column,
/// no zero coefficients.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// dst += scale * src (sorted merge).
void axpy(SparseVec& dst, const SparseVec& src, const Rational& scale);

/// Homogeneous sparse rational system A v = 0.  `unknowns` carries the
/// column meaning for derivation systems and is empty for generic matrices;
/// `ncols` is authoritative.
struct LinearSystem {
  std::vector<std::pair<Generator, Key2>> unknowns;
  int ncols = 0;
  std::vector<SparseVec> rows;
};

/// Exact kernel basis in canonical echelon form.
struct SolutionSpace {
  std::vector<SparseVec> basis;
  int dimension = 0;
};

/// Reduced row echelon form: rows sorted by pivot column, each with a
/// leading 1 in a column that is zero in every other row.  Deterministic:
/// pivot = first nonzero column in canonical order, no magnitude
/// heuristics (exact arithmetic needs none).
struct Rref {
  std::vector<SparseVec> rows;
  std::vector<int> pivot_cols;  // ascending, parallel to rows

  int rank() const { return static_cast<int>(rows.size()); }
};

/// Compute the (unique) RREF of the span of `rows`.
Rref rref(const std::vector<SparseVec>& rows, int ncols);

/// Reduce `v` against an RREF; the remainder is zero iff v lies in the
/// row span.
SparseVec reduce_against(const Rref& r, SparseVec v);

/// Kernel basis of the system whose RREF is `r`: one canonical vector per
/// free column f, with v[f] = 1 and v[pivot_col] = -R[pivot_row, f].
std::vector<SparseVec> kernel_basis(const Rref& r, int ncols);

/// Rank of a list of vectors.
int rank_of(const std::vector<SparseVec>& vectors, int ncols);

/// Kernel of a LinearSystem, via canonical RREF.
SolutionSpace solve_exact(const LinearSystem& sys);

/// Row-vector product A[i] . v for exact verification.
Rational dot(const SparseVec& row, const SparseVec& v);

}  // namespace superbialg
