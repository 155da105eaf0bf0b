#include "superbialg/linsys.hpp"

#include <algorithm>
#include <map>

namespace superbialg {

void axpy(SparseVec& dst, const SparseVec& src, const Rational& scale) {
  if (scale.is_zero() || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() && b != src.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.emplace_back(b->first, b->second * scale);
      ++b;
    } else {
      Rational c = a->second + b->second * scale;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, dst.end());
  for (; b != src.end(); ++b) out.emplace_back(b->first, b->second * scale);
  dst = std::move(out);
}

Rational dot(const SparseVec& row, const SparseVec& v) {
  Rational out(0);
  auto a = row.begin();
  auto b = v.begin();
  while (a != row.end() && b != v.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      out += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return out;
}

namespace {

/// Scale so the leading coefficient becomes 1.
void normalize_leading(SparseVec& row) {
  if (row.empty()) return;
  Rational inv = row.front().second.inverse();
  if (inv == Rational(1)) return;
  for (auto& [c, v] : row) v *= inv;
}

}  // namespace

Rref rref(const std::vector<SparseVec>& rows, int ncols) {
  (void)ncols;
  // Process rows sparsest-first: short rows become pivots with little
  // fill-in, and the reduced form is unique, so the processing order only
  // affects speed, never the result.
  std::vector<const SparseVec*> order;
  order.reserve(rows.size());
  for (const SparseVec& r : rows)
    if (!r.empty()) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const SparseVec* a, const SparseVec* b) {
                     return a->size() < b->size();
                   });
  // Forward elimination: pivots keyed by column.
  std::map<int, SparseVec> pivots;
  for (const SparseVec* input : order) {
    SparseVec row = *input;
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        normalize_leading(row);
        pivots.emplace(lead, std::move(row));
        break;
      }
      axpy(row, it->second, -row.front().second);
    }
  }
  // Back substitution, descending pivot order: clear every pivot column
  // above its row, yielding the unique RREF.  Rows already processed are
  // fully reduced, so their support is their own pivot plus free columns;
  // subtracting them cancels one pivot entry and adds only free-column
  // fill.  The pivot entries to clear are therefore fixed up front, and
  // one map-based accumulation replaces repeated pairwise merges.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseVec& row = it->second;
    bool any_pivot_entry = false;
    std::map<int, Rational> acc;
    for (std::size_t i = 1; i < row.size(); ++i) {
      auto p = pivots.find(row[i].first);
      if (p == pivots.end()) {
        acc[row[i].first] += row[i].second;
        continue;
      }
      any_pivot_entry = true;
      const Rational& scale = row[i].second;
      const SparseVec& reduced = p->second;
      for (std::size_t j = 1; j < reduced.size(); ++j)
        acc[reduced[j].first] -= scale * reduced[j].second;
    }
    if (!any_pivot_entry) continue;
    SparseVec rebuilt;
    rebuilt.reserve(acc.size() + 1);
    rebuilt.emplace_back(it->first, Rational(1));
    for (auto& [col, val] : acc)
      if (!val.is_zero()) rebuilt.emplace_back(col, std::move(val));
    row = std::move(rebuilt);
  }
  Rref out;
  out.rows.reserve(pivots.size());
  out.pivot_cols.reserve(pivots.size());
  for (auto& [col, row] : pivots) {
    out.pivot_cols.push_back(col);
    out.rows.push_back(std::move(row));
  }
  return out;
}

SparseVec reduce_against(const Rref& r, SparseVec v) {
  // Pivot columns are sorted; walk v and cancel any entry sitting in a
  // pivot column.
  for (std::size_t i = 0; i < v.size();) {
    auto it = std::lower_bound(r.pivot_cols.begin(), r.pivot_cols.end(),
                               v[i].first);
    if (it == r.pivot_cols.end() || *it != v[i].first) {
      ++i;
      continue;
    }
    std::size_t idx = static_cast<std::size_t>(it - r.pivot_cols.begin());
    axpy(v, r.rows[idx], -v[i].second);
    // The cancelled column disappears; entries before position i are
    // untouched because r.rows[idx] leads at v[i].first.
  }
  return v;
}

std::vector<SparseVec> kernel_basis(const Rref& r, int ncols) {
  std::vector<SparseVec> basis;
  // Map pivot column -> row index for the free-column construction.
  std::size_t next_pivot = 0;
  for (int col = 0; col < ncols; ++col) {
    if (next_pivot < r.pivot_cols.size() && r.pivot_cols[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    // Free column: kernel vector with 1 at col, -R[p][col] at each pivot.
    SparseVec v;
    for (std::size_t p = 0; p < r.rows.size(); ++p) {
      if (r.pivot_cols[p] >= col) break;
      auto it = std::lower_bound(
          r.rows[p].begin(), r.rows[p].end(), col,
          [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
      if (it != r.rows[p].end() && it->first == col) {
        v.emplace_back(r.pivot_cols[p], -it->second);
      }
    }
    v.emplace_back(col, Rational(1));
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of(const std::vector<SparseVec>& vectors, int ncols) {
  return rref(vectors, ncols).rank();
}

SolutionSpace solve_exact(const LinearSystem& sys) {
  Rref r = rref(sys.rows, sys.ncols);
  SolutionSpace out;
  out.basis = kernel_basis(r, sys.ncols);
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace superbialg
