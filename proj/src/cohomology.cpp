#include "superbialg/cohomology.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace superbialg {

void validate(const DerivationSpec& spec) {
  if (spec.parity != 0 && spec.parity != 1) {
    throw WindowError("derivation parity must be 0 or 1");
  }
  if (spec.domain_bound < 1 || spec.target_bound < 1 ||
      spec.equation_bound < 1) {
    throw WindowError("window bounds must be positive");
  }
  if (spec.equation_bound > spec.domain_bound) {
    throw WindowError("equation_bound must not exceed domain_bound");
  }
  if (2 * spec.equation_bound > spec.domain_bound) {
    throw WindowError(
        "bracket images of equation pairs exceed domain_bound (need "
        "2*equation_bound <= domain_bound)");
  }
  if (spec.target_bound - spec.equation_bound < 1) {
    throw WindowError("interior band is empty (need target_bound - "
                      "equation_bound >= 1)");
  }
}

std::vector<Key2> tensor_keys(HalfInt degree, int parity, long bound) {
  std::vector<Key2> out;
  const long tb = 2 * bound;
  for (const Generator& g1 : generators_up_to(HalfInt(bound))) {
    const long tw2 = degree.twice() - g1.index.twice();
    if (tw2 < -tb || tw2 > tb) continue;
    for (Kind kind : {Kind::L, Kind::T, Kind::G}) {
      if (!is_valid_generator(kind, HalfInt::from_twice(tw2))) continue;
      Generator g2{kind, HalfInt::from_twice(tw2)};
      if ((g1.parity() + g2.parity()) % 2 == parity) {
        out.emplace_back(g1, g2);
      }
    }
  }
  return out;  // enumeration order == canonical order
}

namespace {

/// Column layout: unknown list plus exact lookup.
struct Columns {
  std::vector<std::pair<Generator, Key2>> unknowns;
  std::map<std::pair<Generator, Key2>, int> index;

  int at(const Generator& w, const Key2& k) const {
    auto it = index.find({w, k});
    return it == index.end() ? -1 : it->second;
  }
};

Columns make_columns(const DerivationSpec& spec) {
  Columns cols;
  for (const Generator& w : generators_up_to(HalfInt(spec.domain_bound))) {
    for (const Key2& k :
         tensor_keys(spec.degree + w.degree(), (spec.parity + w.parity()) % 2,
                     spec.target_bound)) {
      cols.index.emplace(std::make_pair(w, k),
                         static_cast<int>(cols.unknowns.size()));
      cols.unknowns.emplace_back(w, k);
    }
  }
  return cols;
}

bool within(const Key2& k, long bound) {
  return k.first.index.abs() <= HalfInt(bound) &&
         k.second.index.abs() <= HalfInt(bound);
}

SparseVec to_sparse(const std::map<int, Rational>& entries) {
  SparseVec row;
  row.reserve(entries.size());
  for (const auto& [c, v] : entries) {
    if (!v.is_zero()) row.emplace_back(c, v);
  }
  return row;
}

}  // namespace

LinearSystem build_derivation_system(const DerivationSpec& spec) {
  validate(spec);
  Columns cols = make_columns(spec);
  const long band = spec.target_bound - spec.equation_bound;

  LinearSystem sys;
  sys.unknowns = cols.unknowns;
  sys.ncols = static_cast<int>(cols.unknowns.size());

  const auto egens = generators_up_to(HalfInt(spec.equation_bound));
  for (std::size_t i = 0; i < egens.size(); ++i) {
    for (std::size_t j = i; j < egens.size(); ++j) {
      const Generator& x = egens[i];
      const Generator& y = egens[j];
      if (i == j && x.parity() == 0) continue;  // [x,x]=0 and terms cancel
      const Rational s1(spec.parity && x.parity() ? -1 : 1);
      const Rational s2(
          y.parity() && (spec.parity + x.parity()) % 2 ? -1 : 1);

      std::map<Key2, std::map<int, Rational>> block;
      // d([x,y]): one unknown block per bracket term.
      for (const auto& [z, cz] : bracket_basis(x, y)) {
        for (const Key2& k :
             tensor_keys(spec.degree + z.degree(),
                         (spec.parity + z.parity()) % 2, spec.target_bound)) {
          if (!within(k, band)) continue;
          block[k][cols.at(z, k)] += cz;
        }
      }
      // -(-1)^{[d][x]} x * d(y)
      for (const Key2& k :
           tensor_keys(spec.degree + y.degree(),
                       (spec.parity + y.parity()) % 2, spec.target_bound)) {
        const int c = cols.at(y, k);
        for (const auto& [kk, cv] : act2_basis(x, k)) {
          if (within(kk, band)) block[kk][c] -= s1 * cv;
        }
      }
      // +(-1)^{[y]([d]+[x])} y * d(x)
      for (const Key2& k :
           tensor_keys(spec.degree + x.degree(),
                       (spec.parity + x.parity()) % 2, spec.target_bound)) {
        const int c = cols.at(x, k);
        for (const auto& [kk, cv] : act2_basis(y, k)) {
          if (within(kk, band)) block[kk][c] += s2 * cv;
        }
      }
      for (const auto& [kappa, entries] : block) {
        SparseVec row = to_sparse(entries);
        if (!row.empty()) sys.rows.push_back(std::move(row));
      }
    }
  }
  return sys;
}

std::vector<SparseVec> inner_vectors(const DerivationSpec& spec) {
  validate(spec);
  Columns cols = make_columns(spec);
  std::vector<SparseVec> out;
  for (const Key2& u : tensor_keys(spec.degree, spec.parity,
                                   spec.target_bound)) {
    std::map<int, Rational> entries;
    for (const Generator& w : generators_up_to(HalfInt(spec.domain_bound))) {
      const Rational s(spec.parity && w.parity() ? -1 : 1);
      for (const auto& [kk, cv] : act2_basis(w, u)) {
        const int c = cols.at(w, kk);
        if (c >= 0) entries[c] += s * cv;  // keys beyond target are dropped
      }
    }
    out.push_back(to_sparse(entries));
  }
  return out;
}

SolutionSpace inner_space(const DerivationSpec& spec) {
  Columns cols = make_columns(spec);
  Rref r = rref(inner_vectors(spec), static_cast<int>(cols.unknowns.size()));
  SolutionSpace out;
  out.dimension = r.rank();
  out.basis = std::move(r.rows);
  return out;
}

std::vector<int> comparison_columns(const DerivationSpec& spec,
                                    const LinearSystem& sys) {
  std::vector<int> out;
  const HalfInt eq(spec.equation_bound);
  const long band = spec.target_bound - spec.equation_bound;
  const long inner_band = spec.target_bound - 2 * spec.equation_bound;
  for (int c = 0; c < sys.ncols; ++c) {
    const auto& [w, k] = sys.unknowns[static_cast<std::size_t>(c)];
    const HalfInt aw = w.index.abs();
    if (aw <= eq) {
      if (within(k, band)) out.push_back(c);
    } else if (aw <= eq + eq) {
      if (within(k, inner_band)) out.push_back(c);
    }
  }
  return out;
}

namespace {

SparseVec project(const SparseVec& v, const std::vector<int>& cols) {
  SparseVec out;
  for (const auto& [c, val] : v) {
    if (std::binary_search(cols.begin(), cols.end(), c)) {
      out.emplace_back(c, val);
    }
  }
  return out;
}

}  // namespace

H1Computation compute_h1(const DerivationSpec& spec) {
  H1Computation out;
  out.system = build_derivation_system(spec);
  out.derivations = solve_exact(out.system);

  const std::vector<SparseVec> inn = inner_vectors(spec);
  out.report.spec = spec;
  out.report.der_dim = out.derivations.dimension;
  out.report.inn_dim = rank_of(inn, out.system.ncols);

  const std::vector<int> cmp = comparison_columns(spec, out.system);
  std::vector<SparseVec> inn_proj;
  inn_proj.reserve(inn.size());
  for (const SparseVec& v : inn) inn_proj.push_back(project(v, cmp));
  Rref inn_rref = rref(inn_proj, out.system.ncols);

  // Quotient by one stacked elimination: extend the inner RREF with the
  // projected kernel vectors and count the extra pivots.
  std::vector<SparseVec> stacked = inn_proj;
  for (const SparseVec& v : out.derivations.basis) {
    SparseVec p = project(v, cmp);
    if (!reduce_against(inn_rref, p).empty()) {
      out.report.residuals.push_back(v);
    }
    stacked.push_back(std::move(p));
  }
  out.report.quotient_dim =
      rank_of(stacked, out.system.ncols) - inn_rref.rank();
  return out;
}

H1Report h1_report(const DerivationSpec& spec) {
  return compute_h1(spec).report;
}

bool check_claim1(const DerivationSpec& spec, const SparseVec& solution) {
  validate(spec);
  if (spec.degree == HalfInt(0)) {
    throw DegreeZeroError("check_claim1 requires nonzero degree");
  }
  Columns cols = make_columns(spec);
  std::map<int, Rational> val;
  for (const auto& [c, v] : solution) val[c] = v;
  const auto coeff_at = [&](int c) {
    auto it = val.find(c);
    return it == val.end() ? Rational(0) : it->second;
  };

  // u = -(1/degree) d(L[0])
  const Generator l0{Kind::L, HalfInt(0)};
  const Rational inv_deg = Rational(spec.degree).inverse();
  Tensor2 u;
  for (const Key2& k :
       tensor_keys(spec.degree, spec.parity, spec.target_bound)) {
    u.add_term(k, -coeff_at(cols.at(l0, k)) * inv_deg);
  }

  const long band = spec.target_bound - spec.equation_bound;
  const long inner_band = spec.target_bound - 2 * spec.equation_bound;
  const HalfInt eq(spec.equation_bound);
  for (const Generator& w :
       generators_up_to(HalfInt(2 * spec.equation_bound))) {
    const Rational s(spec.parity && w.parity() ? -1 : 1);
    Tensor2 uinn = act2(Element::single(w), u).scaled(s);
    const long lim = w.index.abs() <= eq ? band : inner_band;
    for (const Key2& k :
         tensor_keys(spec.degree + w.degree(), (spec.parity + w.parity()) % 2,
                     spec.target_bound)) {
      if (!within(k, lim)) continue;
      if (coeff_at(cols.at(w, k)) != uinn.coeff(k)) return false;
    }
  }
  return true;
}

}  // namespace superbialg
