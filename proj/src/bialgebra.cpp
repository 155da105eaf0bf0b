#include "superbialg/bialgebra.hpp"

namespace superbialg {

RMatrix make_rmatrix(Tensor2 value) {
  int parity = require_homogeneous(value, "make_rmatrix");
  return RMatrix{std::move(value), parity};
}

Tensor2 delta_r(const RMatrix& r, const Element& x) {
  int px = require_homogeneous(x, "delta_r");
  Rational sign(r.parity && px ? -1 : 1);
  return act2(x, r.value).scaled(sign);
}

Tensor3 bracket_12_13(const RMatrix& r, const RMatrix& s) {
  Tensor3 out;
  for (const auto& [ki, ci] : r.value) {
    const auto& [ai, bi] = ki;
    for (const auto& [kj, cj] : s.value) {
      const auto& [aj, bj] = kj;
      Rational sign(aj.parity() && bi.parity() ? -1 : 1);
      for (const auto& [g, c] : bracket_basis(ai, aj)) {
        out.add_term(Key3{g, bi, bj}, ci * cj * c * sign);
      }
    }
  }
  return out;
}

Tensor3 bracket_12_23(const RMatrix& r, const RMatrix& s) {
  Tensor3 out;
  for (const auto& [ki, ci] : r.value) {
    const auto& [ai, bi] = ki;
    for (const auto& [kj, cj] : s.value) {
      const auto& [aj, bj] = kj;
      for (const auto& [g, c] : bracket_basis(bi, aj)) {
        out.add_term(Key3{ai, g, bj}, ci * cj * c);
      }
    }
  }
  return out;
}

Tensor3 bracket_13_23(const RMatrix& r, const RMatrix& s) {
  Tensor3 out;
  for (const auto& [ki, ci] : r.value) {
    const auto& [ai, bi] = ki;
    for (const auto& [kj, cj] : s.value) {
      const auto& [aj, bj] = kj;
      Rational sign(aj.parity() && bi.parity() ? -1 : 1);
      for (const auto& [g, c] : bracket_basis(bi, bj)) {
        out.add_term(Key3{ai, aj, g}, ci * cj * c * sign);
      }
    }
  }
  return out;
}

Tensor3 cybe(const RMatrix& r) {
  Tensor3 out = bracket_12_13(r, r);
  out.add_scaled(bracket_12_23(r, r), Rational(1));
  out.add_scaled(bracket_13_23(r, r), Rational(1));
  return out;
}

std::vector<std::pair<Generator, Tensor3>> mybe_defects(const RMatrix& r,
                                                        WindowSpec window) {
  std::vector<std::pair<Generator, Tensor3>> out;
  const Tensor3 c = cybe(r);
  if (c.is_zero()) return out;
  for (const Generator& x : generators_by_abs_index(window.bound)) {
    Tensor3 d = act3(Element::single(x), c);
    if (!d.is_zero()) out.emplace_back(x, std::move(d));
  }
  return out;
}

Tensor3 one_tensor_delta(const RMatrix& r, const Tensor2& t) {
  if (r.parity != 0) {
    throw SkewnessError("one_tensor_delta: r must be even");
  }
  Tensor3 out;
  for (const auto& [k, c] : t) {
    Tensor2 db = delta_r(r, Element::single(k.second));
    for (const auto& [kd, cd] : db) {
      out.add_term(Key3{k.first, kd.first, kd.second}, c * cd);
    }
  }
  return out;
}

Tensor3 cojacobi_identity_defect(const RMatrix& r, const Element& x) {
  if (r.parity != 0 || !is_super_skew(r.value)) {
    throw SkewnessError(
        "cojacobi_identity_defect: r must be even and super-skew");
  }
  require_homogeneous(x, "cojacobi_identity_defect");
  Tensor3 lhs = one_tensor_delta(r, delta_r(r, x));
  Tensor3 x1 = cyclic_xi(lhs);
  Tensor3 x2 = cyclic_xi(x1);
  lhs.add_scaled(x1, Rational(1));
  lhs.add_scaled(x2, Rational(1));
  lhs.add_scaled(act3(x, cybe(r)), Rational(-1));
  return lhs;
}

Tensor2 mixed_compat_defect(const RMatrix& r, const Element& x,
                            const Element& y) {
  if (r.parity != 0) {
    throw HomogeneityError("mixed_compat_defect: r must be even");
  }
  int px = require_homogeneous(x, "mixed_compat_defect");
  int py = require_homogeneous(y, "mixed_compat_defect");
  Tensor2 out = delta_r(r, bracket(x, y));
  out.add_scaled(act2(x, delta_r(r, y)), Rational(-1));
  out.add_scaled(act2(y, delta_r(r, x)), Rational(px && py ? -1 : 1));
  return out;
}

ClassifyReport classify_r(const RMatrix& r, WindowSpec window) {
  if (r.parity != 0) {
    throw SkewnessError("classify_r: classification is defined for even r");
  }
  ClassifyReport report;
  report.window = window;
  report.skew = is_super_skew(r.value);
  report.cybe_zero = cybe(r).is_zero();
  auto defects = mybe_defects(r, window);
  report.mybe_window_clean = defects.empty();
  if (!defects.empty()) report.witness = defects.front();
  return report;
}

}  // namespace superbialg
