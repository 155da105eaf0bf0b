#include "superbialg/algebra.hpp"

#include <algorithm>

namespace superbialg {

namespace {
bool g_corrupt = false;
}  // namespace

void set_corrupt_structure_constants(bool enabled) { g_corrupt = enabled; }
bool corrupt_structure_constants_enabled() { return g_corrupt; }

Element bracket_basis(const Generator& a, const Generator& b) {
  const HalfInt m = a.index;
  const HalfInt n = b.index;
  const HalfInt sum = m + n;

  if (a.kind == Kind::L && b.kind == Kind::L) {
    Rational c = Rational(m - n);
    if (g_corrupt) c += Rational(1);  // deliberate fault for failing-mode tests
    if (c.is_zero()) return Element{};
    return Element::single(Generator{Kind::L, sum}, c);
  }
  if (a.kind == Kind::L && b.kind == Kind::T) {
    Rational c = -Rational(n);
    if (c.is_zero()) return Element{};
    return Element::single(Generator{Kind::T, sum}, c);
  }
  if (a.kind == Kind::T && b.kind == Kind::T) {
    return Element{};
  }
  if (a.kind == Kind::L && b.kind == Kind::G) {
    // coefficient m/2 - p
    Rational c = Rational(m.twice(), 4) - Rational(n);
    if (c.is_zero()) return Element{};
    return Element::single(Generator{Kind::G, sum}, c);
  }
  if (a.kind == Kind::T && b.kind == Kind::G) {
    return Element::single(Generator{Kind::G, sum}, Rational(1));
  }
  if (a.kind == Kind::G && b.kind == Kind::G) {
    // (-1)^{2p} for p = m: +1 when p is an integer, -1 when half-odd.
    Rational sign(m.is_integer() ? 1 : -1);
    if (sum.is_integer()) {
      return Element::single(Generator{Kind::L, sum}, sign * Rational(2));
    }
    Rational c = -sign * Rational(m - n);
    if (c.is_zero()) return Element{};
    return Element::single(Generator{Kind::T, sum}, c);
  }

  // Unlisted order: [a,b] = -(-1)^{[a][b]} [b,a].  Only TL, GL, GT reach
  // this point, and none of them is odd-odd, so the sign is always -1.
  Rational swap_sign(a.parity() && b.parity() ? 1 : -1);
  return bracket_basis(b, a).scaled(swap_sign);
}

Element bracket(const Element& x, const Element& y) {
  Element out;
  for (const auto& [gx, cx] : x) {
    for (const auto& [gy, cy] : y) {
      out.add_scaled(bracket_basis(gx, gy), cx * cy);
    }
  }
  return out;
}

Element jacobi_defect(const Element& x, const Element& y, const Element& z) {
  int px = require_homogeneous(x, "jacobi_defect");
  int py = require_homogeneous(y, "jacobi_defect");
  require_homogeneous(z, "jacobi_defect");
  Element out = bracket(x, bracket(y, z));
  out.add_scaled(bracket(bracket(x, y), z), Rational(-1));
  out.add_scaled(bracket(y, bracket(x, z)), Rational(px && py ? 1 : -1));
  return out;
}

std::vector<Generator> generators_up_to(HalfInt bound) {
  std::vector<Generator> out;
  const long tb = bound.twice();
  for (Kind kind : {Kind::L, Kind::T, Kind::G}) {
    for (long tw = -tb; tw <= tb; ++tw) {
      if (is_valid_generator(kind, HalfInt::from_twice(tw))) {
        out.push_back(Generator{kind, HalfInt::from_twice(tw)});
      }
    }
  }
  return out;  // loop order == canonical order
}

std::vector<Generator> generators_by_abs_index(HalfInt bound) {
  std::vector<Generator> out = generators_up_to(bound);
  std::stable_sort(out.begin(), out.end(),
                   [](const Generator& a, const Generator& b) {
                     return a.index.abs() < b.index.abs();
                   });
  return out;
}

}  // namespace superbialg
