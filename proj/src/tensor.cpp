#include "superbialg/tensor.hpp"

namespace superbialg {

Tensor2 twist_tau(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t) {
    Rational sign(k.first.parity() && k.second.parity() ? -1 : 1);
    out.add_term(Key2{k.second, k.first}, c * sign);
  }
  return out;
}

Tensor3 cyclic_xi(const Tensor3& t) {
  Tensor3 out;
  for (const auto& [k, c] : t) {
    const auto& [x1, x2, x3] = k;
    int s = x1.parity() * ((x2.parity() + x3.parity()) % 2);
    out.add_term(Key3{x2, x3, x1}, c * Rational(s ? -1 : 1));
  }
  return out;
}

Tensor2 act2_basis(const Generator& x, const Key2& k) {
  Tensor2 out;
  for (const auto& [g, c] : bracket_basis(x, k.first)) {
    out.add_term(Key2{g, k.second}, c);
  }
  Rational sign(x.parity() && k.first.parity() ? -1 : 1);
  for (const auto& [g, c] : bracket_basis(x, k.second)) {
    out.add_term(Key2{k.first, g}, c * sign);
  }
  return out;
}

Tensor3 act3_basis(const Generator& x, const Key3& k) {
  Tensor3 out;
  const auto& [a, b, c3] = k;
  for (const auto& [g, c] : bracket_basis(x, a)) {
    out.add_term(Key3{g, b, c3}, c);
  }
  Rational s1(x.parity() && a.parity() ? -1 : 1);
  for (const auto& [g, c] : bracket_basis(x, b)) {
    out.add_term(Key3{a, g, c3}, c * s1);
  }
  Rational s2(x.parity() && (a.parity() + b.parity()) % 2 ? -1 : 1);
  for (const auto& [g, c] : bracket_basis(x, c3)) {
    out.add_term(Key3{a, b, g}, c * s2);
  }
  return out;
}

Tensor2 act2(const Element& x, const Tensor2& t) {
  require_homogeneous(x, "act2");
  Tensor2 out;
  for (const auto& [gx, cx] : x) {
    for (const auto& [k, c] : t) {
      out.add_scaled(act2_basis(gx, k), cx * c);
    }
  }
  return out;
}

Tensor3 act3(const Element& x, const Tensor3& t) {
  require_homogeneous(x, "act3");
  Tensor3 out;
  for (const auto& [gx, cx] : x) {
    for (const auto& [k, c] : t) {
      out.add_scaled(act3_basis(gx, k), cx * c);
    }
  }
  return out;
}

bool is_super_skew(const Tensor2& t) {
  return (t + twist_tau(t)).is_zero();
}

Tensor2 skew_project(const Tensor2& t) {
  Tensor2 out = t - twist_tau(t);
  return out.scaled(Rational(1, 2));
}

}  // namespace superbialg
