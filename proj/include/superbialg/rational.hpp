#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

#include "superbialg/halfint.hpp"

namespace superbialg {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.  Backed by GMP's mpq_class; the wrapper exists to
/// guarantee canonicalization on construction (mpq_class(n, d) alone does
/// not reduce) and to pin the printing format.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(HalfInt h) : Rational(h.twice(), 2) {}

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return wrap(-v_); }
  Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return wrap(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  Rational abs() const { return wrap(::abs(v_)); }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return wrap(1 / v_);
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical text: `a` for integers, `a/b` (b > 1) otherwise.
  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  // mpq_class arithmetic preserves canonical form, so results need no
  // re-canonicalization.
  static Rational wrap(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  mpq_class v_;
};

}  // namespace superbialg
