#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace superbialg {

/// Exact half-integer, stored as twice its value.  The representation makes
/// the index domains of the algebra checkable by parity of the stored
/// integer: integers have even `twice()`, half-odd integers odd `twice()`.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  constexpr HalfInt(long whole) : twice_(2 * whole) {}  // NOLINT: implicit

  /// Value t/2 from its doubled representation.
  static constexpr HalfInt from_twice(long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const {
    return from_twice(twice_ + o.twice_);
  }
  constexpr HalfInt operator-(HalfInt o) const {
    return from_twice(twice_ - o.twice_);
  }

  constexpr HalfInt abs() const {
    return from_twice(twice_ < 0 ? -twice_ : twice_);
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// Canonical text: `n` for integers, `n/2` (n odd) otherwise.
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  long twice_;
};

/// Half of an odd (or even) integer: half_of(3) = 3/2.
constexpr HalfInt half_of(long numerator) {
  return HalfInt::from_twice(numerator);
}

}  // namespace superbialg
