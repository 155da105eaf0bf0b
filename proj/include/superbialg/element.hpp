#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "superbialg/errors.hpp"
#include "superbialg/generator.hpp"
#include "superbialg/rational.hpp"

namespace superbialg {

/// Key parity/degree: sums over tensor components.
inline int key_parity(const Generator& g) { return g.parity(); }
inline HalfInt key_degree(const Generator& g) { return g.degree(); }

using Key2 = std::pair<Generator, Generator>;
using Key3 = std::tuple<Generator, Generator, Generator>;

inline int key_parity(const Key2& k) {
  return (k.first.parity() + k.second.parity()) % 2;
}
inline HalfInt key_degree(const Key2& k) {
  return k.first.degree() + k.second.degree();
}
inline int key_parity(const Key3& k) {
  return (std::get<0>(k).parity() + std::get<1>(k).parity() +
          std::get<2>(k).parity()) %
         2;
}
inline HalfInt key_degree(const Key3& k) {
  return std::get<0>(k).degree() + std::get<1>(k).degree() +
         std::get<2>(k).degree();
}

/// Finite rational linear combination over canonically ordered basis keys.
/// Zero coefficients are never stored, so equality of values is exact map
/// equality.  Immutable in spirit: operations return new combinations.
template <typename Key>
class LinearCombo {
 public:
  using terms_map = std::map<Key, Rational>;

  LinearCombo() = default;

  static LinearCombo single(Key k, Rational c = Rational(1)) {
    LinearCombo out;
    out.add_term(std::move(k), std::move(c));
    return out;
  }

  /// Accumulate `c` onto the coefficient of `k`, dropping exact zeros.
  void add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombo& other, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add_term(k, c * scale);
  }

  LinearCombo operator+(const LinearCombo& o) const {
    LinearCombo out = *this;
    out.add_scaled(o, Rational(1));
    return out;
  }
  LinearCombo operator-(const LinearCombo& o) const {
    LinearCombo out = *this;
    out.add_scaled(o, Rational(-1));
    return out;
  }
  LinearCombo scaled(const Rational& s) const {
    LinearCombo out;
    out.add_scaled(*this, s);
    return out;
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const terms_map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool operator==(const LinearCombo&) const = default;

  /// Common parity of all keys; nullopt if mixed.  The zero combination is
  /// vacuously homogeneous of parity 0.
  std::optional<int> parity() const {
    std::optional<int> p;
    for (const auto& [k, c] : terms_) {
      int kp = key_parity(k);
      if (!p) {
        p = kp;
      } else if (*p != kp) {
        return std::nullopt;
      }
    }
    return p ? p : std::optional<int>(0);
  }

  /// Common degree of all keys; nullopt if mixed or zero combination.
  std::optional<HalfInt> degree() const {
    std::optional<HalfInt> d;
    for (const auto& [k, c] : terms_) {
      HalfInt kd = key_degree(k);
      if (!d) {
        d = kd;
      } else if (*d != kd) {
        return std::nullopt;
      }
    }
    return d;
  }

 private:
  terms_map terms_;
};

using Element = LinearCombo<Generator>;
using Tensor2 = LinearCombo<Key2>;
using Tensor3 = LinearCombo<Key3>;

/// Parity of a homogeneous combination, or HomogeneityError naming the
/// operation that needed it.
template <typename Key>
int require_homogeneous(const LinearCombo<Key>& v, const char* context) {
  auto p = v.parity();
  if (!p) {
    throw HomogeneityError(std::string(context) +
                           ": argument is not parity-homogeneous");
  }
  return *p;
}

}  // namespace superbialg
