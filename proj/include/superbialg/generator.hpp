#pragma once

#include <compare>
#include <string>
#include <vector>

#include "superbialg/errors.hpp"
#include "superbialg/halfint.hpp"

namespace superbialg {

/// Basis-symbol kind.  The enumeration order L < T < G fixes the canonical
/// ordering of generators (and hence of all printed output).
enum class Kind : unsigned char { L = 0, T = 1, G = 2 };

inline char kind_letter(Kind k) {
  switch (k) {
    case Kind::L:
      return 'L';
    case Kind::T:
      return 'T';
    default:
      return 'G';
  }
}

/// One basis symbol of the algebra: L_m (m integer), T_r (r half-odd),
/// G_p (p any half-integer).  L and T are even, G is odd; the degree of a
/// generator is its index (L_0 acts on degree-j elements as multiplication
/// by -j).
struct Generator {
  Kind kind = Kind::L;
  HalfInt index{};

  int parity() const { return kind == Kind::G ? 1 : 0; }
  HalfInt degree() const { return index; }

  auto operator<=>(const Generator&) const = default;

  std::string to_string() const {
    return std::string(1, kind_letter(kind)) + "[" + index.to_string() + "]";
  }
};

/// True iff `index` lies in the allowed domain for `kind`.
inline bool is_valid_generator(Kind kind, HalfInt index) {
  switch (kind) {
    case Kind::L:
      return index.is_integer();
    case Kind::T:
      return index.is_half_odd();
    default:
      return true;
  }
}

/// Validated construction; throws IndexDomainError on a kind/index mismatch.
inline Generator make_generator(Kind kind, HalfInt index) {
  if (!is_valid_generator(kind, index)) {
    Generator g{kind, index};
    throw IndexDomainError("invalid generator index " + g.to_string() +
                           (kind == Kind::L ? " (L needs an integer index)"
                                            : " (T needs a half-odd index)"));
  }
  return Generator{kind, index};
}

/// All generators with |index| <= bound, in canonical order
/// (kind L < T < G, then index ascending).
std::vector<Generator> generators_up_to(HalfInt bound);

/// All generators with |index| <= bound, ordered by ascending |index| and
/// canonically within ties; the deterministic search order for witnesses.
std::vector<Generator> generators_by_abs_index(HalfInt bound);

}  // namespace superbialg
