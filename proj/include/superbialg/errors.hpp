#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superbialg {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index lies outside the domain allowed for its kind
/// (L needs an integer index, T a half-odd one).
class IndexDomainError : public Error {
 public:
  using Error::Error;
};

/// An argument required to be parity-homogeneous has mixed parity
/// (or violates a parity precondition).
class HomogeneityError : public Error {
 public:
  using Error::Error;
};

/// An r-matrix fails the even/super-skew hypothesis of an operation.
class SkewnessError : public Error {
 public:
  using Error::Error;
};

/// A degree-0 derivation system was passed to an operation that
/// requires nonzero degree.
class DegreeZeroError : public Error {
 public:
  using Error::Error;
};

/// Truncation window bounds are inconsistent.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Text input does not match the expression grammar.  `position` is the
/// 1-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace superbialg
