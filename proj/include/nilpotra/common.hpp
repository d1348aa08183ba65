/// @file common.hpp
/// @brief Shared scalar type and error hierarchy for the nilpotra kit.
///
/// Every failure mode the library reports maps onto one of four error
/// categories, mirrored by the CLI exit codes:
///   parse_error     -> malformed textual input (exit 2)
///   resource_error  -> a configured cap was exceeded (exit 3)
///   domain_error    -> a precondition violation (exit 4)
///   internal_error  -> a broken internal certificate; always a bug, never
///                      a consequence of user input.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilpotra {

/// Arbitrary-precision signed integer used for all normal-form exponents.
using Int = boost::multiprecision::cpp_int;

/// Base class for everything the kit throws on purpose.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (word grammar, endomorphism clauses, JSON).
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

/// A configured resource cap (word length, Witt count) was exceeded.
class resource_error : public error {
 public:
  using error::error;
};

/// A documented precondition was violated (bad rank/class, context
/// mismatch, exponent overflow, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// Two values from different group contexts were combined.
class context_mismatch : public domain_error {
 public:
  using domain_error::domain_error;
};

/// An operation that requires an automorphism received a non-automorphism.
class not_an_automorphism : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A self-check inside the library failed.  Seeing this means the kit has
/// a bug; results produced before the throw are still trustworthy because
/// the certificates are checked before returning.
class internal_error : public error {
 public:
  using error::error;
};

/// Generalized binomial coefficient C(e, j) for integer (possibly negative)
/// e and small j >= 0.  Always an exact integer.
inline Int binomial(const Int& e, int j) {
  Int num = 1;
  for (int i = 0; i < j; ++i) num *= e - i;
  Int den = 1;
  for (int i = 2; i <= j; ++i) den *= i;
  Int q = num / den;
  if (q * den != num)
    throw internal_error("binomial: non-integral quotient");
  return q;
}

}  // namespace nilpotra
