#pragma once

// Exact integer and rational scalars backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace motzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base error for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (violated precondition).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration refused because the estimated work exceeds the budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, Integer estimate)
      : Error(what), estimate_(std::move(estimate)) {}
  const Integer& estimate() const { return estimate_; }

 private:
  Integer estimate_;
};

Integer ipow(const Integer& base, unsigned long exp);

/// base^exp for any integer exp; base must be nonzero when exp < 0.
Rational rpow(const Rational& base, long exp);

/// "a" or "a/b" in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "a", "-a", "a/b" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

}  // namespace motzeta
