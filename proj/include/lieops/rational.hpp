#ifndef LIEOPS_RATIONAL_HPP
#define LIEOPS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lieops {

/// Arbitrary precision rational; always kept in canonical form.
using Rational = mpq_class;
/// Arbitrary precision integer.
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;

/// Thrown for malformed user input (specs, weights, flags).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates an operation precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a configured enumeration bound would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold failed to hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Requires `q` integral and fitting in a long.
long to_long(const Rational& q);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses a comma separated list of integers; empty text gives an empty list.
std::vector<long> parse_int_list(std::string_view text);

/// Lexicographic comparison of equal-length rational vectors.
bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace lieops

#endif  // LIEOPS_RATIONAL_HPP
