#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace logdist {

/// Exact rationals. gmpxx keeps results canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

bool is_prime(std::int64_t p);

/// p^e with overflow detection; throws std::overflow_error.
std::int64_t int_pow(std::int64_t base, int exp);

/// Parses "num/den" or "num". The result is canonicalized; a zero
/// denominator throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// "num/den", with "/den" omitted when den == 1.
std::string to_string(const Rational& r);

/// A p-adic valuation: an exact rational or +infinity.
class ExtValuation {
 public:
  ExtValuation(Rational value) : value_(std::move(value)) {}
  ExtValuation(long value) : value_(Rational(value)) {}

  static ExtValuation infinity() { return ExtValuation(); }

  bool is_infinite() const { return !value_.has_value(); }

  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  friend ExtValuation operator+(const ExtValuation& a, const ExtValuation& b);
  friend ExtValuation operator-(const ExtValuation& a, const Rational& shift);
  friend ExtValuation operator*(const Rational& scale, const ExtValuation& v);

  friend bool operator==(const ExtValuation& a, const ExtValuation& b);
  friend std::weak_ordering operator<=>(const ExtValuation& a,
                                        const ExtValuation& b);

  friend std::ostream& operator<<(std::ostream& os, const ExtValuation& v);

 private:
  ExtValuation() = default;
  std::optional<Rational> value_;
};

std::string to_string(const ExtValuation& v);

ExtValuation min(const ExtValuation& a, const ExtValuation& b);

/// Exponent of p in r, normalized so v_p(p) = 1. Rejects non-prime p.
ExtValuation vp(const Rational& r, std::int64_t p);

/// Exponent of p in a nonzero integer; +infinity for zero.
ExtValuation vp(const Integer& z, std::int64_t p);

}  // namespace logdist
