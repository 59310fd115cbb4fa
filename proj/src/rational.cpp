#include "logdist/rational.hpp"

#include <limits>
#include <stdexcept>

namespace logdist {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t int_pow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw std::overflow_error("int_pow: " + std::to_string(base) + "^" +
                                std::to_string(exp) + " overflows int64");
    }
  }
  return result;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  try {
    num = Integer(text.substr(0, slash), 10);
    if (slash != std::string::npos) den = Integer(text.substr(slash + 1), 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational canonical = r;
  canonical.canonicalize();
  return canonical.get_str(10);
}

const Rational& ExtValuation::value() const {
  if (!value_) throw std::logic_error("ExtValuation: value of +infinity");
  return *value_;
}

ExtValuation operator+(const ExtValuation& a, const ExtValuation& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtValuation::infinity();
  return ExtValuation(Rational(*a.value_ + *b.value_));
}

ExtValuation operator-(const ExtValuation& a, const Rational& shift) {
  if (a.is_infinite()) return a;
  return ExtValuation(Rational(*a.value_ - shift));
}

ExtValuation operator*(const Rational& scale, const ExtValuation& v) {
  if (v.is_infinite()) {
    if (scale <= 0) throw std::domain_error("ExtValuation: non-positive multiple of infinity");
    return v;
  }
  return ExtValuation(Rational(scale * *v.value_));
}

bool operator==(const ExtValuation& a, const ExtValuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

std::weak_ordering operator<=>(const ExtValuation& a, const ExtValuation& b) {
  if (a.is_infinite() && b.is_infinite()) return std::weak_ordering::equivalent;
  if (a.is_infinite()) return std::weak_ordering::greater;
  if (b.is_infinite()) return std::weak_ordering::less;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::weak_ordering::less;
  if (c > 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const ExtValuation& v) {
  return os << to_string(v);
}

std::string to_string(const ExtValuation& v) {
  return v.is_infinite() ? std::string("inf") : to_string(v.value());
}

ExtValuation min(const ExtValuation& a, const ExtValuation& b) {
  return b < a ? b : a;
}

namespace {

long count_factor(const Integer& z, std::int64_t p) {
  Integer rest;
  const Integer prime(static_cast<long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("valuation requires a prime, got " + std::to_string(p));
  }
}

}  // namespace

ExtValuation vp(const Integer& z, std::int64_t p) {
  require_prime(p);
  if (z == 0) return ExtValuation::infinity();
  return ExtValuation(count_factor(z, p));
}

ExtValuation vp(const Rational& r, std::int64_t p) {
  require_prime(p);
  if (r == 0) return ExtValuation::infinity();
  return ExtValuation(count_factor(r.get_num(), p) - count_factor(r.get_den(), p));
}

}  // namespace logdist
