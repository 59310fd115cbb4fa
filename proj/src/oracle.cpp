#include "logdist/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace logdist {

LaurentPoly LaurentPoly::from_polynomial(const PolyQ& f) {
  LaurentPoly r;
  for (std::size_t e = 0; e < f.size(); ++e) r.add_term(static_cast<std::int64_t>(e), f[e]);
  return r;
}

void LaurentPoly::add_term(std::int64_t exponent, const QuadElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuadElem LaurentPoly::coeff(std::int64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? QuadElem() : it->second;
}

std::int64_t LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

std::int64_t LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly LaurentPoly::shifted(std::int64_t shift) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& y) {
  for (const auto& [e, c] : y.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentMat to_laurent(const PolyMat2& m) {
  return m.unaryExpr([](const PolyQ& f) { return LaurentPoly::from_polynomial(f); });
}

bool within_root_sum_range(const LaurentPoly& f, std::int64_t p, int n) {
  const std::int64_t bound = int_pow(p, n);
  return f.is_zero() || (f.min_exponent() > -bound && f.max_exponent() < bound);
}

QuadElem constant_term_sum(const LaurentPoly& f, std::int64_t p, int n) {
  if (n < 1) throw std::invalid_argument("constant_term_sum: n must be >= 1");
  if (!within_root_sum_range(f, p, n)) {
    throw std::domain_error("constant_term_sum: exponents [" + std::to_string(f.min_exponent()) + ", " +
                            std::to_string(f.max_exponent()) + "] leave (-p^n, p^n) for p^n = " +
                            std::to_string(int_pow(p, n)));
  }
  return f.coeff(0) * QuadElem(Rational(int_pow(p, n)));
}

namespace {

template <class T>
T scalar_residue(std::vector<T> acc, std::int64_t p, int n) {
  reduce_cyclotomic(acc, p, n);
  for (std::size_t i = 1; i < acc.size(); ++i) {
    if (!is_zero(acc[i])) {
      throw std::logic_error("root-of-unity sum is not a scalar: nonzero x^" + std::to_string(i) +
                             " coefficient");
    }
  }
  return acc.empty() ? T(0) : acc[0];
}

QuadElem brute_force_generic(const std::vector<std::pair<std::int64_t, QuadElem>>& terms, std::int64_t p,
                             int n) {
  return scalar_residue(substitution_sum(terms, int_pow(p, n)), p, n);
}

Rational to_rational(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer z(static_cast<unsigned long>(mag >> 64));
  z <<= 64;
  z += Integer(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFull));
  return Rational(negative ? Integer(-z) : z);
}

// Exact integer route: scale the entry to a common denominator and run the
// same brute-force sum on machine integers. Returns nullopt when the
// numerators are too large for overflow-free __int128 accumulation.
std::optional<QuadElem> brute_force_integral(const std::vector<std::pair<std::int64_t, QuadElem>>& terms,
                                             std::int64_t p, int n, const std::optional<QuadRing>& ring) {
  const std::int64_t period = int_pow(p, n);
  if (period > (1 << 16)) return std::nullopt;
  Integer den = 1;
  for (const auto& [e, c] : terms) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.c0().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.c1().get_den_mpz_t());
  }
  constexpr long kLimit = 1L << 40;
  std::vector<std::pair<std::int64_t, __int128>> part0;
  std::vector<std::pair<std::int64_t, __int128>> part1;
  for (const auto& [e, c] : terms) {
    const Integer a = c.c0().get_num() * (den / c.c0().get_den());
    const Integer b = c.c1().get_num() * (den / c.c1().get_den());
    if (abs(a) >= kLimit || abs(b) >= kLimit) return std::nullopt;
    part0.emplace_back(e, static_cast<__int128>(a.get_si()));
    part1.emplace_back(e, static_cast<__int128>(b.get_si()));
  }
  const Rational c0 = to_rational(scalar_residue(substitution_sum(part0, period), p, n)) / den;
  const Rational c1 = to_rational(scalar_residue(substitution_sum(part1, period), p, n)) / den;
  if (sgn(c1) == 0) return QuadElem(c0);
  return QuadElem(c0, c1, *ring);
}

std::vector<std::pair<std::int64_t, QuadElem>> term_list(const LaurentPoly& f) {
  return {f.terms().begin(), f.terms().end()};
}

}  // namespace

QuadElem brute_force_root_sum(const LaurentPoly& f, std::int64_t p, int n) {
  if (n < 1) throw std::invalid_argument("brute_force_root_sum: n must be >= 1");
  return brute_force_generic(term_list(f), p, n);
}

PolyQ geometric_root_sum(std::int64_t k, std::int64_t p, int n) {
  std::vector<QuadElem> acc = substitution_sum<QuadElem>({{k, QuadElem(1)}}, int_pow(p, n));
  reduce_cyclotomic(acc, p, n);
  return PolyQ(std::move(acc));
}

namespace {

void check_coset(const HeckeData& ctx, std::int64_t b, int n) {
  if (n < 1 || n > ctx.n_max) {
    throw std::out_of_range("n must lie in [1, " + std::to_string(ctx.n_max) + "], got " + std::to_string(n));
  }
  const std::int64_t bound = int_pow(ctx.p, n);
  if (b < 0 || b >= bound) {
    throw std::out_of_range("b must lie in [0, p^n) = [0, " + std::to_string(bound) + "), got " +
                            std::to_string(b));
  }
}

}  // namespace

QuadMat2 mu_oracle(const HeckeData& ctx, std::int64_t b, int n) {
  check_coset(ctx, b, n);
  return mu_oracle(log_truncation(ctx, n), ctx, b, n);
}

QuadMat2 mu_oracle(const PolyMat2& log_n, const HeckeData& ctx, std::int64_t b, int n) {
  check_coset(ctx, b, n);
  const LaurentMat shifted =
      to_laurent(log_n).unaryExpr([b](const LaurentPoly& f) { return f.shifted(-b); });
  const Rational scale(int_pow(ctx.p, n));
  return shifted.unaryExpr([&](const LaurentPoly& f) { return constant_term_sum(f, ctx.p, n) / scale; });
}

QuadMat2 roots_of_unity_sum(const HeckeData& ctx, std::int64_t b, int n) {
  check_coset(ctx, b, n);
  return roots_of_unity_sum(log_truncation(ctx, n), ctx, b, n);
}

QuadMat2 roots_of_unity_sum(const PolyMat2& log_n, const HeckeData& ctx, std::int64_t b, int n) {
  check_coset(ctx, b, n);
  const Rational scale(int_pow(ctx.p, n));
  return log_n.unaryExpr([&](const PolyQ& f) {
    // ζ^{−b}·f(ζ) summed over ζ = x^j: the term c_e x^e contributes c_e x^{j(e−b)}.
    std::vector<std::pair<std::int64_t, QuadElem>> terms;
    for (std::size_t e = 0; e < f.size(); ++e) {
      if (!f[e].is_zero()) terms.emplace_back(static_cast<std::int64_t>(e) - b, f[e]);
    }
    const auto fast = brute_force_integral(terms, ctx.p, n, ctx.ring());
    QuadElem total = fast ? *fast : brute_force_generic(terms, ctx.p, n);
    return total / scale;
  });
}

}  // namespace logdist
