#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "logdist/logmatrix.hpp"

namespace logdist {

/// Sparse Laurent polynomial Σ c_e x^e over Q(α); exponents may be negative.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(QuadElem c) { add_term(0, std::move(c)); }
  LaurentPoly(long c) : LaurentPoly(QuadElem(c)) {}
  static LaurentPoly from_polynomial(const PolyQ& f);

  void add_term(std::int64_t exponent, const QuadElem& c);

  /// Coefficient of x^e (zero when absent).
  QuadElem coeff(std::int64_t exponent) const;
  const std::map<std::int64_t, QuadElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Smallest and largest exponent; both 0 for the zero polynomial.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// x^shift · this.
  LaurentPoly shifted(std::int64_t shift) const;

  LaurentPoly& operator+=(const LaurentPoly& y);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::map<std::int64_t, QuadElem> terms_;
};

inline bool is_zero(const LaurentPoly& f) { return f.is_zero(); }

using LaurentMat = Mat2<LaurentPoly>;

LaurentMat to_laurent(const PolyMat2& m);

/// True when every exponent lies in (−p^n, p^n).
bool within_root_sum_range(const LaurentPoly& f, std::int64_t p, int n);

/// c_0 · p^n, the value of Σ_{ζ ∈ μ_{p^n}} P(ζ) for P with exponents in
/// (−p^n, p^n). Out-of-range exponents throw std::domain_error.
QuadElem constant_term_sum(const LaurentPoly& f, std::int64_t p, int n);

/// Σ_{j<N} x^{j·e} accumulated for every term c·x^e of f, in Q(α)[x]/(x^N − 1)
/// with N = period. Negative exponents use x^{−1} = x^{N−1}.
template <class T>
std::vector<T> substitution_sum(const std::vector<std::pair<std::int64_t, T>>& terms, std::int64_t period) {
  std::vector<T> acc(static_cast<std::size_t>(period));
  for (const auto& [e, c] : terms) {
    if (is_zero(c)) continue;
    const std::int64_t step = ((e % period) + period) % period;
    std::int64_t pos = 0;
    for (std::int64_t j = 0; j < period; ++j) {
      acc[static_cast<std::size_t>(pos)] += c;
      pos += step;
      if (pos >= period) pos -= period;
    }
  }
  return acc;
}

/// Σ_{ζ ∈ μ_{p^n}} P(ζ) by brute force: with x a primitive p^n-th root of
/// unity in Q(α)[x]/Φ_{p^n}, sums P(x^j) for j = 0..p^n − 1. The sum is
/// Galois-invariant, so a non-constant residue throws std::logic_error.
QuadElem brute_force_root_sum(const LaurentPoly& f, std::int64_t p, int n);

/// Σ_j x^{j·k} in Q(α)[x]/Φ_{p^n}, as a residue polynomial.
PolyQ geometric_root_sum(std::int64_t k, std::int64_t p, int n);

/// Matrix of constant terms of x^{−b}·Log^{(n)}(x).
QuadMat2 mu_oracle(const HeckeData& ctx, std::int64_t b, int n);

/// As above with a precomputed log_truncation(ctx, n).
QuadMat2 mu_oracle(const PolyMat2& log_n, const HeckeData& ctx, std::int64_t b, int n);

/// p^{−n} Σ_{ζ ∈ μ_{p^n}} ζ^{−b}·Log^{(n)}(ζ), summed by brute force over all
/// p^n-th roots of unity in Q(α)[x]/Φ_{p^n}. A non-scalar sum throws
/// std::logic_error.
QuadMat2 roots_of_unity_sum(const HeckeData& ctx, std::int64_t b, int n);

QuadMat2 roots_of_unity_sum(const PolyMat2& log_n, const HeckeData& ctx, std::int64_t b, int n);

}  // namespace logdist

namespace Eigen {
template <>
struct NumTraits<logdist::LaurentPoly> : GenericNumTraits<logdist::LaurentPoly> {
  using Real = logdist::LaurentPoly;
  using NonInteger = logdist::LaurentPoly;
  using Literal = logdist::LaurentPoly;
  using Nested = logdist::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 64,
    MulCost = 1024
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen
