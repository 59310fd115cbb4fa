#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <utility>
#include <vector>

#include "logdist/hecke.hpp"
#include "logdist/polynomial.hpp"

namespace logdist {

/// 2×2 matrix of polynomials in x = 1 + T.
using PolyMat2 = Mat2<PolyQ>;

/// Φ_{p^n}(x) = Σ_{i<p} x^{i·p^{n−1}}. Rejects n = 0 and non-prime p.
PolyQ cyclotomic(std::int64_t p, int n);

/// The truncated logarithm matrix
///   Π_{i=1..n} [[a_p, 1], [−ε·Φ_{p^i}(x), 0]] · R_n
/// in the variable x = 1 + T. Entries have degree at most p^n − 1.
PolyMat2 log_truncation(const HeckeData& ctx, int n);

/// Coefficient-sum evaluation at x = 1.
QuadMat2 evaluate_at_one(const PolyMat2& m);

/// Folds coefficient i onto i mod period (x^period ≡ 1), then long-divides
/// by a monic modulus given by its degree and nonzero lower terms. A zero
/// period skips the fold.
template <class T>
void reduce_monic(std::vector<T>& c, std::size_t degree,
                  const std::vector<std::pair<std::size_t, T>>& lower_terms, std::size_t period) {
  if (period != 0 && c.size() > period) {
    for (std::size_t i = period; i < c.size(); ++i) {
      if (is_zero(c[i])) continue;
      c[i % period] += c[i];
    }
    c.resize(period);
  }
  // Monic division: x^degree ≡ −Σ lower_terms.
  for (std::size_t d = c.size(); d-- > degree;) {
    if (is_zero(c[d])) continue;
    const T lead = c[d];
    const std::size_t shift = d - degree;
    for (const auto& [e, m] : lower_terms) c[shift + e] -= lead * m;
    c[d] = T(0);
  }
  if (c.size() > degree) c.resize(degree);
}

/// Residues of coefficient vectors modulo Φ_{p^k}, for any coefficient ring.
template <class T>
void reduce_cyclotomic(std::vector<T>& c, std::int64_t p, int k) {
  const std::int64_t step = int_pow(p, k - 1);
  const std::size_t degree = static_cast<std::size_t>(step * (p - 1));
  std::vector<std::pair<std::size_t, T>> lower;
  for (std::int64_t i = 0; i + 1 < p; ++i) lower.emplace_back(static_cast<std::size_t>(i * step), T(1));
  reduce_monic(c, degree, lower, static_cast<std::size_t>(step * p));
}

/// A monic modulus m(x) for quotient rings Q(α)[x]/(m). Cyclotomic and
/// x^N − 1 moduli remember their period N (x^N ≡ 1) for a cheap fold.
class Modulus {
 public:
  /// Rejects the zero polynomial and non-monic input.
  explicit Modulus(PolyQ poly, std::int64_t period = 0);

  static Modulus cyclotomic(std::int64_t p, int k);
  /// x^{p^n} − 1.
  static Modulus cyclic(std::int64_t p, int n);

  const PolyQ& poly() const { return poly_; }
  long degree() const { return poly_.degree(); }
  std::int64_t period() const { return period_; }

  PolyQ reduce(const PolyQ& f) const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.poly_ == b.poly_; }

 private:
  PolyQ poly_;
  std::int64_t period_ = 0;
  std::vector<std::pair<std::size_t, QuadElem>> lower_terms_;
};

/// An element of Q(α)[x]/(m). Constants built without a modulus act in every
/// quotient, mirroring the ring-free QuadElem convention.
class QuotientElem {
 public:
  QuotientElem() = default;
  QuotientElem(long c) : residue_(QuadElem(c)) {}
  QuotientElem(QuadElem c) : residue_(std::move(c)) {}
  QuotientElem(const PolyQ& f, std::shared_ptr<const Modulus> modulus);

  const PolyQ& residue() const { return residue_; }
  const std::shared_ptr<const Modulus>& modulus() const { return modulus_; }

  /// True when the residue is a constant (degree ≤ 0).
  bool is_scalar() const { return residue_.degree() <= 0; }

  QuotientElem& operator+=(const QuotientElem& y);
  QuotientElem& operator-=(const QuotientElem& y);
  QuotientElem operator-() const;

  friend QuotientElem operator+(QuotientElem a, const QuotientElem& b) { return a += b; }
  friend QuotientElem operator-(QuotientElem a, const QuotientElem& b) { return a -= b; }
  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b);
  friend bool operator==(const QuotientElem& a, const QuotientElem& b);

 private:
  std::shared_ptr<const Modulus> shared_modulus(const QuotientElem& y) const;

  PolyQ residue_;
  std::shared_ptr<const Modulus> modulus_;
};

inline bool is_zero(const QuotientElem& x) { return x.residue().is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const QuotientElem& x) { return os << x.residue(); }

/// Entry-wise reduction; this is evaluation at a root of the modulus.
Mat2<QuotientElem> eval_in_quotient(const PolyMat2& m, std::shared_ptr<const Modulus> modulus);

/// Checks Log^{(n)} ≡ Log^{(k)} (mod Φ_{p^k}), i.e. the two truncations
/// agree at every primitive p^k-th root of unity.
bool eval_lemma_check(const HeckeData& ctx, int k, int n);

}  // namespace logdist

namespace Eigen {
template <>
struct NumTraits<logdist::QuotientElem> : GenericNumTraits<logdist::QuotientElem> {
  using Real = logdist::QuotientElem;
  using NonInteger = logdist::QuotientElem;
  using Literal = logdist::QuotientElem;
  using Nested = logdist::QuotientElem;
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
