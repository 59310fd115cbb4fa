#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "logdist/quad.hpp"

namespace logdist {

template <class T>
  requires std::is_arithmetic_v<T> || std::is_same_v<T, __int128>
bool is_zero(const T& x) {
  return x == T(0);
}

/// Dense univariate polynomial in x over a coefficient ring T. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) { if (!logdist::is_zero(constant)) coeffs_.push_back(std::move(constant)); }
  Polynomial(long constant)
    requires(!std::is_arithmetic_v<T> && !std::is_same_v<T, __int128>)
      : Polynomial(T(constant)) {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(T c, std::size_t exponent) {
    std::vector<T> v(exponent + 1);
    v[exponent] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// −1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  const T& operator[](std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : zero(); }

  Polynomial& operator+=(const Polynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  /// Schoolbook product; zero coefficients are skipped so sparse factors
  /// such as cyclotomic polynomials stay cheap.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!logdist::is_zero(b.coeffs_[j])) support.push_back(j);
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (logdist::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j : support) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (logdist::is_zero(f.coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << f.coeffs_[i] << ")";
      if (i > 0) os << "*x^" << i;
    }
    return os;
  }

  /// Horner evaluation at a point of any ring that T embeds into.
  template <class U>
  U evaluate(const U& point) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + U(*it);
    return acc;
  }

 private:
  static const T& zero() {
    static const T z{};
    return z;
  }

  void trim() {
    while (!coeffs_.empty() && logdist::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <class T>
bool is_zero(const Polynomial<T>& f) {
  return f.is_zero();
}

using PolyQ = Polynomial<QuadElem>;

}  // namespace logdist

namespace Eigen {
template <class T>
struct NumTraits<logdist::Polynomial<T>> : GenericNumTraits<logdist::Polynomial<T>> {
  using Real = logdist::Polynomial<T>;
  using NonInteger = logdist::Polynomial<T>;
  using Literal = logdist::Polynomial<T>;
  using Nested = logdist::Polynomial<T>;
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
