#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "logdist/hecke_data.hpp"
#include "logdist/rational.hpp"

namespace logdist {

/// An element c0 + c1·α of Q[α]/(α² − tα + n), kept symbolically.
///
/// Elements built from a bare rational carry no ring and combine with any
/// ring; the result adopts the ring of the other operand. Combining two
/// elements whose rings differ throws std::domain_error. This lets Eigen
/// materialize Scalar(0) and Scalar(1) without knowing the context.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long v) : c0_(v) {}
  QuadElem(Rational v) : c0_(std::move(v)) {}
  QuadElem(Rational c0, Rational c1, QuadRing ring);

  /// The generator α of the ring.
  static QuadElem generator(QuadRing ring);

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }
  const std::optional<QuadRing>& ring() const { return ring_; }

  bool is_zero() const { return sgn(c0_) == 0 && sgn(c1_) == 0; }
  bool is_rational() const { return sgn(c1_) == 0; }

  QuadElem& operator+=(const QuadElem& y);
  QuadElem& operator-=(const QuadElem& y);
  QuadElem& operator*=(const QuadElem& y);
  QuadElem& operator*=(const Rational& s);
  /// Division by a nonzero rational scalar.
  QuadElem& operator/=(const Rational& s);

  QuadElem operator-() const;

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(QuadElem x, const Rational& s) { return x /= s; }

  /// Value equality; the ring tag is ignored when both sides are rational.
  friend bool operator==(const QuadElem& x, const QuadElem& y);

  friend std::ostream& operator<<(std::ostream& os, const QuadElem& x);

 private:
  Rational c0_;
  Rational c1_;
  std::optional<QuadRing> ring_;
};

inline bool is_zero(const QuadElem& x) { return x.is_zero(); }

std::string to_string(const QuadElem& x);

/// The ring shared by x and y, or nullopt when neither carries one.
std::optional<QuadRing> common_ring(const QuadElem& x, const QuadElem& y);

/// Image under α ↦ β = t − α.
QuadElem conj(const QuadElem& x);
Rational norm(const QuadElem& x);
Rational trace(const QuadElem& x);

/// x / y for y of norm ±p^k. Any other divisor (in particular a zero divisor)
/// throws std::domain_error.
QuadElem divide_by_unit(const QuadElem& x, const QuadElem& y, std::int64_t p);

/// Half the p-adic valuation of the norm. Only meaningful when p | a_p, where
/// the Hecke polynomial is Eisenstein at p and this is the unique extension of
/// v_p; ordinary contexts throw std::domain_error (use hensel_vp instead).
ExtValuation quad_vp(const QuadElem& x, const HeckeData& ctx);

}  // namespace logdist

namespace Eigen {
template <>
struct NumTraits<logdist::QuadElem> : GenericNumTraits<logdist::QuadElem> {
  using Real = logdist::QuadElem;
  using NonInteger = logdist::QuadElem;
  using Literal = logdist::QuadElem;
  using Nested = logdist::QuadElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen
