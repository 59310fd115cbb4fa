#include "logdist/quad.hpp"

#include <sstream>
#include <stdexcept>

namespace logdist {

QuadElem::QuadElem(Rational c0, Rational c1, QuadRing ring)
    : c0_(std::move(c0)), c1_(std::move(c1)), ring_(ring) {}

QuadElem QuadElem::generator(QuadRing ring) { return QuadElem(0, 1, ring); }

std::optional<QuadRing> common_ring(const QuadElem& x, const QuadElem& y) {
  if (x.ring() && y.ring()) {
    if (!(*x.ring() == *y.ring())) {
      throw std::domain_error("quadratic ring mismatch: " + to_string(x) + " vs " + to_string(y));
    }
    return x.ring();
  }
  return x.ring() ? x.ring() : y.ring();
}

QuadElem& QuadElem::operator+=(const QuadElem& y) {
  ring_ = common_ring(*this, y);
  c0_ += y.c0_;
  c1_ += y.c1_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& y) {
  ring_ = common_ring(*this, y);
  c0_ -= y.c0_;
  c1_ -= y.c1_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& y) {
  *this = *this * y;
  return *this;
}

QuadElem& QuadElem::operator*=(const Rational& s) {
  c0_ *= s;
  c1_ *= s;
  return *this;
}

QuadElem& QuadElem::operator/=(const Rational& s) {
  if (sgn(s) == 0) throw std::domain_error("QuadElem: division by zero");
  c0_ /= s;
  c1_ /= s;
  return *this;
}

QuadElem QuadElem::operator-() const {
  QuadElem r = *this;
  r.c0_ = -c0_;
  r.c1_ = -c1_;
  return r;
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  const auto ring = common_ring(x, y);
  QuadElem r;
  r.ring_ = ring;
  if (x.is_rational()) {
    r.c0_ = x.c0_ * y.c0_;
    r.c1_ = x.c0_ * y.c1_;
    return r;
  }
  if (y.is_rational()) {
    r.c0_ = x.c0_ * y.c0_;
    r.c1_ = x.c1_ * y.c0_;
    return r;
  }
  // (a0 + a1α)(b0 + b1α) with α² = tα − n.
  const Rational top = x.c1_ * y.c1_;
  r.c0_ = x.c0_ * y.c0_ - top * ring->norm;
  r.c1_ = x.c0_ * y.c1_ + x.c1_ * y.c0_ + top * ring->trace;
  return r;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.c0_ != y.c0_ || x.c1_ != y.c1_) return false;
  if (x.is_rational()) return true;
  return !(x.ring_ && y.ring_) || *x.ring_ == *y.ring_;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
  if (x.is_rational()) return os << to_string(x.c0());
  if (sgn(x.c0()) != 0) {
    os << to_string(x.c0()) << (sgn(x.c1()) > 0 ? " + " : " - ");
    os << to_string(Rational(abs(x.c1())));
  } else {
    os << to_string(x.c1());
  }
  return os << "*a";
}

std::string to_string(const QuadElem& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

QuadElem conj(const QuadElem& x) {
  if (x.is_rational() || !x.ring()) return x;
  return QuadElem(x.c0() + x.c1() * x.ring()->trace, -x.c1(), *x.ring());
}

Rational norm(const QuadElem& x) {
  if (x.is_rational()) return x.c0() * x.c0();
  const QuadRing& ring = *x.ring();
  return x.c0() * x.c0() + x.c0() * x.c1() * ring.trace + x.c1() * x.c1() * ring.norm;
}

Rational trace(const QuadElem& x) {
  if (x.is_rational()) return 2 * x.c0();
  return 2 * x.c0() + x.c1() * x.ring()->trace;
}

QuadElem divide_by_unit(const QuadElem& x, const QuadElem& y, std::int64_t p) {
  const Rational n = norm(y);
  if (sgn(n) == 0) throw std::domain_error("division by zero divisor " + to_string(y));
  Rational rest = abs(n);
  const Integer prime(static_cast<long>(p));
  while (rest.get_num() % prime == 0) rest /= prime;
  while (rest.get_den() % prime == 0) rest *= prime;
  if (rest != 1) {
    throw std::domain_error("divisor " + to_string(y) + " has norm " + to_string(n) +
                            ", not ±" + std::to_string(p) + "^k");
  }
  QuadElem r = x * conj(y);
  r /= n;
  return r;
}

ExtValuation quad_vp(const QuadElem& x, const HeckeData& ctx) {
  if (classify(ctx) == Reduction::ordinary) {
    throw std::domain_error("quad_vp needs a supersingular context; " + describe(ctx) +
                            " is ordinary, use hensel_vp");
  }
  if (x.ring() && !(*x.ring() == ctx.ring())) {
    throw std::domain_error("quad_vp: element is not in the ring of " + describe(ctx));
  }
  return Rational(1, 2) * vp(norm(x), ctx.p);
}

}  // namespace logdist
