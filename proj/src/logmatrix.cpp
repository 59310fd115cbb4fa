#include "logdist/logmatrix.hpp"

#include <stdexcept>
#include <string>

namespace logdist {

PolyQ cyclotomic(std::int64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic: p must be prime, got " + std::to_string(p));
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1, got " + std::to_string(n));
  const std::int64_t step = int_pow(p, n - 1);
  std::vector<QuadElem> c(static_cast<std::size_t>(step * (p - 1) + 1));
  for (std::int64_t i = 0; i < p; ++i) c[static_cast<std::size_t>(i * step)] = QuadElem(1);
  return PolyQ(std::move(c));
}

PolyMat2 log_truncation(const HeckeData& ctx, int n) {
  if (n < 1 || n > ctx.n_max) {
    throw std::out_of_range("log_truncation: n must lie in [1, " + std::to_string(ctx.n_max) +
                            "], got " + std::to_string(n));
  }
  int_pow(ctx.p, n);  // overflow guard on the degree bound
  PolyMat2 acc = PolyMat2::Identity();
  for (int i = 1; i <= n; ++i) {
    PolyMat2 factor;
    factor << PolyQ(QuadElem(ctx.ap)), PolyQ(1L), PolyQ(QuadElem(-ctx.eps)) * cyclotomic(ctx.p, i), PolyQ();
    acc = (acc * factor).eval();
  }
  const QuadMat2 root = root_matrix(ctx, n);
  return (acc * root.unaryExpr([](const QuadElem& x) { return PolyQ(x); })).eval();
}

QuadMat2 evaluate_at_one(const PolyMat2& m) {
  return m.unaryExpr([](const PolyQ& f) { return f.evaluate(QuadElem(1)); });
}

Modulus::Modulus(PolyQ poly, std::int64_t period) : poly_(std::move(poly)), period_(period) {
  if (poly_.is_zero()) throw std::invalid_argument("zero modulus");
  if (!(poly_[static_cast<std::size_t>(poly_.degree())] == QuadElem(1))) {
    throw std::invalid_argument("modulus must be monic");
  }
  for (std::size_t e = 0; e + 1 < poly_.size(); ++e) {
    if (!poly_[e].is_zero()) lower_terms_.emplace_back(e, poly_[e]);
  }
}

Modulus Modulus::cyclotomic(std::int64_t p, int k) {
  return Modulus(logdist::cyclotomic(p, k), int_pow(p, k));
}

Modulus Modulus::cyclic(std::int64_t p, int n) {
  const std::int64_t period = int_pow(p, n);
  return Modulus(PolyQ::monomial(QuadElem(1), static_cast<std::size_t>(period)) - PolyQ(1L), period);
}

PolyQ Modulus::reduce(const PolyQ& f) const {
  std::vector<QuadElem> c = f.coeffs();
  reduce_monic(c, static_cast<std::size_t>(degree()), lower_terms_, static_cast<std::size_t>(period_));
  return PolyQ(std::move(c));
}

QuotientElem::QuotientElem(const PolyQ& f, std::shared_ptr<const Modulus> modulus)
    : modulus_(std::move(modulus)) {
  if (!modulus_) throw std::invalid_argument("QuotientElem: null modulus");
  residue_ = modulus_->reduce(f);
}

std::shared_ptr<const Modulus> QuotientElem::shared_modulus(const QuotientElem& y) const {
  if (modulus_ && y.modulus_ && modulus_ != y.modulus_ && !(*modulus_ == *y.modulus_)) {
    throw std::domain_error("QuotientElem: mixed moduli");
  }
  return modulus_ ? modulus_ : y.modulus_;
}

QuotientElem& QuotientElem::operator+=(const QuotientElem& y) {
  modulus_ = shared_modulus(y);
  residue_ += y.residue_;
  return *this;
}

QuotientElem& QuotientElem::operator-=(const QuotientElem& y) {
  modulus_ = shared_modulus(y);
  residue_ -= y.residue_;
  return *this;
}

QuotientElem QuotientElem::operator-() const {
  QuotientElem r = *this;
  r.residue_ = -residue_;
  return r;
}

QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) {
  auto modulus = a.shared_modulus(b);
  PolyQ product = a.residue_ * b.residue_;
  if (!modulus) {
    QuotientElem r;
    r.residue_ = std::move(product);
    return r;
  }
  return QuotientElem(product, std::move(modulus));
}

bool operator==(const QuotientElem& a, const QuotientElem& b) {
  a.shared_modulus(b);
  return a.residue_ == b.residue_;
}

Mat2<QuotientElem> eval_in_quotient(const PolyMat2& m, std::shared_ptr<const Modulus> modulus) {
  if (!modulus) throw std::invalid_argument("eval_in_quotient: null modulus");
  return m.unaryExpr([&](const PolyQ& f) { return QuotientElem(f, modulus); });
}

bool eval_lemma_check(const HeckeData& ctx, int k, int n) {
  if (k < 1 || k > n || n > ctx.n_max) {
    throw std::out_of_range("eval_lemma_check needs 1 <= k <= n <= n_max");
  }
  const auto modulus = std::make_shared<const Modulus>(Modulus::cyclotomic(ctx.p, k));
  return eval_in_quotient(log_truncation(ctx, n), modulus) ==
         eval_in_quotient(log_truncation(ctx, k), modulus);
}

}  // namespace logdist
