#include "logdist/distribution.hpp"

#include <stdexcept>

namespace logdist {

DigitString digits(std::int64_t b, int n, std::int64_t p) {
  if (n < 1) throw std::invalid_argument("digits: n must be >= 1, got " + std::to_string(n));
  if (!is_prime(p)) throw std::invalid_argument("digits: p must be prime, got " + std::to_string(p));
  const std::int64_t modulus = int_pow(p, n);
  DigitString d{p, n, {}, ((b % modulus) + modulus) % modulus};
  std::int64_t rest = d.b;
  for (int i = 0; i < n; ++i) {
    d.digits.push_back(static_cast<int>(rest % p));
    rest /= p;
  }
  return d;
}

RunStructure run_structure(const DigitString& d) {
  RunStructure runs{{0}};
  for (int digit : d.digits) {
    if (digit == 0) {
      ++runs.zero_runs.back();
    } else {
      runs.zero_runs.push_back(0);
    }
  }
  return runs;
}

QuadMat2 chromatic(int digit, const HeckeData& ctx) {
  if (digit < 0 || digit >= ctx.p) {
    throw std::out_of_range("digit " + std::to_string(digit) + " outside [0, " +
                            std::to_string(ctx.p) + ")");
  }
  if (digit == 0) return mat2<QuadElem>(ctx.ap, 1, -ctx.eps, 0);
  return mat2<QuadElem>(0, 0, -ctx.eps, 0);
}

std::vector<std::string> DistributionValue::flags() const {
  std::vector<std::string> out;
  if (first_column_only()) out.emplace_back("ordinary:first-column-certified");
  const DigitString d = digits(b, n, ctx.p);
  for (int i = 0; i + 1 < n; ++i) {
    if (d.digits[i] != 0 && d.digits[i + 1] != 0) {
      out.emplace_back("zero:consecutive-nonzero-digits");
      break;
    }
  }
  if (is_zero_matrix(matrix)) out.emplace_back("zero-matrix");
  return out;
}

DistributionValue mu(const HeckeData& ctx, std::int64_t b, int n) {
  if (n < 1 || n > ctx.n_max) {
    throw std::out_of_range("mu: n must lie in [1, " + std::to_string(ctx.n_max) + "], got " +
                            std::to_string(n));
  }
  const DigitString d = digits(b, n, ctx.p);
  QuadMat2 acc = QuadMat2::Identity();
  for (int digit : d.digits) acc = (acc * chromatic(digit, ctx)).eval();
  return DistributionValue{ctx, d.b, n, acc * root_matrix(ctx, n)};
}

TensorElem::TensorElem(QuadElem u0, QuadElem u1, std::optional<QuadRing> second)
    : u0_(std::move(u0)), u1_(std::move(u1)), second_(second) {}

TensorElem TensorElem::tensor(const QuadElem& x, const QuadElem& y) {
  // x·(y0 + y1·α₂) = x·y0 + x·y1·α₂.
  return TensorElem(x * QuadElem(y.c0()), x * QuadElem(y.c1()), y.ring());
}

std::optional<QuadRing> TensorElem::merged(const TensorElem& y) const {
  if (second_ && y.second_ && !(*second_ == *y.second_)) {
    throw std::domain_error("TensorElem: second ring mismatch");
  }
  return second_ ? second_ : y.second_;
}

TensorElem& TensorElem::operator+=(const TensorElem& y) {
  second_ = merged(y);
  u0_ += y.u0_;
  u1_ += y.u1_;
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& y) {
  second_ = merged(y);
  u0_ -= y.u0_;
  u1_ -= y.u1_;
  return *this;
}

TensorElem operator*(const TensorElem& a, const TensorElem& b) {
  const auto ring = a.merged(b);
  // α₂² = t₂·α₂ − n₂.
  const QuadElem top = a.u1_ * b.u1_;
  QuadElem u0 = a.u0_ * b.u0_;
  QuadElem u1 = a.u0_ * b.u1_ + a.u1_ * b.u0_;
  if (!top.is_zero()) {
    u0 -= top * QuadElem(Rational(ring->norm));
    u1 += top * QuadElem(Rational(ring->trace));
  }
  return TensorElem(std::move(u0), std::move(u1), ring);
}

bool operator==(const TensorElem& a, const TensorElem& b) {
  if (!(a.u0_ == b.u0_) || !(a.u1_ == b.u1_)) return false;
  return a.u1_.is_zero() || !(a.second_ && b.second_) || *a.second_ == *b.second_;
}

std::ostream& operator<<(std::ostream& os, const TensorElem& x) {
  return os << "(" << x.u0_ << ") + (" << x.u1_ << ")*a2";
}

bool is_zero_matrix(const TwoVariableMatrix& m) {
  return std::visit([](const auto& mat) { return logdist::is_zero_matrix(mat); }, m);
}

TwoVariableMatrix mu_two_variable(const HeckeData& ctx1, std::int64_t b1, int n1,
                                  const HeckeData& ctx2, std::int64_t b2, int n2) {
  for (const HeckeData* ctx : {&ctx1, &ctx2}) {
    if (classify(*ctx) != Reduction::supersingular) {
      throw std::domain_error("mu_two_variable needs supersingular contexts; " + describe(*ctx) +
                              " is ordinary");
    }
  }
  const QuadMat2 first = mu(ctx1, b1, n1).matrix;
  const QuadMat2 second = mu(ctx2, b2, n2).matrix;
  if (ctx1.ring() == ctx2.ring()) {
    return kronecker(first, second, [](const QuadElem& x, const QuadElem& y) { return x * y; });
  }
  return kronecker(first, second, &TensorElem::tensor);
}

TwoVariableMatrix operator+(const TwoVariableMatrix& a, const TwoVariableMatrix& b) {
  if (a.index() != b.index()) throw std::domain_error("two-variable values over different rings");
  if (const auto* qa = std::get_if<Mat4<QuadElem>>(&a)) {
    return TwoVariableMatrix(Mat4<QuadElem>(*qa + std::get<Mat4<QuadElem>>(b)));
  }
  return TwoVariableMatrix(
      Mat4<TensorElem>(std::get<Mat4<TensorElem>>(a) + std::get<Mat4<TensorElem>>(b)));
}

}  // namespace logdist
