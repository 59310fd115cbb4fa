#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "logdist/hecke.hpp"

namespace logdist {

/// Base-p digits b_0..b_{n−1} (least significant first) of b mod p^n.
struct DigitString {
  std::int64_t p = 0;
  int n = 0;
  std::vector<int> digits;
  std::int64_t b = 0;  // canonical representative in [0, p^n)
};

/// Normalizes b into [0, p^n) first, so negative b is accepted.
DigitString digits(std::int64_t b, int n, std::int64_t p);

/// Lengths m_1..m_l of the zero runs around the nonzero digits:
/// (0^{m_1}, ≠0, 0^{m_2}, ≠0, ..., ≠0, 0^{m_l}). Adjacent nonzero digits give
/// interior runs of length 0, and l − 1 digits are nonzero.
struct RunStructure {
  std::vector<int> zero_runs;

  int nonzero_count() const { return static_cast<int>(zero_runs.size()) - 1; }
  friend bool operator==(const RunStructure&, const RunStructure&) = default;
};

RunStructure run_structure(const DigitString& d);

/// [[a_p, 1], [−ε, 0]] for digit 0, [[0, 0], [−ε, 0]] for any nonzero digit.
QuadMat2 chromatic(int digit, const HeckeData& ctx);

/// Value of the distribution matrix on a coset b + p^n Z_p.
struct DistributionValue {
  HeckeData ctx;
  std::int64_t b = 0;
  int n = 0;
  QuadMat2 matrix;

  /// Ordinary contexts certify only the first column.
  bool first_column_only() const { return classify(ctx) == Reduction::ordinary; }

  /// Descriptive tags, e.g. "ordinary:first-column-certified" or
  /// "zero:consecutive-nonzero-digits".
  std::vector<std::string> flags() const;
};

/// μ(b + p^n Z_p) = Y_{b_0}·Y_{b_1}···Y_{b_{n−1}}·R_n with Y = chromatic.
/// Requires 1 <= n <= ctx.n_max.
DistributionValue mu(const HeckeData& ctx, std::int64_t b, int n);

/// Element u0 + u1·α₂ of Q[α₁] ⊗ Q[α₂] with u0, u1 ∈ Q[α₁]. In the basis
/// {1, α₁, α₂, α₁α₂} the coordinates are u0.c0, u0.c1, u1.c0, u1.c1.
class TensorElem {
 public:
  TensorElem() = default;
  TensorElem(long c) : u0_(c) {}
  TensorElem(QuadElem u0, QuadElem u1, std::optional<QuadRing> second);

  /// x ⊗ y for x ∈ Q[α₁], y ∈ Q[α₂].
  static TensorElem tensor(const QuadElem& x, const QuadElem& y);

  const QuadElem& u0() const { return u0_; }
  const QuadElem& u1() const { return u1_; }
  const std::optional<QuadRing>& second_ring() const { return second_; }

  bool is_zero() const { return u0_.is_zero() && u1_.is_zero(); }

  TensorElem& operator+=(const TensorElem& y);
  TensorElem& operator-=(const TensorElem& y);
  TensorElem operator-() const { return TensorElem(-u0_, -u1_, second_); }

  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
  friend bool operator==(const TensorElem& a, const TensorElem& b);
  friend std::ostream& operator<<(std::ostream& os, const TensorElem& x);

 private:
  std::optional<QuadRing> merged(const TensorElem& y) const;

  QuadElem u0_;
  QuadElem u1_;
  std::optional<QuadRing> second_;
};

inline bool is_zero(const TensorElem& x) { return x.is_zero(); }

/// Kronecker product with a caller-supplied scalar product.
template <class A, class B, class Mul>
auto kronecker(const Mat2<A>& a, const Mat2<B>& b, Mul mul) {
  using R = decltype(mul(a(0, 0), b(0, 0)));
  Mat4<R> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = mul(a(i, j), b(k, l));
  return out;
}

/// Same-ring values stay in Q[α]; otherwise entries live in Q[α₁] ⊗ Q[α₂].
using TwoVariableMatrix = std::variant<Mat4<QuadElem>, Mat4<TensorElem>>;

bool is_zero_matrix(const TwoVariableMatrix& m);

/// mu(ctx1, b1, n1) ⊗ mu(ctx2, b2, n2). Both contexts must be supersingular.
TwoVariableMatrix mu_two_variable(const HeckeData& ctx1, std::int64_t b1, int n1,
                                  const HeckeData& ctx2, std::int64_t b2, int n2);

TwoVariableMatrix operator+(const TwoVariableMatrix& a, const TwoVariableMatrix& b);

}  // namespace logdist

namespace Eigen {
template <>
struct NumTraits<logdist::TensorElem> : GenericNumTraits<logdist::TensorElem> {
  using Real = logdist::TensorElem;
  using NonInteger = logdist::TensorElem;
  using Literal = logdist::TensorElem;
  using Nested = logdist::TensorElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 128
  };
  static int digits10() { return 0; }
};
}  // namespace Eigen
