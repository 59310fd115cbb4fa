#pragma once

#include <Eigen/Core>

#include "logdist/hecke_data.hpp"
#include "logdist/quad.hpp"
#include "logdist/rational.hpp"

namespace logdist {

template <class Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

template <class Scalar>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

using QuadMat2 = Mat2<QuadElem>;

template <class Scalar>
Mat2<Scalar> mat2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Mat2<Scalar> m;
  m << std::move(a), std::move(b), std::move(c), std::move(d);
  return m;
}

template <class Scalar>
bool is_zero_matrix(const Eigen::MatrixBase<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Entry-wise image under α ↦ β.
QuadMat2 conj(const QuadMat2& m);

QuadElem alpha(const HeckeData& ctx);
QuadElem beta(const HeckeData& ctx);

/// C = [[a_p, 1], [−εp, 0]].
QuadMat2 companion(const HeckeData& ctx);

/// C⁻¹ = (1/εp)·[[0, −1], [εp, a_p]].
QuadMat2 companion_inverse(const HeckeData& ctx);

/// Power of C⁻¹ applied to the root vector matrix: 2 + n for odd p, 3 + n
/// for p = 2.
int root_matrix_exponent(const HeckeData& ctx, int n);

/// R_n via the closed form (1/p^e)·[[−β^e, −α^e], [β^{e+1}, α^{e+1}]] with
/// e = root_matrix_exponent(ctx, n).
QuadMat2 root_matrix(const HeckeData& ctx, int n);

/// R_n as C^{−e}·[[−1, −1], [β, α]], computed by repeated multiplication.
QuadMat2 root_matrix_by_powers(const HeckeData& ctx, int n);

QuadElem power(QuadElem x, int e);
QuadMat2 power(const QuadMat2& m, int e);

/// The unit root α of X² − a_p X + εp in Z_p, modulo p^precision. Only for
/// ordinary contexts; lifts α ≡ a_p (mod p) one digit at a time.
Integer hensel_unit_root(const HeckeData& ctx, int precision);

/// Valuation of x under α ↦ the unit root.
struct HenselValuation {
  enum class Status { exact, needs_precision };
  Status status = Status::exact;
  /// The valuation when exact; otherwise a proven lower bound.
  ExtValuation value = ExtValuation::infinity();

  bool exact() const { return status == Status::exact; }
};

/// When the embedded value vanishes modulo p^precision but x ≠ 0 the result
/// is needs_precision with a lower bound. If the unit root is itself a
/// rational integer the evaluation is exact at any precision.
HenselValuation hensel_vp(const QuadElem& x, const HeckeData& ctx, int precision);

/// Repeats hensel_vp, doubling precision up to max_precision.
HenselValuation hensel_vp_adaptive(const QuadElem& x, const HeckeData& ctx,
                                   int start_precision = 16, int max_precision = 512);

}  // namespace logdist
