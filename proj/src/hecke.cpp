#include "logdist/hecke.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace logdist {

std::string to_string(Reduction r) {
  return r == Reduction::ordinary ? "ordinary" : "supersingular";
}

HeckeData HeckeData::make(std::int64_t p, std::int64_t ap, int eps, int n_max) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (eps != 1 && eps != -1) {
    throw std::invalid_argument("eps must be +1 or -1, got " + std::to_string(eps));
  }
  if (n_max < 1) throw std::invalid_argument("n_max must be positive, got " + std::to_string(n_max));
  return HeckeData{p, ap, eps, n_max};
}

Reduction classify(const HeckeData& ctx) {
  return ctx.ap % ctx.p == 0 ? Reduction::supersingular : Reduction::ordinary;
}

std::string describe(const HeckeData& ctx) {
  std::ostringstream os;
  os << "(p=" << ctx.p << ", ap=" << ctx.ap << ", eps=" << ctx.eps << ")";
  return os.str();
}

QuadMat2 conj(const QuadMat2& m) { return m.unaryExpr([](const QuadElem& x) { return conj(x); }); }

QuadElem alpha(const HeckeData& ctx) { return QuadElem::generator(ctx.ring()); }

QuadElem beta(const HeckeData& ctx) { return conj(alpha(ctx)); }

QuadMat2 companion(const HeckeData& ctx) {
  return mat2<QuadElem>(ctx.ap, 1, -ctx.eps * ctx.p, 0);
}

QuadMat2 companion_inverse(const HeckeData& ctx) {
  const Rational det(ctx.eps * ctx.p);
  return mat2<QuadElem>(0, Rational(-1 / det), 1, Rational(ctx.ap / det));
}

int root_matrix_exponent(const HeckeData& ctx, int n) {
  if (n < 0) throw std::invalid_argument("root matrix depth must be >= 0, got " + std::to_string(n));
  return ctx.p == 2 ? 3 + n : 2 + n;
}

QuadElem power(QuadElem x, int e) {
  if (e < 0) throw std::invalid_argument("power: negative exponent");
  QuadElem r(1);
  while (e > 0) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e > 0) x *= x;
  }
  return r;
}

QuadMat2 power(const QuadMat2& m, int e) {
  if (e < 0) throw std::invalid_argument("power: negative exponent");
  QuadMat2 r = QuadMat2::Identity();
  QuadMat2 base = m;
  while (e > 0) {
    if (e & 1) r = (r * base).eval();
    e >>= 1;
    if (e > 0) base = (base * base).eval();
  }
  return r;
}

QuadMat2 root_matrix(const HeckeData& ctx, int n) {
  const int e = root_matrix_exponent(ctx, n);
  const QuadElem a = alpha(ctx);
  const QuadElem b = beta(ctx);
  // C⁻¹ maps the column (−λ^k, λ^{k+1}) to (εp)⁻¹·(−λ^{k+1}, λ^{k+2}).
  Rational denom = 1;
  for (int i = 0; i < e; ++i) denom *= ctx.eps * ctx.p;
  const QuadElem be = power(b, e);
  const QuadElem ae = power(a, e);
  QuadMat2 r = mat2<QuadElem>(-be, -ae, be * b, ae * a);
  return r.unaryExpr([&](const QuadElem& x) { return x / denom; });
}

QuadMat2 root_matrix_by_powers(const HeckeData& ctx, int n) {
  const int e = root_matrix_exponent(ctx, n);
  const QuadMat2 roots = mat2<QuadElem>(-1, -1, beta(ctx), alpha(ctx));
  return power(companion_inverse(ctx), e) * roots;
}

namespace {

void require_ordinary(const HeckeData& ctx, const char* what) {
  if (classify(ctx) != Reduction::ordinary) {
    throw std::domain_error(std::string(what) + " needs an ordinary context; " + describe(ctx) +
                            " is supersingular");
  }
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// The unit root when it is a rational integer (reducible Hecke polynomial).
std::optional<Integer> integral_unit_root(const HeckeData& ctx) {
  const Integer ap(static_cast<long>(ctx.ap));
  const Integer disc = ap * ap - 4 * Integer(static_cast<long>(ctx.eps * ctx.p));
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  const Integer s = sqrt(disc);
  for (const Integer& root : {Integer((ap + s) / 2), Integer((ap - s) / 2)}) {
    if (root % ctx.p != 0) return root;
  }
  return std::nullopt;
}

}  // namespace

Integer hensel_unit_root(const HeckeData& ctx, int precision) {
  require_ordinary(ctx, "hensel_unit_root");
  if (precision < 1) throw std::invalid_argument("Hensel precision must be >= 1");
  const Integer p(static_cast<long>(ctx.p));
  const Integer ap(static_cast<long>(ctx.ap));
  const Integer np(static_cast<long>(ctx.eps * ctx.p));
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(precision));

  Integer root = mod(ap, p);
  // f'(root) ≡ a_p (mod p) is a unit; one inverse serves every lift.
  Integer slope_inv;
  const Integer slope = mod(2 * root - ap, modulus);
  if (mpz_invert(slope_inv.get_mpz_t(), slope.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw std::logic_error("hensel_unit_root: derivative not invertible");
  }
  Integer pk = p;
  for (int k = 1; k < precision; ++k) {
    pk *= p;
    const Integer f = root * root - ap * root + np;
    root = mod(root - f * slope_inv, pk);
  }
  return mod(root, modulus);
}

HenselValuation hensel_vp(const QuadElem& x, const HeckeData& ctx, int precision) {
  require_ordinary(ctx, "hensel_vp");
  if (x.ring() && !(*x.ring() == ctx.ring())) {
    throw std::domain_error("hensel_vp: element is not in the ring of " + describe(ctx));
  }
  if (x.is_zero()) return {HenselValuation::Status::exact, ExtValuation::infinity()};

  Integer den;
  mpz_lcm(den.get_mpz_t(), x.c0().get_den_mpz_t(), x.c1().get_den_mpz_t());
  const Integer a = x.c0().get_num() * (den / x.c0().get_den());
  const Integer b = x.c1().get_num() * (den / x.c1().get_den());
  const Rational den_val = vp(den, ctx.p).value();

  if (const auto root = integral_unit_root(ctx)) {
    const Integer value = a + b * *root;
    return {HenselValuation::Status::exact, vp(value, ctx.p) - den_val};
  }

  Integer modulus;
  const Integer p(static_cast<long>(ctx.p));
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(precision));
  const Integer embedded = mod(a + b * hensel_unit_root(ctx, precision), modulus);
  if (embedded == 0) {
    return {HenselValuation::Status::needs_precision, ExtValuation(Rational(precision) - den_val)};
  }
  return {HenselValuation::Status::exact, vp(embedded, ctx.p) - den_val};
}

HenselValuation hensel_vp_adaptive(const QuadElem& x, const HeckeData& ctx, int start_precision,
                                   int max_precision) {
  HenselValuation result = hensel_vp(x, ctx, start_precision);
  for (int prec = start_precision * 2; !result.exact() && prec <= max_precision; prec *= 2) {
    result = hensel_vp(x, ctx, prec);
  }
  return result;
}

}  // namespace logdist
