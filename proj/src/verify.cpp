#include "logdist/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "logdist/oracle.hpp"

namespace logdist {

std::vector<std::int64_t> default_ap_values(std::int64_t p) {
  std::vector<std::int64_t> out{0, p, -p};
  for (std::int64_t a : {1, -1, 2}) {
    if (a % p != 0) out.push_back(a);
  }
  return out;
}

GridSpec GridSpec::from_json(const json& j) {
  GridSpec g;
  if (j.contains("p")) g.primes = j.at("p").get<std::vector<std::int64_t>>();
  if (j.contains("ap")) g.ap = j.at("ap").get<std::vector<std::int64_t>>();
  if (j.contains("eps")) g.eps = j.at("eps").get<std::vector<int>>();
  if (j.contains("n")) {
    const auto range = j.at("n").get<std::vector<int>>();
    if (range.size() != 2) throw std::invalid_argument("grid \"n\" must be [lo, hi]");
    g.n_lo = range[0];
    g.n_hi = range[1];
  }
  if (j.contains("b")) g.b = j.at("b").get<std::vector<std::int64_t>>();
  g.cell_cap = j.value("cell_cap", g.cell_cap);
  g.root_sum_cap = j.value("root_sum_cap", g.root_sum_cap);
  g.n_max = j.value("n_max", g.n_max);
  for (int e : g.eps) {
    if (e != 1 && e != -1) throw std::invalid_argument("grid eps values must be +1 or -1");
  }
  if (g.lowest_n() < 1) throw std::invalid_argument("grid n range must start at 1 or above");
  return g;
}

json GridSpec::to_json() const {
  json j{{"p", primes}, {"eps", eps}, {"cell_cap", cell_cap}, {"root_sum_cap", root_sum_cap}, {"n_max", n_max}};
  if (ap) j["ap"] = *ap;
  if (n_lo || n_hi) j["n"] = {lowest_n(), n_hi.value_or(5)};
  if (b) j["b"] = *b;
  return j;
}

std::vector<std::int64_t> GridSpec::ap_values(std::int64_t p) const {
  return ap ? *ap : default_ap_values(p);
}

int GridSpec::highest_n(std::int64_t p) const {
  return std::min(n_hi.value_or(p <= 3 ? 5 : 4), n_max);
}

std::vector<HeckeData> GridSpec::contexts() const {
  std::vector<HeckeData> out;
  for (std::int64_t p : primes)
    for (std::int64_t a : ap_values(p))
      for (int e : eps) out.push_back(HeckeData::make(p, a, e, n_max));
  return out;
}

std::vector<std::int64_t> GridSpec::residues(std::int64_t p, int n) const {
  const std::int64_t modulus = int_pow(p, n);
  std::vector<std::int64_t> out;
  if (b) {
    for (std::int64_t v : *b) out.push_back(((v % modulus) + modulus) % modulus);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  } else {
    for (std::int64_t v = 0; v < modulus; ++v) out.push_back(v);
  }
  return out;
}

std::int64_t GridSpec::cell_count() const {
  std::int64_t total = 0;
  for (const HeckeData& ctx : contexts()) {
    for (int n = lowest_n(); n <= highest_n(ctx.p); ++n) {
      total += static_cast<std::int64_t>(b ? b->size() : static_cast<std::size_t>(int_pow(ctx.p, n)));
    }
  }
  return total;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

json Report::to_json() const {
  json list = json::array();
  for (const CheckResult& c : checks) {
    list.push_back({{"name", c.name}, {"params", c.params}, {"pass", c.pass}, {"witness", c.witness}});
  }
  const std::size_t failed = failures();
  return {{"checks", list},
          {"summary", {{"total", checks.size()}, {"passed", checks.size() - failed}, {"failed", failed}}}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " " << c.params.dump();
    if (!c.pass) os << "\n     witness: " << c.witness.dump();
    os << "\n";
  }
  const std::size_t failed = failures();
  os << checks.size() << " checks, " << checks.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

bool has_adjacent_nonzero(const DigitString& d) {
  for (std::size_t i = 0; i + 1 < d.digits.size(); ++i) {
    if (d.digits[i] != 0 && d.digits[i + 1] != 0) return true;
  }
  return false;
}

bool is_odd_gap_pattern(const RunStructure& r) {
  if (r.nonzero_count() < 1) return false;
  for (std::size_t i = 1; i < r.zero_runs.size(); ++i) {
    if (r.zero_runs[i] % 2 == 0) return false;
  }
  return true;
}

Rational supersingular_bound(int n) {
  Rational bound(-(n + 3), 2);
  bound.canonicalize();
  return bound;
}

namespace {

json params(const HeckeData& ctx, int n) {
  return {{"p", ctx.p}, {"ap", ctx.ap}, {"eps", ctx.eps}, {"n", n}};
}

CheckResult pass(std::string name, json p) { return {std::move(name), std::move(p), true, nullptr}; }

CheckResult fail(std::string name, json p, json witness) {
  return {std::move(name), std::move(p), false, std::move(witness)};
}

json pair_witness(std::int64_t b, const QuadMat2& lhs, const QuadMat2& rhs, const char* lhs_name,
                  const char* rhs_name) {
  return {{"b", b}, {lhs_name, matrix_to_json(lhs)}, {rhs_name, matrix_to_json(rhs)}};
}

QuadMat2 unit_matrix(int row, int col, int sign) {
  QuadMat2 m = QuadMat2::Zero();
  m(row, col) = QuadElem(sign);
  return m;
}

}  // namespace

CheckResult check_oracle_agreement(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs,
                                   bool with_root_sum) {
  json p = params(ctx, n);
  p["root_sum"] = with_root_sum;
  const PolyMat2 log_n = log_truncation(ctx, n);
  for (std::int64_t b : bs) {
    const QuadMat2 value = mu(ctx, b, n).matrix;
    const QuadMat2 oracle = mu_oracle(log_n, ctx, b, n);
    if (!(value == oracle)) return fail("oracle_agreement", p, pair_witness(b, value, oracle, "mu", "mu_oracle"));
    if (with_root_sum) {
      const QuadMat2 fourier = roots_of_unity_sum(log_n, ctx, b, n);
      if (!(value == fourier)) {
        return fail("oracle_agreement", p, pair_witness(b, value, fourier, "mu", "roots_of_unity_sum"));
      }
    }
  }
  return pass("oracle_agreement", p);
}

CheckResult check_additivity(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs) {
  const json p = params(ctx, n);
  const std::int64_t step = int_pow(ctx.p, n);
  for (std::int64_t b : bs) {
    QuadMat2 refined = QuadMat2::Zero();
    for (std::int64_t j = 0; j < ctx.p; ++j) refined += mu(ctx, b + j * step, n + 1).matrix;
    const QuadMat2 coarse = mu(ctx, b, n).matrix;
    if (!(refined == coarse)) return fail("additivity", p, pair_witness(b, refined, coarse, "refined_sum", "mu"));
  }
  return pass("additivity", p);
}

CheckResult check_additivity_identity(const HeckeData& ctx, int n_hi) {
  const json p = params(ctx, n_hi);
  const QuadMat2 sum = chromatic(0, ctx) + QuadElem(ctx.p - 1) * chromatic(1, ctx);
  if (!(sum == companion(ctx))) {
    return fail("additivity_identity", p, {{"chromatic_sum", matrix_to_json(sum)}});
  }
  const QuadMat2 inverse = companion_inverse(ctx);
  for (int n = 0; n < n_hi; ++n) {
    const QuadMat2 next = root_matrix(ctx, n + 1);
    const QuadMat2 stepped = inverse * root_matrix(ctx, n);
    if (!(next == stepped)) {
      return fail("additivity_identity", p,
                  {{"n", n}, {"R_next", matrix_to_json(next)}, {"Cinv_R", matrix_to_json(stepped)}});
    }
  }
  return pass("additivity_identity", p);
}

CheckResult check_vanishing(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs) {
  const json p = params(ctx, n);
  for (std::int64_t b : bs) {
    if (!has_adjacent_nonzero(digits(b, n, ctx.p))) continue;
    const QuadMat2 value = mu(ctx, b, n).matrix;
    if (!is_zero_matrix(value)) return fail("vanishing", p, {{"b", b}, {"mu", matrix_to_json(value)}});
  }
  return pass("vanishing", p);
}

CheckResult check_ap0_parity(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs) {
  const json p = params(ctx, n);
  if (ctx.ap != 0) return pass("ap0_parity", p);
  const QuadMat2 root = root_matrix(ctx, n);
  for (std::int64_t b : bs) {
    const DigitString d = digits(b, n, ctx.p);
    const QuadMat2 value = mu(ctx, b, n).matrix;
    if (!is_zero_matrix(value)) {
      bool even_clear = true;
      bool odd_clear = true;
      for (int i = 0; i < n; ++i) {
        if (d.digits[i] == 0) continue;
        (i % 2 == 0 ? even_clear : odd_clear) = false;
      }
      if (!even_clear && !odd_clear) {
        return fail("ap0_parity", p, {{"b", b}, {"reason", "nonzero with mixed digit parity"}});
      }
    }
    if (is_odd_gap_pattern(run_structure(d))) {
      bool shaped = false;
      for (int sign : {1, -1}) {
        shaped = shaped || value == unit_matrix(0, 1, sign) * root || value == unit_matrix(1, 1, sign) * root;
      }
      if (!shaped) {
        return fail("ap0_parity", p,
                    {{"b", b}, {"reason", "odd-gap value not [[0,±1],[0,0]]R_n or [[0,0],[0,±1]]R_n"},
                     {"mu", matrix_to_json(value)}});
      }
    }
  }
  return pass("ap0_parity", p);
}

CheckResult check_evaluation_lemma(const HeckeData& ctx, int k, int n) {
  json p = params(ctx, n);
  p["k"] = k;
  if (eval_lemma_check(ctx, k, n)) return pass("evaluation_lemma", p);
  return fail("evaluation_lemma", p, {{"reason", "Log^(n) and Log^(k) differ modulo Phi_{p^k}"}});
}

CheckResult check_valuation_bound(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs) {
  const json p = params(ctx, n);
  const bool ordinary = classify(ctx) == Reduction::ordinary;
  if (!ordinary && ctx.p == 2) return pass("valuation_bound", p);
  const ExtValuation bound = ordinary ? ExtValuation(0L) : ExtValuation(supersingular_bound(n));
  for (std::int64_t b : bs) {
    const QuadMat2 value = mu(ctx, b, n).matrix;
    for (int i = 0; i < 2; ++i) {
      for (int col = 0; col < (ordinary ? 1 : 2); ++col) {
        const ExtValuation v =
            ordinary ? hensel_vp_adaptive(value(i, col), ctx).value : quad_vp(value(i, col), ctx);
        // A needs_precision result is a lower bound, which still proves the bound when it clears it.
        if (v < bound) {
          return fail("valuation_bound", p,
                      {{"b", b}, {"row", i}, {"col", col}, {"valuation", to_string(v)}, {"bound", to_string(bound)}});
        }
      }
    }
  }
  return pass("valuation_bound", p);
}

CheckResult check_root_matrix(const HeckeData& ctx, int n_hi) {
  const json p = params(ctx, n_hi);
  const QuadMat2 roots = mat2<QuadElem>(-1, -1, beta(ctx), alpha(ctx));
  const QuadMat2 c = companion(ctx);
  for (int n = 0; n <= n_hi; ++n) {
    const QuadMat2 closed = root_matrix(ctx, n);
    if (!(closed == root_matrix_by_powers(ctx, n)) ||
        !(power(c, root_matrix_exponent(ctx, n)) * closed == roots)) {
      return fail("root_matrix", p, {{"n", n}, {"R_n", matrix_to_json(closed)}});
    }
  }
  return pass("root_matrix", p);
}

CheckResult check_hensel(const HeckeData& ctx, int max_precision) {
  json p{{"p", ctx.p}, {"ap", ctx.ap}, {"eps", ctx.eps}, {"N", max_precision}};
  const Integer prime(static_cast<long>(ctx.p));
  Integer modulus = 1;
  Integer previous;
  for (int N = 1; N <= max_precision; ++N) {
    modulus *= prime;
    const Integer root = hensel_unit_root(ctx, N);
    const Integer f = root * root - ctx.ap * root + Integer(static_cast<long>(ctx.eps * ctx.p));
    if (f % modulus != 0) return fail("hensel", p, {{"N", N}, {"root", root.get_str()}, {"reason", "f(root) != 0"}});
    if (N > 1 && (root - previous) % (modulus / prime) != 0) {
      return fail("hensel", p, {{"N", N}, {"root", root.get_str()}, {"reason", "lift incoherent"}});
    }
    if ((root - ctx.ap) % prime != 0) {
      return fail("hensel", p, {{"N", N}, {"root", root.get_str()}, {"reason", "root not congruent to a_p"}});
    }
    previous = root;
  }
  return pass("hensel", p);
}

QuadElem random_quad(std::mt19937_64& rng, const QuadRing& ring) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  Rational c0(num(rng), den(rng));
  Rational c1(num(rng), den(rng));
  c0.canonicalize();
  c1.canonicalize();
  if (sgn(c1) == 0) return QuadElem(c0);
  return QuadElem(c0, c1, ring);
}

CheckResult check_ring_laws(const HeckeData& ctx, std::uint64_t seed, int trials) {
  json p{{"p", ctx.p}, {"ap", ctx.ap}, {"eps", ctx.eps}, {"seed", seed}, {"trials", trials}};
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(ctx.p * 1000003 + ctx.ap * 101 + ctx.eps));
  const QuadRing ring = ctx.ring();
  const bool supersingular = classify(ctx) == Reduction::supersingular;
  for (int t = 0; t < trials; ++t) {
    const QuadElem x = random_quad(rng, ring);
    const QuadElem y = random_quad(rng, ring);
    const QuadElem z = random_quad(rng, ring);
    const auto witness = [&](const char* law) {
      return json{{"law", law}, {"x", quad_to_json(x)}, {"y", quad_to_json(y)}, {"z", quad_to_json(z)}};
    };
    if (!((x + y) + z == x + (y + z))) return fail("ring_laws", p, witness("additive associativity"));
    if (!(x * (y * z) == (x * y) * z)) return fail("ring_laws", p, witness("associativity"));
    if (!(x * (y + z) == x * y + x * z)) return fail("ring_laws", p, witness("distributivity"));
    if (!(x * y == y * x)) return fail("ring_laws", p, witness("commutativity"));
    if (norm(x * y) != norm(x) * norm(y)) return fail("ring_laws", p, witness("norm multiplicative"));
    if (!(conj(conj(x)) == x) || !(conj(x * y) == conj(x) * conj(y))) {
      return fail("ring_laws", p, witness("conjugation"));
    }
    if (supersingular && !x.is_zero() && !y.is_zero() && quad_vp(x * y, ctx) != quad_vp(x, ctx) + quad_vp(y, ctx)) {
      return fail("ring_laws", p, witness("valuation additive"));
    }
  }
  return pass("ring_laws", p);
}

CheckResult check_lemma_constants(std::int64_t p, int n, std::uint64_t seed, int trials) {
  const std::int64_t period = int_pow(p, n);
  json params_json{{"p", p}, {"n", n}, {"seed", seed}, {"trials", trials}};
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p * 7919 + n));
  std::uniform_int_distribution<std::int64_t> exponent(-(period - 1), period - 1);
  std::uniform_int_distribution<int> term_count(1, 12);
  std::uniform_int_distribution<int> ring_pick(0, 3);
  for (int t = 0; t < trials; ++t) {
    const int pick = ring_pick(rng);
    const QuadRing ring{pick < 2 ? 0 : p, (pick % 2 == 0 ? 1 : -1) * p};
    LaurentPoly f;
    const int count = term_count(rng);
    for (int i = 0; i < count; ++i) f.add_term(exponent(rng), random_quad(rng, ring));
    if (t % 4 == 0) f.add_term(0, random_quad(rng, ring));
    const QuadElem brute = brute_force_root_sum(f, p, n);
    const QuadElem lemma = constant_term_sum(f, p, n);
    if (!(brute == lemma)) {
      json terms = json::object();
      for (const auto& [e, c] : f.terms()) terms[std::to_string(e)] = quad_to_json(c);
      return fail("lemma_constants", params_json,
                  {{"poly", terms}, {"brute_force", quad_to_json(brute)}, {"c0_pn", quad_to_json(lemma)}});
    }
  }
  return pass("lemma_constants", params_json);
}

ValuationRow valuation_profile(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs) {
  ValuationRow row{n, ExtValuation::infinity(), bs.empty() ? 0 : bs.front(), true};
  const bool ordinary = classify(ctx) == Reduction::ordinary;
  for (std::int64_t b : bs) {
    const QuadMat2 value = mu(ctx, b, n).matrix;
    for (int i = 0; i < 2; ++i) {
      for (int col = 0; col < (ordinary ? 1 : 2); ++col) {
        ExtValuation v = ExtValuation::infinity();
        if (ordinary) {
          const HenselValuation h = hensel_vp_adaptive(value(i, col), ctx);
          v = h.value;
          if (!h.exact() && v < row.min_valuation) row.exact = false;
        } else {
          v = quad_vp(value(i, col), ctx);
        }
        if (v < row.min_valuation) {
          row.min_valuation = v;
          row.argmin_b = b;
        }
      }
    }
  }
  return row;
}

Report run_verify(const GridSpec& grid, std::uint64_t seed, int jobs) {
  if (grid.cell_count() > grid.cell_cap) {
    throw std::invalid_argument("grid has " + std::to_string(grid.cell_count()) + " cells, above cell_cap " +
                                std::to_string(grid.cell_cap));
  }
  using Task = std::function<std::vector<CheckResult>()>;
  std::vector<Task> tasks;
  for (const HeckeData& ctx : grid.contexts()) {
    const int lo = grid.lowest_n();
    const int hi = grid.highest_n(ctx.p);
    for (int n = lo; n <= hi; ++n) {
      tasks.emplace_back([&grid, ctx, n, hi] {
        const auto bs = grid.residues(ctx.p, n);
        std::vector<CheckResult> out;
        out.push_back(check_oracle_agreement(ctx, n, bs, int_pow(ctx.p, n) <= grid.root_sum_cap));
        if (n < hi) out.push_back(check_additivity(ctx, n, bs));
        out.push_back(check_vanishing(ctx, n, bs));
        if (ctx.ap == 0) out.push_back(check_ap0_parity(ctx, n, bs));
        out.push_back(check_valuation_bound(ctx, n, bs));
        for (int k = std::max(1, n - 3); k <= n; ++k) out.push_back(check_evaluation_lemma(ctx, k, n));
        return out;
      });
    }
    tasks.emplace_back([ctx, hi, seed] {
      std::vector<CheckResult> out{check_additivity_identity(ctx, hi), check_root_matrix(ctx, hi),
                                   check_ring_laws(ctx, seed, 200)};
      if (classify(ctx) == Reduction::ordinary) out.push_back(check_hensel(ctx, 8));
      return out;
    });
  }
  for (std::int64_t p : grid.primes) {
    for (int n = 1; int_pow(p, n) <= 81; ++n) {
      tasks.emplace_back([p, n, seed] { return std::vector<CheckResult>{check_lemma_constants(p, n, seed, 200)}; });
    }
  }

  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = tasks[i]();
      } catch (const std::exception& e) {
        slots[i] = {fail("exception", {{"task", i}}, {{"what", e.what()}})};
      }
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  Report report;
  for (auto& slot : slots) {
    for (auto& c : slot) report.checks.push_back(std::move(c));
  }
  std::sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.params) < std::tie(b.name, b.params);
  });
  return report;
}

}  // namespace logdist
