// Command-line front end: mu, verify, logpoly, valuations, digits.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "logdist/oracle.hpp"
#include "logdist/verify.hpp"

namespace {

using namespace logdist;

struct CommonFlags {
  std::int64_t p = 3;
  std::int64_t ap = 0;
  int eps = 1;
  int n_max = 12;
  std::string format = "text";
};

void add_context_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--p", f.p, "prime p")->required();
  cmd->add_option("--ap", f.ap, "Hecke eigenvalue a_p")->required();
  cmd->add_option("--eps", f.eps, "Nebentypus value eps(p), +1 or -1")->default_val(1);
  cmd->add_option("--n-max", f.n_max, "working depth bound")->default_val(12);
  cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "text"}))->default_val("text");
}

std::string matrix_text(const QuadMat2& m) {
  std::ostringstream os;
  os << "[[" << m(0, 0) << ", " << m(0, 1) << "],\n [" << m(1, 0) << ", " << m(1, 1) << "]]";
  return os.str();
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

int cmd_mu(const CommonFlags& f, std::int64_t b, int n, bool oracle) {
  const HeckeData ctx = HeckeData::make(f.p, f.ap, f.eps, f.n_max);
  if (n < 1 || n > ctx.n_max) {
    throw std::invalid_argument("--n must lie in [1, n_max=" + std::to_string(ctx.n_max) + "]");
  }
  const DistributionValue value = mu(ctx, b, n);
  std::optional<bool> match;
  if (oracle) match = mu_oracle(ctx, value.b, n) == value.matrix;

  if (f.format == "json") {
    json out = distribution_to_json(value);
    if (match) out["oracle"] = *match ? "match" : "mismatch";
    std::cout << out.dump(2) << "\n";
  } else {
    const DigitString d = digits(value.b, n, ctx.p);
    std::cout << "ctx     " << describe(ctx) << " " << to_string(classify(ctx)) << "\n"
              << "coset   " << value.b << " + " << ctx.p << "^" << n << " Z_p\n"
              << "digits  " << join(d.digits) << "\n"
              << "runs    " << join(run_structure(d).zero_runs) << "\n"
              << "mu      " << matrix_text(value.matrix) << "\n";
    for (const std::string& flag : value.flags()) {
      if (flag == "zero:consecutive-nonzero-digits") {
        std::cout << "note    consecutive nonzero digits force the zero matrix\n";
      } else {
        std::cout << "flag    " << flag << "\n";
      }
    }
    if (match) std::cout << "oracle: " << (*match ? "match" : "mismatch") << "\n";
  }
  return match.value_or(true) ? 0 : 1;
}

int cmd_logpoly(const CommonFlags& f, int n) {
  const HeckeData ctx = HeckeData::make(f.p, f.ap, f.eps, f.n_max);
  const PolyMat2 log_n = log_truncation(ctx, n);
  if (f.format == "json") {
    std::cout << json{{"ctx", ctx_to_json(ctx)}, {"n", n}, {"variable", "x = 1+T"}, {"matrix", polymat_to_json(log_n)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "Log^(" << n << ") for " << describe(ctx) << " in x = 1+T\n";
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      std::cout << "entry (" << i << "," << k << "):";
      const PolyQ& f_ik = log_n(i, k);
      for (std::size_t e = 0; e < f_ik.size(); ++e) {
        if (!f_ik[e].is_zero()) std::cout << " [" << e << "] " << f_ik[e] << ";";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_valuations(const CommonFlags& f, int n_lo, int n_hi) {
  const HeckeData ctx = HeckeData::make(f.p, f.ap, f.eps, f.n_max);
  if (n_lo < 1 || n_hi < n_lo || n_hi > ctx.n_max) throw std::invalid_argument("need 1 <= --n-lo <= --n-hi <= n_max");
  const bool ordinary = classify(ctx) == Reduction::ordinary;
  json rows = json::array();
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<std::int64_t> bs(static_cast<std::size_t>(int_pow(ctx.p, n)));
    for (std::size_t i = 0; i < bs.size(); ++i) bs[i] = static_cast<std::int64_t>(i);
    const ValuationRow row = valuation_profile(ctx, n, bs);
    json r{{"n", n}, {"min_valuation", to_string(row.min_valuation)}, {"argmin_b", row.argmin_b}, {"exact", row.exact}};
    if (!ordinary) r["bound"] = to_string(supersingular_bound(n));
    rows.push_back(std::move(r));
  }
  if (f.format == "json") {
    std::cout << json{{"ctx", ctx_to_json(ctx)}, {"columns", ordinary ? "first" : "both"}, {"rows", rows}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << "min entry valuation of mu over b, " << describe(ctx) << ", "
            << (ordinary ? "first column (hensel_vp)" : "all entries (quad_vp)") << "\n";
  std::cout << "n\tmin_v\targmin_b" << (ordinary ? "" : "\tbound") << "\n";
  for (const json& r : rows) {
    std::cout << r["n"].get<int>() << "\t" << r["min_valuation"].get<std::string>() << "\t" << r["argmin_b"].get<long>();
    if (!ordinary) std::cout << "\t" << r["bound"].get<std::string>();
    std::cout << "\n";
  }
  return 0;
}

int cmd_digits(std::int64_t b, int n, std::int64_t p, const std::string& format) {
  const DigitString d = digits(b, n, p);
  const RunStructure runs = run_structure(d);
  if (format == "json") {
    std::cout << json{{"p", p}, {"n", n}, {"b", d.b}, {"digits", d.digits}, {"runs", runs.zero_runs},
                      {"nonzero", runs.nonzero_count()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "b       " << d.b << " (mod " << p << "^" << n << ")\n"
              << "digits  " << join(d.digits) << "  (least significant first)\n"
              << "runs    " << join(runs.zero_runs) << "  (l = " << runs.zero_runs.size() << ")\n";
  }
  return 0;
}

int cmd_verify(const std::string& grid_file, std::uint64_t seed, int jobs, const std::string& format) {
  GridSpec grid;
  if (!grid_file.empty()) {
    std::ifstream in(grid_file);
    if (!in) throw std::invalid_argument("cannot open grid file " + grid_file);
    grid = GridSpec::from_json(json::parse(in));
  }
  const Report report = run_verify(grid, seed, jobs);
  if (format == "json") {
    json out = report.to_json();
    out["grid"] = grid.to_json();
    out["seed"] = seed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distribution matrices of the logarithm matrix via p-adic digits"};
  app.require_subcommand(1);

  CommonFlags mu_flags;
  std::int64_t mu_b = 0;
  int mu_n = 1;
  bool mu_oracle_flag = false;
  auto* mu_cmd = app.add_subcommand("mu", "value of the distribution matrix on b + p^n Z_p");
  add_context_flags(mu_cmd, mu_flags);
  mu_cmd->add_option("--b", mu_b, "coset representative")->required();
  mu_cmd->add_option("--n", mu_n, "coset depth")->required();
  mu_cmd->add_flag("--oracle", mu_oracle_flag, "cross-check against the constant-term oracle");

  CommonFlags log_flags;
  int log_n = 1;
  auto* log_cmd = app.add_subcommand("logpoly", "truncated logarithm matrix as sparse polynomials");
  add_context_flags(log_cmd, log_flags);
  log_cmd->add_option("--n", log_n, "truncation depth")->required();

  CommonFlags val_flags;
  int val_lo = 1;
  int val_hi = 4;
  auto* val_cmd = app.add_subcommand("valuations", "minimum entry valuation of mu over b, per n");
  add_context_flags(val_cmd, val_flags);
  val_cmd->add_option("--n-lo", val_lo, "first depth")->default_val(1);
  val_cmd->add_option("--n-hi,--n", val_hi, "last depth")->default_val(4);

  std::int64_t dig_b = 0;
  std::int64_t dig_p = 3;
  int dig_n = 1;
  std::string dig_format = "text";
  auto* dig_cmd = app.add_subcommand("digits", "base-p digits and zero-run structure");
  dig_cmd->add_option("--b", dig_b, "integer")->required();
  dig_cmd->add_option("--n", dig_n, "number of digits")->required();
  dig_cmd->add_option("--p", dig_p, "prime")->required();
  dig_cmd->add_option("--format", dig_format)->check(CLI::IsMember({"json", "text"}))->default_val("text");

  std::string grid_file;
  std::uint64_t seed = 20240601;
  int jobs = 1;
  std::string ver_format = "text";
  auto* ver_cmd = app.add_subcommand("verify", "run the verification grid");
  ver_cmd->add_option("--grid", grid_file, "GridSpec JSON file (default grid when omitted)");
  ver_cmd->add_option("--seed", seed, "seed for randomized checks")->default_val(20240601);
  ver_cmd->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  ver_cmd->add_option("--format", ver_format)->check(CLI::IsMember({"json", "text"}))->default_val("text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mu_cmd) return cmd_mu(mu_flags, mu_b, mu_n, mu_oracle_flag);
    if (*log_cmd) return cmd_logpoly(log_flags, log_n);
    if (*val_cmd) return cmd_valuations(val_flags, val_lo, val_hi);
    if (*dig_cmd) return cmd_digits(dig_b, dig_n, dig_p, dig_format);
    if (*ver_cmd) return cmd_verify(grid_file, seed, jobs, ver_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
