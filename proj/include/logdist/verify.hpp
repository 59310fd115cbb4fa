#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "logdist/serialize.hpp"

namespace logdist {

/// Parameter grid for verification runs. Unset optionals take the defaults:
/// a_p ∈ {0, p, −p} ∪ ({1, −1, 2} filtered by p ∤ a_p), n ∈ [1, 5] for
/// p ≤ 3 and [1, 4] otherwise, every residue b.
struct GridSpec {
  std::vector<std::int64_t> primes{2, 3, 5};
  std::optional<std::vector<std::int64_t>> ap;
  std::vector<int> eps{1, -1};
  std::optional<int> n_lo;
  std::optional<int> n_hi;
  std::optional<std::vector<std::int64_t>> b;
  /// Upper bound on (ctx, b, n) cells; exceeding it is a usage error.
  std::int64_t cell_cap = 1'000'000;
  /// roots_of_unity_sum only runs where p^n is at most this.
  std::int64_t root_sum_cap = 243;
  int n_max = 12;

  static GridSpec from_json(const json& j);
  json to_json() const;

  std::vector<std::int64_t> ap_values(std::int64_t p) const;
  int lowest_n() const { return n_lo.value_or(1); }
  int highest_n(std::int64_t p) const;
  std::vector<HeckeData> contexts() const;
  /// Coset representatives in [0, p^n): the b-list reduced mod p^n, or all.
  std::vector<std::int64_t> residues(std::int64_t p, int n) const;
  std::int64_t cell_count() const;
};

std::vector<std::int64_t> default_ap_values(std::int64_t p);

struct CheckResult {
  std::string name;
  json params;
  bool pass = true;
  json witness;  // null on success
};

struct Report {
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  /// {"checks": [...], "summary": {"total", "passed", "failed"}}, sorted.
  json to_json() const;
  std::string to_text() const;
};

/// Runs every check over the grid. Randomized checks draw from `seed`;
/// `jobs` worker threads share the context list.
Report run_verify(const GridSpec& grid, std::uint64_t seed, int jobs);

// Individual checks, exposed for the CLI and tests.
CheckResult check_oracle_agreement(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs,
                                   bool with_root_sum);
CheckResult check_additivity(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs);
CheckResult check_additivity_identity(const HeckeData& ctx, int n_hi);
CheckResult check_vanishing(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs);
CheckResult check_ap0_parity(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs);
CheckResult check_evaluation_lemma(const HeckeData& ctx, int k, int n);
CheckResult check_valuation_bound(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs);
CheckResult check_root_matrix(const HeckeData& ctx, int n_hi);
CheckResult check_hensel(const HeckeData& ctx, int max_precision);
CheckResult check_ring_laws(const HeckeData& ctx, std::uint64_t seed, int trials);
CheckResult check_lemma_constants(std::int64_t p, int n, std::uint64_t seed, int trials);

/// True when some two consecutive digits are both nonzero.
bool has_adjacent_nonzero(const DigitString& d);

/// At least one nonzero digit and every run after the first (m_2..m_l,
/// trailing run included) has odd length.
bool is_odd_gap_pattern(const RunStructure& r);

/// Lower bound −(n+3)/2 for supersingular entries at odd p.
Rational supersingular_bound(int n);

/// Minimum entry valuation of mu(ctx, b, n) over the given b. Supersingular:
/// quad_vp of all entries; ordinary: hensel_vp of the first column.
struct ValuationRow {
  int n = 0;
  ExtValuation min_valuation = ExtValuation::infinity();
  std::int64_t argmin_b = 0;
  bool exact = true;
};
ValuationRow valuation_profile(const HeckeData& ctx, int n, const std::vector<std::int64_t>& bs);

/// Seeded random QuadElem with small numerators and denominators.
QuadElem random_quad(std::mt19937_64& rng, const QuadRing& ring);

}  // namespace logdist
