#pragma once

#include <cstdint>
#include <string>

namespace logdist {

enum class Reduction { ordinary, supersingular };

std::string to_string(Reduction r);

/// The ring Q[α]/(α² − trace·α + norm). For a Hecke polynomial
/// X² − a_p X + εp this is trace = a_p, norm = εp.
struct QuadRing {
  std::int64_t trace = 0;
  std::int64_t norm = 0;

  friend bool operator==(const QuadRing&, const QuadRing&) = default;
};

/// Arithmetic context (p, a_p, ε) of a weight-2 eigenform at p, plus the
/// working depth bound n_max. Construct through make() to get validation.
struct HeckeData {
  std::int64_t p = 0;
  std::int64_t ap = 0;
  int eps = 1;
  int n_max = 12;

  /// Throws std::invalid_argument naming the violated constraint.
  static HeckeData make(std::int64_t p, std::int64_t ap, int eps, int n_max = 12);

  QuadRing ring() const { return QuadRing{ap, eps * p}; }

  friend bool operator==(const HeckeData&, const HeckeData&) = default;
};

Reduction classify(const HeckeData& ctx);

std::string describe(const HeckeData& ctx);

}  // namespace logdist
