#pragma once

#include <json.hpp>

#include "logdist/distribution.hpp"
#include "logdist/logmatrix.hpp"

namespace logdist {

using json = nlohmann::json;

// Rational  -> "num/den" ("num" when den = 1)
// QuadElem  -> {"c0": Rational, "c1": Rational}
// HeckeData -> {"p": ..., "ap": ..., "eps": ..., "n_max": ...}
// matrices  -> row-major arrays of rows
// PolyQ     -> sparse {"exponent": QuadElem}

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// Context-free on the wire; `ring` is attached on decode when c1 ≠ 0.
json quad_to_json(const QuadElem& x);
QuadElem quad_from_json(const json& j, const QuadRing& ring);

json ctx_to_json(const HeckeData& ctx);
/// Validates through HeckeData::make; "n_max" is optional.
HeckeData ctx_from_json(const json& j);

json matrix_to_json(const QuadMat2& m);
QuadMat2 matrix_from_json(const json& j, const QuadRing& ring);

json poly_to_json(const PolyQ& f);
PolyQ poly_from_json(const json& j, const QuadRing& ring);

json polymat_to_json(const PolyMat2& m);

json tensor_to_json(const TensorElem& x);
json two_variable_to_json(const TwoVariableMatrix& m);

json digits_to_json(const DigitString& d);
json runs_to_json(const RunStructure& r);

/// {ctx, b, n, digits, runs, matrix, flags}
json distribution_to_json(const DistributionValue& v);

}  // namespace logdist
