#include "logdist/serialize.hpp"

#include <stdexcept>
#include <string>

namespace logdist {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

json quad_to_json(const QuadElem& x) {
  return {{"c0", rational_to_json(x.c0())}, {"c1", rational_to_json(x.c1())}};
}

QuadElem quad_from_json(const json& j, const QuadRing& ring) {
  Rational c0 = rational_from_json(j.at("c0"));
  Rational c1 = rational_from_json(j.at("c1"));
  if (sgn(c1) == 0) return QuadElem(std::move(c0));
  return QuadElem(std::move(c0), std::move(c1), ring);
}

json ctx_to_json(const HeckeData& ctx) {
  return {{"p", ctx.p}, {"ap", ctx.ap}, {"eps", ctx.eps}, {"n_max", ctx.n_max}};
}

HeckeData ctx_from_json(const json& j) {
  return HeckeData::make(j.at("p").get<std::int64_t>(), j.at("ap").get<std::int64_t>(),
                         j.at("eps").get<int>(), j.value("n_max", 12));
}

json matrix_to_json(const QuadMat2& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) rows.push_back({quad_to_json(m(i, 0)), quad_to_json(m(i, 1))});
  return rows;
}

QuadMat2 matrix_from_json(const json& j, const QuadRing& ring) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("matrix must have 2 rows");
  QuadMat2 m;
  for (int i = 0; i < 2; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != 2) throw std::invalid_argument("matrix rows must have 2 entries");
    for (int k = 0; k < 2; ++k) m(i, k) = quad_from_json(row.at(static_cast<std::size_t>(k)), ring);
  }
  return m;
}

json poly_to_json(const PolyQ& f) {
  json out = json::object();
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (!f[e].is_zero()) out[std::to_string(e)] = quad_to_json(f[e]);
  }
  return out;
}

PolyQ poly_from_json(const json& j, const QuadRing& ring) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a sparse exponent map");
  std::vector<QuadElem> c;
  for (const auto& [key, value] : j.items()) {
    const long e = std::stol(key);
    if (e < 0) throw std::invalid_argument("negative exponent in polynomial");
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = quad_from_json(value, ring);
  }
  return PolyQ(std::move(c));
}

json polymat_to_json(const PolyMat2& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) rows.push_back({poly_to_json(m(i, 0)), poly_to_json(m(i, 1))});
  return rows;
}

json tensor_to_json(const TensorElem& x) {
  return {{"1", rational_to_json(x.u0().c0())},
          {"a1", rational_to_json(x.u0().c1())},
          {"a2", rational_to_json(x.u1().c0())},
          {"a1a2", rational_to_json(x.u1().c1())}};
}

json two_variable_to_json(const TwoVariableMatrix& m) {
  return std::visit(
      [](const auto& mat) {
        json rows = json::array();
        for (int i = 0; i < 4; ++i) {
          json row = json::array();
          for (int k = 0; k < 4; ++k) {
            if constexpr (std::is_same_v<std::decay_t<decltype(mat)>, Mat4<QuadElem>>) {
              row.push_back(quad_to_json(mat(i, k)));
            } else {
              row.push_back(tensor_to_json(mat(i, k)));
            }
          }
          rows.push_back(std::move(row));
        }
        return rows;
      },
      m);
}

json digits_to_json(const DigitString& d) { return d.digits; }

json runs_to_json(const RunStructure& r) { return r.zero_runs; }

json distribution_to_json(const DistributionValue& v) {
  const DigitString d = digits(v.b, v.n, v.ctx.p);
  return {{"ctx", ctx_to_json(v.ctx)},
          {"b", v.b},
          {"n", v.n},
          {"digits", digits_to_json(d)},
          {"runs", runs_to_json(run_structure(d))},
          {"matrix", matrix_to_json(v.matrix)},
          {"flags", v.flags()}};
}

}  // namespace logdist
