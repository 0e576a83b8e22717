// JSON codecs for the engine's value types.

#include "derham/json_io.hpp"

#include <set>
#include <string>
#include <utility>

#include "derham/errors.hpp"

namespace derham {

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_string()) {
    auto parsed = parse_rational(value.get<std::string>());
    if (parsed) return *parsed;
    throw ParseError("invalid rational literal '" + value.get<std::string>() +
                     "'");
  }
  throw ParseError("expected a rational as \"num/den\" string or integer");
}

Json rational_vector_to_json(const RationalVector& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

RationalVector rational_vector_from_json(const Json& value) {
  if (!value.is_array()) throw ParseError("expected an array of rationals");
  RationalVector out;
  for (const auto& entry : value) out.push_back(rational_from_json(entry));
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    rows.push_back(rational_vector_to_json(m.row(i)));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json chain_to_json(const Chain& c) {
  Json out = Json::array();
  for (const auto& [s, coefficient] : c.coefficients()) {
    out.push_back(
        Json{{"simplex", s.vertices()}, {"coeff", rational_to_json(coefficient)}});
  }
  return out;
}

Json cochain_to_json(const Cochain& f) {
  return Json{{"dim", f.dim()}, {"values", rational_vector_to_json(f.values())}};
}

Json homology_to_json(const SimplicialComplex& k, const HomologyBasis& basis) {
  Json cycles = Json::array();
  for (const auto& representative : basis.representatives) {
    cycles.push_back(chain_to_json(
        chain_from_coordinates(k, basis.dim, representative)));
  }
  return Json{{"dim", basis.dim},
              {"betti", basis.betti()},
              {"cycles", cycles}};
}

Json polyform_to_json(const PolyForm& w) {
  const SimplicialComplex& k = w.complex();
  const int n = k.dim();
  Json simplices = Json::array();
  for (Index t = 0; t < k.count(n); ++t) {
    const auto& terms = w.terms(t);
    if (terms.empty()) continue;
    Json list = Json::array();
    for (const auto& term : terms) {
      Json monomial = Json::array();
      for (const auto& [v, exponent] : term.monomial) {
        monomial.push_back(Json::array({v, exponent}));
      }
      list.push_back(Json{{"coeff", rational_to_json(term.coefficient)},
                          {"monomial", std::move(monomial)},
                          {"frame", term.frame}});
    }
    simplices.push_back(Json{{"simplex", k.simplices(n)[t].vertices()},
                             {"terms", std::move(list)}});
  }
  return Json{{"degree", w.degree()}, {"simplices", std::move(simplices)}};
}

PolyForm polyform_from_json(const SimplicialComplex& k, const Json& doc) {
  if (!doc.is_object() || !doc.contains("degree") ||
      !doc.contains("simplices")) {
    throw ParseError("form JSON must carry 'degree' and 'simplices'");
  }
  if (!doc["degree"].is_number_integer()) {
    throw ParseError("form 'degree' must be an integer");
  }
  const int degree = doc["degree"].get<int>();
  if (!doc["simplices"].is_array()) {
    throw ParseError("form 'simplices' must be an array");
  }

  const int n = k.dim();
  std::map<Index, std::vector<BarycentricTerm>> raw;
  for (const auto& entry : doc["simplices"]) {
    if (!entry.is_object() || !entry.contains("simplex") ||
        !entry.contains("terms")) {
      throw ParseError("each form entry needs 'simplex' and 'terms'");
    }
    if (!entry["simplex"].is_array()) {
      throw ParseError("form 'simplex' must be a vertex list");
    }
    std::vector<VertexId> vertices;
    for (const auto& v : entry["simplex"]) {
      if (!v.is_number_integer()) {
        throw ParseError("form simplex vertices must be integers");
      }
      vertices.push_back(v.get<int>());
    }
    Simplex simplex(std::move(vertices));
    if (simplex.dim() != n) {
      throw ParseError("form entry simplex " + simplex.to_string() +
                       " is not top-dimensional");
    }
    auto index = k.index_of(simplex);
    if (!index) {
      throw ParseError("form entry simplex " + simplex.to_string() +
                       " does not belong to the complex");
    }
    if (raw.count(*index)) {
      throw ParseError("duplicate form entry for simplex " +
                       simplex.to_string());
    }

    if (!entry["terms"].is_array()) {
      throw ParseError("form 'terms' must be an array");
    }
    std::vector<BarycentricTerm> terms;
    for (const auto& item : entry["terms"]) {
      if (!item.is_object() || !item.contains("coeff") ||
          !item.contains("monomial") || !item.contains("frame")) {
        throw ParseError("each term needs 'coeff', 'monomial' and 'frame'");
      }
      BarycentricTerm term;
      term.coefficient = rational_from_json(item["coeff"]);
      if (!item["monomial"].is_array()) {
        throw ParseError("term 'monomial' must be an array of [vertex, "
                         "exponent] pairs");
      }
      for (const auto& pair : item["monomial"]) {
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
          throw ParseError("monomial entries must be [vertex, exponent] "
                           "integer pairs");
        }
        VertexId v = pair[0].get<int>();
        if (term.monomial.count(v)) {
          throw ParseError("duplicate monomial vertex " + std::to_string(v));
        }
        term.monomial.emplace(v, pair[1].get<int>());
      }
      if (!item["frame"].is_array()) {
        throw ParseError("term 'frame' must be a vertex list");
      }
      for (const auto& v : item["frame"]) {
        if (!v.is_number_integer()) {
          throw ParseError("frame vertices must be integers");
        }
        term.frame.push_back(v.get<int>());
      }
      terms.push_back(std::move(term));
    }
    raw.emplace(*index, std::move(terms));
  }
  return make_form(k, degree, raw);
}

Json complex_summary(const SimplicialComplex& k) {
  Json counts = Json::array();
  for (int p = 0; p <= k.dim(); ++p) counts.push_back(k.count(p));
  return Json{{"dim", k.dim()},
              {"simplex_counts", std::move(counts)},
              {"euler_characteristic", k.euler_characteristic()},
              {"is_closed_manifold", k.is_closed_manifold()},
              {"is_oriented", k.is_oriented()}};
}

}  // namespace derham
