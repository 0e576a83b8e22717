// Text and JSON readers for maximal-simplex listings.

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "derham/complex.hpp"
#include "derham/errors.hpp"

namespace derham {

namespace {

SimplicialComplex load_text(std::istream& in) {
  std::vector<std::vector<VertexId>> maximal;
  int max_vertex = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string word;
    if (!(words >> word)) continue;  // blank or comment-only line
    if (word != "simplex") {
      throw ParseError("expected 'simplex', got '" + word + "'", line_no);
    }
    std::vector<VertexId> vertices;
    while (words >> word) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(word, &used);
      } catch (const std::exception&) {
        throw ParseError("invalid vertex id '" + word + "'", line_no);
      }
      if (used != word.size() || v < 0) {
        throw ParseError("invalid vertex id '" + word + "'", line_no);
      }
      vertices.push_back(v);
      max_vertex = std::max(max_vertex, v);
    }
    if (vertices.empty()) {
      throw ParseError("simplex line lists no vertices", line_no);
    }
    maximal.push_back(std::move(vertices));
  }
  return SimplicialComplex::from_maximal(max_vertex + 1, maximal);
}

SimplicialComplex load_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc.contains("maximal_simplices")) {
    throw ParseError(
        "complex JSON must be an object with 'vertices' and "
        "'maximal_simplices'");
  }
  if (!doc["vertices"].is_number_integer()) {
    throw ParseError("'vertices' must be an integer");
  }
  int vertex_count = doc["vertices"].get<int>();
  if (!doc["maximal_simplices"].is_array()) {
    throw ParseError("'maximal_simplices' must be an array of vertex lists");
  }
  std::vector<std::vector<VertexId>> maximal;
  for (const auto& entry : doc["maximal_simplices"]) {
    if (!entry.is_array() || entry.empty()) {
      throw ParseError("each maximal simplex must be a nonempty vertex list");
    }
    std::vector<VertexId> vertices;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) {
        throw ParseError("vertex ids must be integers");
      }
      vertices.push_back(v.get<int>());
    }
    maximal.push_back(std::move(vertices));
  }
  return SimplicialComplex::from_maximal(vertex_count, maximal);
}

}  // namespace

SimplicialComplex load_complex(std::istream& in, ComplexFormat format) {
  switch (format) {
    case ComplexFormat::text:
      return load_text(in);
    case ComplexFormat::json:
      return load_json(in);
  }
  throw ParseError("unknown complex format");
}

std::string to_text_format(const SimplicialComplex& k) {
  // A simplex is maximal exactly when it is nobody's facet.
  std::ostringstream out;
  for (int p = 0; p <= k.dim(); ++p) {
    std::set<Simplex> facets_above;
    for (const auto& s : k.simplices(p + 1)) {
      for (int i = 0; i <= s.dim(); ++i) facets_above.insert(s.facet(i));
    }
    for (const auto& s : k.simplices(p)) {
      if (facets_above.count(s)) continue;
      out << "simplex";
      for (VertexId v : s.vertices()) out << ' ' << v;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace derham
