// Canonical complexes used throughout the test corpus and CLI.

#include <string>
#include <vector>

#include "derham/complex.hpp"
#include "derham/errors.hpp"

namespace derham {

namespace {

SimplicialComplex make_circle(int k) {
  if (k < 3) {
    throw StructuralError("circle needs at least 3 vertices, got " +
                          std::to_string(k));
  }
  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, k - 1});
  return SimplicialComplex::from_maximal(k, edges);
}

SimplicialComplex make_interval(int k) {
  if (k < 1) {
    throw StructuralError("interval needs at least 1 edge, got " +
                          std::to_string(k));
  }
  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, i + 1});
  return SimplicialComplex::from_maximal(k + 1, edges);
}

SimplicialComplex make_sphere2() {
  return SimplicialComplex::from_maximal(
      4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// 3x3 grid with wraparound; each cell split into two triangles.
SimplicialComplex make_torus9() {
  auto v = [](int i, int j) { return 3 * (((i % 3) + 3) % 3) + (((j % 3) + 3) % 3); };
  std::vector<std::vector<VertexId>> tris;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_maximal(9, tris);
}

// Moebius-Kantor torus: vertex-minimal 7-vertex triangulation.
SimplicialComplex make_torus7() {
  std::vector<std::vector<VertexId>> tris;
  for (int i = 0; i < 7; ++i) {
    tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_maximal(7, tris);
}

// Hemi-icosahedron: antipodal quotient of the icosahedron.
SimplicialComplex make_projective_plane() {
  return SimplicialComplex::from_maximal(
      6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
          {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

// Same 3x3 grid as the torus, but one gluing direction is reversed.
SimplicialComplex make_klein_bottle() {
  auto v = [](int i, int j) {
    j = ((j % 3) + 3) % 3;
    if (i >= 3) {
      i -= 3;
      j = (3 - j) % 3;
    }
    return 3 * (i % 3) + j;
  };
  std::vector<std::vector<VertexId>> tris;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  }
  return SimplicialComplex::from_maximal(9, tris);
}

}  // namespace

SimplicialComplex canonical_complex(CanonicalName name, int size) {
  switch (name) {
    case CanonicalName::circle:
      return make_circle(size == 0 ? 3 : size);
    case CanonicalName::interval:
      return make_interval(size == 0 ? 1 : size);
    case CanonicalName::sphere2:
      return make_sphere2();
    case CanonicalName::torus:
      return make_torus9();
    case CanonicalName::torus7:
      return make_torus7();
    case CanonicalName::projective_plane:
      return make_projective_plane();
    case CanonicalName::klein_bottle:
      return make_klein_bottle();
  }
  throw StructuralError("unknown canonical complex");
}

std::optional<CanonicalName> canonical_name_from_string(std::string_view text) {
  if (text == "circle") return CanonicalName::circle;
  if (text == "sphere2") return CanonicalName::sphere2;
  if (text == "torus") return CanonicalName::torus;
  if (text == "torus7") return CanonicalName::torus7;
  if (text == "projective_plane") return CanonicalName::projective_plane;
  if (text == "klein_bottle") return CanonicalName::klein_bottle;
  if (text == "interval") return CanonicalName::interval;
  return std::nullopt;
}

}  // namespace derham
