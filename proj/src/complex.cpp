// Construction and combinatorics of simplicial complexes.

#include "derham/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "derham/errors.hpp"

namespace derham {

namespace {

std::string format_vertices(const std::vector<VertexId>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] >= vertices_[i + 1]) {
      throw StructuralError("simplex vertices must be strictly increasing: " +
                            format_vertices(vertices_));
    }
  }
}

Simplex Simplex::facet(int i) const {
  if (i < 0 || i > dim()) throw DimensionError("facet index out of range");
  std::vector<VertexId> rest;
  rest.reserve(vertices_.size() - 1);
  for (int j = 0; j <= dim(); ++j) {
    if (j != i) rest.push_back(vertices_[j]);
  }
  return Simplex(std::move(rest));
}

Simplex Simplex::front_face(int p) const {
  if (p < 0 || p > dim()) throw DimensionError("front face dim out of range");
  return Simplex(std::vector<VertexId>(vertices_.begin(),
                                       vertices_.begin() + p + 1));
}

Simplex Simplex::back_face(int p) const {
  if (p < 0 || p > dim()) throw DimensionError("back face dim out of range");
  return Simplex(std::vector<VertexId>(vertices_.end() - p - 1,
                                       vertices_.end()));
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(vertices_.begin(), vertices_.end(),
                       other.vertices_.begin(), other.vertices_.end());
}

std::string Simplex::to_string() const { return format_vertices(vertices_); }

void Chain::add(const Simplex& simplex, const Rational& coefficient) {
  if (simplex.dim() != dim_) {
    throw DimensionError("chain of dim " + std::to_string(dim_) +
                         " cannot hold simplex " + simplex.to_string());
  }
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs_.emplace(simplex, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational Chain::coefficient(const Simplex& simplex) const {
  auto it = coeffs_.find(simplex);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.dim_ != dim_) throw DimensionError("chain dimension mismatch");
  for (const auto& [s, c] : other.coeffs_) add(s, c);
  return *this;
}

Chain& Chain::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [s, c] : coeffs_) c *= scalar;
  return *this;
}

namespace {

// Every subset of the vertex list, emitted as a simplex.
void insert_with_faces(const Simplex& top, std::set<Simplex>& out) {
  const auto& v = top.vertices();
  const std::size_t k = v.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t(1) << i)) sub.push_back(v[i]);
    }
    out.insert(Simplex(std::move(sub)));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(
    int vertex_count, const std::vector<std::vector<VertexId>>& maximal) {
  if (vertex_count < 0) throw StructuralError("negative vertex count");
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;

  std::set<Simplex> seen_input;
  std::set<Simplex> all;
  for (const auto& raw : maximal) {
    std::vector<VertexId> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    Simplex s(std::move(sorted));
    for (VertexId v : s.vertices()) {
      if (v < 0 || v >= vertex_count) {
        throw StructuralError("vertex " + std::to_string(v) +
                              " out of range [0, " +
                              std::to_string(vertex_count) + ") in simplex " +
                              s.to_string());
      }
    }
    if (!seen_input.insert(s).second) {
      throw StructuralError("duplicate simplex " + s.to_string());
    }
    insert_with_faces(s, all);
  }

  int top = -1;
  for (const auto& s : all) top = std::max(top, s.dim());
  k.by_dim_.assign(top + 1, {});
  for (const auto& s : all) k.by_dim_[s.dim()].push_back(s);
  // std::set iterates in sorted order, so each dimension slice is sorted.

  k.index_by_dim_.assign(top + 1, {});
  for (int p = 0; p <= top; ++p) {
    for (Index i = 0; i < k.by_dim_[p].size(); ++i) {
      k.index_by_dim_[p].emplace(k.by_dim_[p][i], i);
    }
  }

  if (top >= 0) {
    for (Index t = 0; t < k.by_dim_[top].size(); ++t) {
      std::set<Simplex> faces;
      insert_with_faces(k.by_dim_[top][t], faces);
      for (const auto& f : faces) k.covering_[f].push_back(t);
    }
  }

  k.compute_flags();
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
  static const std::vector<Simplex> empty;
  if (p < 0 || p > dim()) return empty;
  return by_dim_[p];
}

std::optional<Index> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.dim() < 0 || s.dim() > dim()) return std::nullopt;
  const auto& index = index_by_dim_[s.dim()];
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

const std::vector<Index>& SimplicialComplex::covering_tops(
    const Simplex& s) const {
  static const std::vector<Index> empty;
  auto it = covering_.find(s);
  return it == covering_.end() ? empty : it->second;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int p = 0; p <= dim(); ++p) {
    long long n = static_cast<long long>(count(p));
    chi += (p % 2 == 0) ? n : -n;
  }
  return chi;
}

namespace {

// Sign of f inside d(sigma) by position: (-1)^i where sigma drops vertex i.
int incidence_sign(const Simplex& top, const Simplex& facet) {
  for (int i = 0; i <= top.dim(); ++i) {
    if (top.facet(i) == facet) return (i % 2 == 0) ? 1 : -1;
  }
  throw StructuralError("simplex " + facet.to_string() + " is not a facet of " +
                        top.to_string());
}

}  // namespace

void SimplicialComplex::compute_flags() {
  is_closed_manifold_ = false;
  is_oriented_ = false;
  orientation_.clear();
  const int n = dim();
  if (n < 0) return;

  // Purity: every simplex lies in some top simplex.
  for (int p = 0; p < n; ++p) {
    for (const auto& s : by_dim_[p]) {
      if (covering_tops(s).empty()) return;
    }
  }
  if (n == 0) {
    // Discrete set: closed 0-manifold, canonically oriented by +1.
    is_closed_manifold_ = true;
    is_oriented_ = true;
    orientation_.assign(by_dim_[0].size(), 1);
    return;
  }

  // Closedness: every (n-1)-simplex borders exactly two top simplices.
  for (const auto& f : by_dim_[n - 1]) {
    if (covering_tops(f).size() != 2) return;
  }
  is_closed_manifold_ = true;

  // Orientation by sign propagation across shared facets. A conflict means
  // the manifold is non-orientable.
  const auto& tops = by_dim_[n];
  std::vector<int> sign(tops.size(), 0);
  for (Index seed = 0; seed < tops.size(); ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::vector<Index> stack{seed};
    while (!stack.empty()) {
      Index t = stack.back();
      stack.pop_back();
      for (int i = 0; i <= n; ++i) {
        Simplex f = tops[t].facet(i);
        for (Index u : covering_tops(f)) {
          if (u == t) continue;
          int needed = -sign[t] * incidence_sign(tops[t], f) *
                       incidence_sign(tops[u], f);
          if (sign[u] == 0) {
            sign[u] = needed;
            stack.push_back(u);
          } else if (sign[u] != needed) {
            return;  // non-orientable
          }
        }
      }
    }
  }
  is_oriented_ = true;
  orientation_ = std::move(sign);
}

Chain boundary(const SimplicialComplex& k, const Simplex& s) {
  if (!k.contains(s)) {
    throw StructuralError("simplex " + s.to_string() +
                          " does not belong to the complex");
  }
  Chain out(s.dim() - 1);
  if (s.dim() == 0) return out;
  for (int i = 0; i <= s.dim(); ++i) {
    out.add(s.facet(i), (i % 2 == 0) ? Rational(1) : Rational(-1));
  }
  return out;
}

Chain boundary(const SimplicialComplex& k, const Chain& c) {
  Chain out(c.dim() - 1);
  for (const auto& [s, coeff] : c.coefficients()) {
    Chain part = boundary(k, s);
    part *= coeff;
    out += part;
  }
  return out;
}

RationalMatrix boundary_matrix(const SimplicialComplex& k, int p) {
  if (p < 0 || p > k.dim()) {
    throw DimensionError("boundary matrix dimension " + std::to_string(p) +
                         " outside [0, " + std::to_string(k.dim()) + "]");
  }
  const Index rows = (p == 0) ? 0 : k.count(p - 1);
  RationalMatrix m(rows, k.count(p));
  if (p == 0) return m;
  const auto& columns = k.simplices(p);
  for (Index j = 0; j < columns.size(); ++j) {
    const Chain faces = boundary(k, columns[j]);
    for (const auto& [f, coeff] : faces.coefficients()) {
      m.set(*k.index_of(f), j, coeff);
    }
  }
  return m;
}

Chain fundamental_cycle(const SimplicialComplex& k) {
  if (!k.is_oriented()) {
    throw OrientationError(
        "fundamental cycle requires a closed oriented manifold");
  }
  const int n = k.dim();
  Chain out(n);
  const auto& tops = k.simplices(n);
  for (Index t = 0; t < tops.size(); ++t) {
    out.add(tops[t], Rational(k.orientation()[t]));
  }
  return out;
}

RationalVector chain_coordinates(const SimplicialComplex& k, const Chain& c) {
  RationalVector coords(k.count(c.dim()), Rational(0));
  for (const auto& [s, coeff] : c.coefficients()) {
    auto idx = k.index_of(s);
    if (!idx) {
      throw StructuralError("simplex " + s.to_string() +
                            " does not belong to the complex");
    }
    coords[*idx] = coeff;
  }
  return coords;
}

Chain chain_from_coordinates(const SimplicialComplex& k, int p,
                             const RationalVector& coords) {
  if (coords.size() != k.count(p)) {
    throw DimensionError("coordinate vector length does not match simplex count");
  }
  Chain out(p);
  const auto& basis = k.simplices(p);
  for (Index i = 0; i < coords.size(); ++i) out.add(basis[i], coords[i]);
  return out;
}

}  // namespace derham
