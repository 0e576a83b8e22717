// Simplicial complexes, oriented chains and the boundary operator.
//
// Simplices are normalized by the global vertex order: vertex lists are
// strictly increasing and orientation reversal lives in chain coefficients,
// never in permuted vertex lists. Complexes are immutable after construction
// and safe to share across threads.

#ifndef DERHAM_COMPLEX_HPP
#define DERHAM_COMPLEX_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derham/linalg.hpp"
#include "derham/rational.hpp"

namespace derham {

using VertexId = int;

/// An oriented simplex: a strictly increasing vertex list. dim() = count - 1.
class Simplex {
 public:
  Simplex() = default;

  /// Throws StructuralError unless the vertex list is strictly increasing.
  explicit Simplex(std::vector<VertexId> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  /// The facet with the i-th vertex removed.
  Simplex facet(int i) const;

  /// Front face [v0..vp] / back face [v_{k-p}..v_k] (cup product faces).
  Simplex front_face(int p) const;
  Simplex back_face(int p) const;

  bool contains(const Simplex& other) const;

  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

/// A formal rational combination of same-dimensional simplices. Zero
/// coefficients are never stored. dim may be -1 only for the (empty)
/// boundary of a 0-chain.
class Chain {
 public:
  explicit Chain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<Simplex, Rational>& coefficients() const { return coeffs_; }

  void add(const Simplex& simplex, const Rational& coefficient);
  Rational coefficient(const Simplex& simplex) const;
  bool is_zero() const { return coeffs_.empty(); }

  Chain& operator+=(const Chain& other);
  Chain& operator*=(const Rational& scalar);
  bool operator==(const Chain&) const = default;

 private:
  int dim_;
  std::map<Simplex, Rational> coeffs_;
};

/// A finite simplicial complex, closed under faces, with manifold /
/// orientability flags computed at construction.
class SimplicialComplex {
 public:
  /// Builds the face closure of a maximal-simplex list and validates it.
  /// Vertex ids must lie in [0, vertex_count); exact duplicates in the input
  /// are an error naming the duplicate.
  static SimplicialComplex from_maximal(
      int vertex_count, const std::vector<std::vector<VertexId>>& maximal);

  int vertex_count() const { return vertex_count_; }

  /// Top dimension n (-1 for the empty complex).
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// Sorted p-simplices; empty for p outside [0, n].
  const std::vector<Simplex>& simplices(int p) const;
  Index count(int p) const { return simplices(p).size(); }

  std::optional<Index> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  bool is_closed_manifold() const { return is_closed_manifold_; }
  bool is_oriented() const { return is_oriented_; }

  /// Per-top-simplex orientation signs (+1/-1); empty unless is_oriented().
  const std::vector<int>& orientation() const { return orientation_; }

  /// Indices of top simplices having s as a face, ascending. Empty when no
  /// top simplex covers s.
  const std::vector<Index>& covering_tops(const Simplex& s) const;

  long long euler_characteristic() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, Index>> index_by_dim_;
  std::map<Simplex, std::vector<Index>> covering_;
  bool is_closed_manifold_ = false;
  bool is_oriented_ = false;
  std::vector<int> orientation_;

  void compute_flags();
};

/// Boundary of a single simplex of the complex, by the alternating-face rule
/// d[v0..vp] = sum_i (-1)^i [v0..\hat v_i..vp].
Chain boundary(const SimplicialComplex& k, const Simplex& s);

/// Linear extension to chains. A 0-chain maps to the empty (-1)-chain.
Chain boundary(const SimplicialComplex& k, const Chain& c);

/// The matrix of the boundary operator C_p -> C_{p-1} in the stored simplex
/// bases; p = 0 yields a 0-row matrix. Throws DimensionError outside [0, n].
RationalMatrix boundary_matrix(const SimplicialComplex& k, int p);

/// The orientation-weighted sum of top simplices of a closed oriented
/// manifold; its boundary is zero. Throws OrientationError otherwise.
Chain fundamental_cycle(const SimplicialComplex& k);

/// Coordinates of a chain in the sorted p-simplex basis, and back.
RationalVector chain_coordinates(const SimplicialComplex& k, const Chain& c);
Chain chain_from_coordinates(const SimplicialComplex& k, int p,
                             const RationalVector& coords);

// --- canonical test-corpus complexes -------------------------------------

enum class CanonicalName {
  circle,            // k >= 3 vertices around S^1
  sphere2,           // tetrahedron boundary
  torus,             // 9-vertex 3x3 wraparound grid
  torus7,            // 7-vertex Moebius-Kantor triangulation
  projective_plane,  // 6-vertex hemi-icosahedron
  klein_bottle,      // 9-vertex twisted 3x3 grid
  interval,          // path with k edges
};

/// Builds one of the documented fixtures. `size` is the k parameter of
/// circle/interval and is ignored for the others.
SimplicialComplex canonical_complex(CanonicalName name, int size = 0);

std::optional<CanonicalName> canonical_name_from_string(std::string_view text);

// --- input / output -------------------------------------------------------

enum class ComplexFormat { text, json };

/// Reads a maximal-simplex listing. Text format: lines `simplex v0 v1 ...`,
/// `#` comments. JSON format: {"vertices": N, "maximal_simplices": [[..]]}.
/// Faces are closed automatically; flags are recomputed. Throws ParseError /
/// StructuralError with position information.
SimplicialComplex load_complex(std::istream& in, ComplexFormat format);

/// Renders the maximal simplices of k in the text format.
std::string to_text_format(const SimplicialComplex& k);

}  // namespace derham

#endif
