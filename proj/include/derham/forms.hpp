// Piecewise polynomial differential forms in barycentric coordinates:
// canonical normal forms, exterior derivative, wedge product, Whitney lifts
// of cochains, and exact metric-free integration over chains.
//
// A PolyForm lives on a fixed complex and stores, per top-dimensional
// simplex, a canonical list of terms  c * prod(lambda_v^a_v) * dlambda_{f1}
// ^ ... ^ dlambda_{fk}. On a top simplex with vertices u0 < ... < un the
// normal form eliminates the minimal coordinate entirely, via the two
// relations dlambda_{u0} = -sum_{i>=1} dlambda_{ui} and lambda_{u0} =
// 1 - sum_{i>=1} lambda_{ui}. What remains is a free representation in the
// independent coordinates lambda_{u1..un}, so equality of normal forms is
// equality of forms. Degrees -1 and n+1 are allowed and always denote the
// zero form.

#ifndef DERHAM_FORMS_HPP
#define DERHAM_FORMS_HPP

#include <map>
#include <vector>

#include "derham/cohomology.hpp"
#include "derham/complex.hpp"
#include "derham/rational.hpp"

namespace derham {

/// Exponents of the barycentric coordinate functions; absent means zero.
using Monomial = std::map<VertexId, int>;

/// One summand c * lambda^monomial * dlambda_{frame}. The frame is strictly
/// increasing; reordering signs live in the coefficient.
struct BarycentricTerm {
  Rational coefficient;
  Monomial monomial;
  std::vector<VertexId> frame;

  bool operator==(const BarycentricTerm&) const = default;
};

/// Canonical ordering of normalized terms: by frame, then monomial.
bool term_precedes(const BarycentricTerm& a, const BarycentricTerm& b);

/// A piecewise polynomial differential form, always stored in normal form.
/// Forms must stay attached to the complex they were built on; mixing
/// complexes in any binary operation is a structural error.
class PolyForm {
 public:
  /// The zero form of the given degree (any degree in [-1, n+1]).
  PolyForm(const SimplicialComplex& k, int degree);

  static PolyForm constant(const SimplicialComplex& k, const Rational& value);

  int degree() const { return degree_; }
  const SimplicialComplex& complex() const { return *complex_; }

  /// Canonical term list on the top simplex with the given index.
  const std::vector<BarycentricTerm>& terms(Index top_index) const;

  bool is_zero() const;

  PolyForm& operator+=(const PolyForm& other);
  PolyForm& operator-=(const PolyForm& other);
  PolyForm& operator*=(const Rational& scalar);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Rational& s, PolyForm a) { return a *= s; }

  /// Normal-form equality (same degree, same terms everywhere).
  bool operator==(const PolyForm& other) const;

 private:
  const SimplicialComplex* complex_;
  int degree_;
  std::vector<std::vector<BarycentricTerm>> terms_;

  friend PolyForm make_form(
      const SimplicialComplex& k, int degree,
      const std::map<Index, std::vector<BarycentricTerm>>& raw_terms);
  friend PolyForm exterior_derivative(const PolyForm& w);
  friend PolyForm wedge(const PolyForm& a, const PolyForm& b);
  friend PolyForm whitney(const SimplicialComplex& k, const Cochain& f);
};

/// Validates and normalizes raw per-top-simplex term lists into a PolyForm,
/// including the tangential-continuity check. Throws StructuralError on
/// foreign vertices, wrong frame sizes, or a discontinuous result;
/// DimensionError on a degree outside [-1, n+1].
PolyForm make_form(
    const SimplicialComplex& k, int degree,
    const std::map<Index, std::vector<BarycentricTerm>>& raw_terms);

/// Brings a raw term list over the carrier vertex list into normal form:
/// frames sorted (sign absorbed), repeated frame vertices dropped,
/// dlambda_{carrier.front()} and lambda_{carrier.front()} eliminated, zero
/// exponents removed, terms sorted and merged, zero terms dropped.
std::vector<BarycentricTerm> normalize_terms(
    std::vector<BarycentricTerm> terms,
    const std::vector<VertexId>& carrier_vertices);

/// Pullback of a normalized term list along the inclusion of a face: terms
/// touching vertices outside the face die, the rest are renormalized in the
/// face's own coordinates.
std::vector<BarycentricTerm> restrict_to_face(
    const std::vector<BarycentricTerm>& terms,
    const std::vector<VertexId>& face_vertices);

/// Whether all pullbacks to shared interior faces agree. True by
/// construction for everything this module produces; external input is
/// checked through make_form.
bool tangentially_continuous(const PolyForm& w);

/// d, computed termwise and renormalized; degree n and above map to zero.
PolyForm exterior_derivative(const PolyForm& w);

/// Exterior product; degrees add, and anything beyond the top dimension is
/// the zero form.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// The Whitney lift W(f) = sum_sigma f(sigma) W_sigma with
/// W_sigma = p! sum_j (-1)^j lambda_{v_j} dlambda_{v_0} ^ ...omit j... ^
/// dlambda_{v_p}, extended by zero. Satisfies the reproducing identity
/// Phi(W(f)) = f and the chain-map identity W(delta f) = d(W(f)).
PolyForm whitney(const SimplicialComplex& k, const Cochain& f);

/// Exact integral of a degree-k form over a k-chain, by restriction to each
/// face and the Dirichlet formula
///   int_{Delta^k} lambda^a dlambda_{w1}^...^dlambda_{wk}
///     = (prod_v a_v!) / (k + sum_v a_v)!.
/// Throws DimensionError on degree mismatch, StructuralError when a chain
/// simplex is not part of the complex.
Rational integrate(const PolyForm& w, const Chain& c);

/// Integral over a single simplex of the complex.
Rational integrate(const PolyForm& w, const Simplex& s);

/// The de Rham map Phi: integrate over every p-simplex, yielding a cochain.
Cochain derham_map(const SimplicialComplex& k, const PolyForm& w);

}  // namespace derham

#endif
