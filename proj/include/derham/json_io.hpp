// JSON encoding of rationals, chains, cochains, bases and forms, plus the
// matching strict decoders. Rationals travel as "num/den" strings (the
// "/den" part omitted when the denominator is 1); object keys are emitted
// in sorted order so equal values serialize to identical bytes.

#ifndef DERHAM_JSON_IO_HPP
#define DERHAM_JSON_IO_HPP

#include <json.hpp>

#include "derham/cohomology.hpp"
#include "derham/complex.hpp"
#include "derham/forms.hpp"
#include "derham/linalg.hpp"

namespace derham {

using Json = nlohmann::json;

Json rational_to_json(const Rational& value);

/// Accepts "num/den" strings and plain JSON integers. Throws ParseError.
Rational rational_from_json(const Json& value);

Json rational_vector_to_json(const RationalVector& values);
RationalVector rational_vector_from_json(const Json& value);

/// Dense row-major rendering (small matrices only).
Json matrix_to_json(const RationalMatrix& m);

/// Sparse simplex -> coefficient list, sorted by simplex.
Json chain_to_json(const Chain& c);

Json cochain_to_json(const Cochain& f);

/// Homology representatives rendered as chains.
Json homology_to_json(const SimplicialComplex& k, const HomologyBasis& basis);

Json polyform_to_json(const PolyForm& w);

/// Rebuilds a form against the complex it claims to live on; validation and
/// the continuity check run through make_form. Throws ParseError on shape
/// problems and StructuralError on semantic ones.
PolyForm polyform_from_json(const SimplicialComplex& k, const Json& doc);

/// Simplex counts per dimension plus the manifold/orientation flags.
Json complex_summary(const SimplicialComplex& k);

}  // namespace derham

#endif
