// Constructive periods, primitives, period realization and the wedge/cup
// ring comparison.

#include "derham/derham.hpp"

#include <string>
#include <utility>

namespace derham {

namespace {

void require_closed(const PolyForm& w, const std::string& label) {
  PolyForm dw = exterior_derivative(w);
  if (!dw.is_zero()) {
    throw NotClosedError(label + " is not closed", std::move(dw));
  }
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational out(0);
  for (Index i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

/// Matrix of delta: C^{p-1} -> C^p, totalized at the chain-complex ends.
RationalMatrix delta_into(const SimplicialComplex& k, int p) {
  if (p == 0) return RationalMatrix(k.count(0), 0);
  return coboundary_matrix(k, p - 1);
}

}  // namespace

PeriodReport periods(const SimplicialComplex& k, const PolyForm& w) {
  require_closed(w, "form");
  PeriodReport report;
  report.dim = w.degree();
  report.homology = homology_basis(k, w.degree());
  for (const auto& representative : report.homology.representatives) {
    Chain cycle = chain_from_coordinates(k, w.degree(), representative);
    report.periods.push_back(integrate(w, cycle));
  }
  return report;
}

std::optional<PolyForm> find_primitive(const SimplicialComplex& k,
                                       const PolyForm& w) {
  require_closed(w, "form");
  const int p = w.degree();
  if (p < 0) return PolyForm(k, -1);

  Cochain x = derham_map(k, w);
  if (!(whitney(k, x) == w)) {
    throw UnsupportedFormSpaceError(
        "closed form lies outside the Whitney subspace");
  }

  // Periods of W(x) against homology cycles are plain pairings with x.
  HomologyBasis homology = homology_basis(k, p);
  for (const auto& representative : homology.representatives) {
    if (dot(x.values(), representative) != 0) return std::nullopt;
  }

  // All periods vanish, so the cocycle x is a coboundary: solve delta y = x.
  auto y = solve(delta_into(k, p), x.values());
  if (!y) {
    throw StructuralError(
        "vanishing periods yielded no primitive; complex data is inconsistent");
  }
  return whitney(k, Cochain(p - 1, std::move(*y)));
}

PolyForm realize_periods(const SimplicialComplex& k, int p,
                         const RationalVector& phi) {
  if (p < 0 || p > k.dim()) {
    if (!phi.empty()) {
      throw DimensionError("no homology in dimension " + std::to_string(p) +
                           " to realize periods against");
    }
    return PolyForm(k, p < 0 ? -1 : k.dim() + 1);
  }
  HomologyBasis homology = homology_basis(k, p);
  return whitney(k, functional_to_cocycle(k, homology, phi));
}

DeRhamBasis derham_basis(const SimplicialComplex& k, int p) {
  DeRhamBasis out;
  out.dim = p;
  const CohomologyBasis basis = cohomology_basis(k, p);
  for (const auto& representative : basis.representatives) {
    out.closed_forms.push_back(whitney(k, Cochain(p, representative)));
  }
  return out;
}

RationalMatrix period_matrix(const SimplicialComplex& k,
                             const DeRhamBasis& forms,
                             const HomologyBasis& homology) {
  if (forms.dim != homology.dim) {
    throw DimensionError("form basis and homology basis dimensions differ");
  }
  const Index b = homology.representatives.size();
  if (forms.betti() != b) {
    throw DimensionError("form basis and homology basis sizes differ");
  }
  RationalMatrix m(b, b);
  for (Index i = 0; i < b; ++i) {
    Chain cycle =
        chain_from_coordinates(k, homology.dim, homology.representatives[i]);
    for (Index j = 0; j < b; ++j) {
      m.set(i, j, integrate(forms.closed_forms[j], cycle));
    }
  }
  return m;
}

RingCheckVerdict ring_check(const SimplicialComplex& k, const PolyForm& alpha,
                            const PolyForm& beta) {
  require_closed(alpha, "alpha");
  require_closed(beta, "beta");
  const int p = alpha.degree();
  const int q = beta.degree();

  PolyForm product = wedge(alpha, beta);
  Cochain cup_image = cup(k, derham_map(k, alpha), derham_map(k, beta));
  // Beyond the top dimension both images are empty and agree vacuously.
  Cochain difference = (p + q > k.dim())
                           ? Cochain::zero(k, p + q)
                           : derham_map(k, product) - cup_image;

  RingCheckVerdict verdict;
  if (difference.is_zero()) {
    verdict.cohomologous = true;
    verdict.correction = Cochain::zero(k, p + q - 1);
  } else {
    auto x = solve(delta_into(k, p + q), difference.values());
    verdict.cohomologous = x.has_value();
    if (x) verdict.correction = Cochain(p + q - 1, std::move(*x));
  }

  if (k.is_closed_manifold() && k.is_oriented() && p + q == k.dim()) {
    Chain fundamental = fundamental_cycle(k);
    verdict.top_pairing_checked = true;
    verdict.wedge_pairing = integrate(product, fundamental);
    verdict.cup_pairing = pair(k, cup_image, fundamental);
    verdict.pairings_equal = verdict.wedge_pairing == verdict.cup_pairing;
  }
  return verdict;
}

}  // namespace derham
