// Periods of closed forms, primitives, period realization, and the ring
// comparison between the wedge product and the simplicial cup product.

#ifndef DERHAM_DERHAM_HPP
#define DERHAM_DERHAM_HPP

#include <optional>
#include <vector>

#include "derham/cohomology.hpp"
#include "derham/complex.hpp"
#include "derham/errors.hpp"
#include "derham/forms.hpp"

namespace derham {

/// Raised when an operation needs a closed form; carries the offending
/// exterior derivative for diagnostics.
class NotClosedError : public Error {
 public:
  NotClosedError(std::string message, PolyForm differential)
      : Error(std::move(message)), differential_(std::move(differential)) {}

  const PolyForm& differential() const { return differential_; }

 private:
  PolyForm differential_;
};

/// Raised when a closed form lies outside the Whitney-lift subspace, where
/// primitives are searched for.
class UnsupportedFormSpaceError : public Error {
 public:
  using Error::Error;
};

/// Periods of a closed p-form against a homology basis. The basis rides
/// along so the numbers stay interpretable.
struct PeriodReport {
  int dim = 0;
  HomologyBasis homology;
  RationalVector periods;
};

/// Whitney lifts of the cohomology representatives: closed forms whose
/// period matrix against the homology basis is invertible.
struct DeRhamBasis {
  int dim = 0;
  std::vector<PolyForm> closed_forms;

  Index betti() const { return closed_forms.size(); }
};

/// Outcome of the ring comparison for a closed pair (alpha, beta).
struct RingCheckVerdict {
  /// Phi(alpha ^ beta) and Phi(alpha) cup Phi(beta) are cohomologous; over
  /// the rationals this always holds for closed inputs.
  bool cohomologous = false;

  /// x with delta x = Phi(alpha ^ beta) - Phi(alpha) cup Phi(beta), the
  /// witness behind `cohomologous`.
  std::optional<Cochain> correction;

  /// Top pairings against the fundamental cycle; only computed when the
  /// complex is a closed oriented manifold and degrees sum to n.
  bool top_pairing_checked = false;
  Rational wedge_pairing;
  Rational cup_pairing;
  bool pairings_equal = false;
};

/// Checks d(w) = 0 and evaluates the period vector against the (canonical)
/// homology basis in the form's degree. Throws NotClosedError.
PeriodReport periods(const SimplicialComplex& k, const PolyForm& w);

/// Theorem I, decided in the Whitney complex: for closed w = W(x), returns
/// beta with d(beta) = w when every period vanishes, nothing when some
/// period is nonzero. Closed forms outside the Whitney subspace raise
/// UnsupportedFormSpaceError; non-closed forms raise NotClosedError.
std::optional<PolyForm> find_primitive(const SimplicialComplex& k,
                                       const PolyForm& w);

/// Theorem II: a closed p-form whose periods against the canonical homology
/// basis are exactly phi. Throws DimensionError unless |phi| = betti_p.
PolyForm realize_periods(const SimplicialComplex& k, int p,
                         const RationalVector& phi);

/// Whitney lifts of the canonical cohomology representatives.
DeRhamBasis derham_basis(const SimplicialComplex& k, int p);

/// The betti_p x betti_p matrix of periods of a closed-form basis against
/// the homology basis; invertibility realizes R^p = H^p.
RationalMatrix period_matrix(const SimplicialComplex& k,
                             const DeRhamBasis& forms,
                             const HomologyBasis& homology);

/// Theorem III: compares wedge and cup through the de Rham map. Both inputs
/// must be closed.
RingCheckVerdict ring_check(const SimplicialComplex& k, const PolyForm& alpha,
                            const PolyForm& beta);

}  // namespace derham

#endif
