// Seeded random chains, cochains and piecewise polynomial forms for
// property testing and the CLI's trial commands.
//
// All draws come from raw mt19937_64 outputs reduced by modulus, never from
// std::uniform_*_distribution, so identical seeds give identical objects on
// every platform and standard library.

#ifndef DERHAM_SAMPLING_HPP
#define DERHAM_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "derham/cohomology.hpp"
#include "derham/complex.hpp"
#include "derham/forms.hpp"

namespace derham {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Inclusive integer range.
  int in_range(int lo, int hi);

  /// A rational with numerator in [-9, 9] and denominator in [1, 9].
  Rational small_rational();

  Rational small_nonzero_rational();

 private:
  std::mt19937_64 engine_;
};

/// A cochain with independent small rational values.
Cochain random_cochain(const SimplicialComplex& k, int p, Rng& rng);

/// A sparse chain touching a few p-simplices with small coefficients.
Chain random_chain(const SimplicialComplex& k, int p, Rng& rng);

/// A random rational period vector of the given length.
RationalVector random_periods(Index length, Rng& rng);

/// A tangentially continuous piecewise polynomial p-form: a short sum of
/// wedge products of Whitney lifts scaled by Whitney 0-form factors. This
/// ranges well outside the Whitney subspace while staying valid.
PolyForm random_polyform(const SimplicialComplex& k, int p, Rng& rng);

/// A closed cochain: a rational combination of the cohomology
/// representatives plus a coboundary.
Cochain random_closed_cochain(const SimplicialComplex& k,
                              const CohomologyBasis& basis, Rng& rng);

}  // namespace derham

#endif
