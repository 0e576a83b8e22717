// Seeded generators for test objects.

#include "derham/sampling.hpp"

#include <algorithm>

#include "derham/errors.hpp"

namespace derham {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DimensionError("empty range in random draw");
  return next() % bound;
}

int Rng::in_range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational Rng::small_rational() {
  return Rational(in_range(-9, 9)) / Rational(in_range(1, 9));
}

Rational Rng::small_nonzero_rational() {
  int numerator = in_range(1, 9);
  if (below(2) == 1) numerator = -numerator;
  return Rational(numerator) / Rational(in_range(1, 9));
}

Cochain random_cochain(const SimplicialComplex& k, int p, Rng& rng) {
  Cochain out = Cochain::zero(k, p);
  for (Index i = 0; i < out.size(); ++i) out[i] = rng.small_rational();
  return out;
}

Chain random_chain(const SimplicialComplex& k, int p, Rng& rng) {
  Chain out(p);
  const auto& basis = k.simplices(p);
  if (basis.empty()) return out;
  const int picks = rng.in_range(1, 4);
  for (int i = 0; i < picks; ++i) {
    out.add(basis[rng.below(basis.size())], rng.small_rational());
  }
  return out;
}

RationalVector random_periods(Index length, Rng& rng) {
  RationalVector out;
  out.reserve(length);
  for (Index i = 0; i < length; ++i) out.push_back(rng.small_rational());
  return out;
}

PolyForm random_polyform(const SimplicialComplex& k, int p, Rng& rng) {
  const int n = k.dim();
  PolyForm out(k, p);
  if (p < 0 || p > n) return out;
  const int summands = rng.in_range(1, 3);
  for (int s = 0; s < summands; ++s) {
    // A wedge of Whitney lifts whose degrees sum to p...
    PolyForm factor = PolyForm::constant(k, rng.small_nonzero_rational());
    int remaining = p;
    while (remaining > 0) {
      int part = rng.in_range(1, std::min(remaining, n));
      factor = wedge(factor, whitney(k, random_cochain(k, part, rng)));
      remaining -= part;
    }
    // ...scaled by up to two polynomial (Whitney 0-form) factors.
    const int scalars = rng.in_range(0, 2);
    for (int m = 0; m < scalars; ++m) {
      factor = wedge(factor, whitney(k, random_cochain(k, 0, rng)));
    }
    out += factor;
  }
  return out;
}

Cochain random_closed_cochain(const SimplicialComplex& k,
                              const CohomologyBasis& basis, Rng& rng) {
  const int p = basis.dim;
  Cochain out = Cochain::zero(k, p);
  for (const auto& representative : basis.representatives) {
    Cochain piece(p, representative);
    piece *= rng.small_rational();
    out += piece;
  }
  if (p > 0) {
    out += coboundary(k, random_cochain(k, p - 1, rng));
  }
  return out;
}

}  // namespace derham
