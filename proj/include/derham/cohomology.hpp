// Simplicial cochains, the coboundary, cup products, and exact
// homology/cohomology bases over the rationals.

#ifndef DERHAM_COHOMOLOGY_HPP
#define DERHAM_COHOMOLOGY_HPP

#include <vector>

#include "derham/complex.hpp"
#include "derham/linalg.hpp"
#include "derham/rational.hpp"

namespace derham {

/// A rational p-cochain, stored densely in the complex's sorted p-simplex
/// order. Degrees outside [0, n] are allowed and carry no values.
class Cochain {
 public:
  Cochain(int dim, RationalVector values)
      : dim_(dim), values_(std::move(values)) {}

  /// The zero cochain of the right length for the complex.
  static Cochain zero(const SimplicialComplex& k, int dim);

  int dim() const { return dim_; }
  const RationalVector& values() const { return values_; }
  Index size() const { return values_.size(); }

  const Rational& operator[](Index i) const { return values_[i]; }
  Rational& operator[](Index i) { return values_[i]; }

  /// Value on a simplex of the complex; throws StructuralError if absent.
  Rational operator()(const SimplicialComplex& k, const Simplex& s) const;

  bool is_zero() const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Rational& scalar);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }

  bool operator==(const Cochain&) const = default;

 private:
  int dim_;
  RationalVector values_;
};

/// (delta f)(sigma) = f(boundary sigma). Input degree n maps to the empty
/// (n+1)-cochain.
Cochain coboundary(const SimplicialComplex& k, const Cochain& f);

/// Matrix of delta: C^p -> C^{p+1}; the transpose of boundary_matrix(p+1),
/// with zero rows at p = n. Throws DimensionError outside [0, n].
RationalMatrix coboundary_matrix(const SimplicialComplex& k, int p);

/// Kronecker pairing <f, c> = sum over simplices of f(sigma) c(sigma).
Rational pair(const SimplicialComplex& k, const Cochain& f, const Chain& c);

/// Alexander-Whitney cup product: (f cup g)([v0..v_{p+q}]) =
/// f([v0..vp]) * g([vp..v_{p+q}]). Degrees beyond n give empty cochains.
Cochain cup(const SimplicialComplex& k, const Cochain& f, const Cochain& g);

/// The unit for cup: the constant-1 vertex cochain.
Cochain cup_unit(const SimplicialComplex& k);

/// Basis data for H_p = Z_p / B_p in chain coordinates. The representative
/// cycles project to a basis of the quotient.
struct HomologyBasis {
  int dim = 0;
  SubspaceBasis cycles;
  SubspaceBasis boundaries;
  std::vector<RationalVector> representatives;

  Index betti() const { return representatives.size(); }
};

/// Basis data for H^p = Z^p / B^p in cochain coordinates.
struct CohomologyBasis {
  int dim = 0;
  SubspaceBasis cocycles;
  SubspaceBasis coboundaries;
  std::vector<RationalVector> representatives;

  Index betti() const { return representatives.size(); }
};

HomologyBasis homology_basis(const SimplicialComplex& k, int p);
CohomologyBasis cohomology_basis(const SimplicialComplex& k, int p);

/// b_p for p = 0..n via the quotient construction.
std::vector<Index> betti_numbers(const SimplicialComplex& k);

/// b_p via rank-nullity: count(p) - rank d_p - rank d_{p+1}.
std::vector<Index> betti_numbers_by_rank(const SimplicialComplex& k);

/// The unique-up-to-coboundary cocycle x with <x, z_i> = phi_i on the given
/// homology representatives: solves the stacked system [delta_p; Z] x =
/// [0; phi]. Throws DimensionError if phi's length is not betti(p).
Cochain functional_to_cocycle(const SimplicialComplex& k,
                              const HomologyBasis& homology,
                              const RationalVector& phi);

}  // namespace derham

#endif
