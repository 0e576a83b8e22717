// Cochain calculus and rational (co)homology bases.

#include "derham/cohomology.hpp"

#include <string>

#include "derham/errors.hpp"

namespace derham {

Cochain Cochain::zero(const SimplicialComplex& k, int dim) {
  return Cochain(dim, RationalVector(k.count(dim), Rational(0)));
}

Rational Cochain::operator()(const SimplicialComplex& k,
                             const Simplex& s) const {
  if (s.dim() != dim_) {
    throw DimensionError("cochain of dim " + std::to_string(dim_) +
                         " evaluated on " + s.to_string());
  }
  auto idx = k.index_of(s);
  if (!idx) {
    throw StructuralError("simplex " + s.to_string() +
                          " does not belong to the complex");
  }
  return values_[*idx];
}

bool Cochain::is_zero() const {
  for (const auto& v : values_) {
    if (v != 0) return false;
  }
  return true;
}

namespace {

void check_same_shape(const Cochain& a, const Cochain& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) {
    throw DimensionError("cochain shape mismatch");
  }
}

}  // namespace

Cochain& Cochain::operator+=(const Cochain& other) {
  check_same_shape(*this, other);
  for (Index i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  check_same_shape(*this, other);
  for (Index i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Cochain& Cochain::operator*=(const Rational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

Cochain coboundary(const SimplicialComplex& k, const Cochain& f) {
  const int p = f.dim();
  if (f.size() != k.count(p)) {
    throw DimensionError("cochain length does not match the complex");
  }
  Cochain out = Cochain::zero(k, p + 1);
  const auto& targets = k.simplices(p + 1);
  for (Index j = 0; j < targets.size(); ++j) {
    Rational value(0);
    const Chain faces = boundary(k, targets[j]);
    for (const auto& [face, sign] : faces.coefficients()) {
      value += sign * f.values()[*k.index_of(face)];
    }
    out[j] = value;
  }
  return out;
}

RationalMatrix coboundary_matrix(const SimplicialComplex& k, int p) {
  if (p < 0 || p > k.dim()) {
    throw DimensionError("coboundary matrix dimension " + std::to_string(p) +
                         " outside [0, " + std::to_string(k.dim()) + "]");
  }
  if (p == k.dim()) return RationalMatrix(0, k.count(p));
  return boundary_matrix(k, p + 1).transposed();
}

Rational pair(const SimplicialComplex& k, const Cochain& f, const Chain& c) {
  if (f.dim() != c.dim()) {
    throw DimensionError("pairing a " + std::to_string(f.dim()) +
                         "-cochain with a " + std::to_string(c.dim()) +
                         "-chain");
  }
  Rational out(0);
  for (const auto& [s, coeff] : c.coefficients()) {
    auto idx = k.index_of(s);
    if (!idx) {
      throw StructuralError("simplex " + s.to_string() +
                            " does not belong to the complex");
    }
    out += f.values()[*idx] * coeff;
  }
  return out;
}

Cochain cup(const SimplicialComplex& k, const Cochain& f, const Cochain& g) {
  const int p = f.dim();
  const int q = g.dim();
  if (p < 0 || q < 0) return Cochain::zero(k, p + q);
  Cochain out = Cochain::zero(k, p + q);
  const auto& targets = k.simplices(p + q);
  for (Index j = 0; j < targets.size(); ++j) {
    const Simplex& s = targets[j];
    Rational fv = f(k, s.front_face(p));
    if (fv == 0) continue;
    out[j] = fv * g(k, s.back_face(q));
  }
  return out;
}

Cochain cup_unit(const SimplicialComplex& k) {
  return Cochain(0, RationalVector(k.count(0), Rational(1)));
}

HomologyBasis homology_basis(const SimplicialComplex& k, int p) {
  HomologyBasis out;
  out.dim = p;
  const Index dim_cp = k.count(p);
  if (p < 0 || p > k.dim()) {
    out.cycles = SubspaceBasis{dim_cp, {}};
    out.boundaries = SubspaceBasis{dim_cp, {}};
    return out;
  }
  out.cycles = nullspace(boundary_matrix(k, p));
  if (p == k.dim()) {
    out.boundaries = SubspaceBasis{dim_cp, {}};
  } else {
    out.boundaries = column_space(boundary_matrix(k, p + 1));
  }
  out.representatives = quotient_basis(out.cycles, out.boundaries).vectors;
  return out;
}

CohomologyBasis cohomology_basis(const SimplicialComplex& k, int p) {
  CohomologyBasis out;
  out.dim = p;
  const Index dim_cp = k.count(p);
  if (p < 0 || p > k.dim()) {
    out.cocycles = SubspaceBasis{dim_cp, {}};
    out.coboundaries = SubspaceBasis{dim_cp, {}};
    return out;
  }
  out.cocycles = nullspace(coboundary_matrix(k, p));
  if (p == 0) {
    out.coboundaries = SubspaceBasis{dim_cp, {}};
  } else {
    out.coboundaries = column_space(coboundary_matrix(k, p - 1));
  }
  out.representatives = quotient_basis(out.cocycles, out.coboundaries).vectors;
  return out;
}

std::vector<Index> betti_numbers(const SimplicialComplex& k) {
  std::vector<Index> out;
  for (int p = 0; p <= k.dim(); ++p) {
    out.push_back(homology_basis(k, p).betti());
  }
  return out;
}

std::vector<Index> betti_numbers_by_rank(const SimplicialComplex& k) {
  std::vector<Index> out;
  for (int p = 0; p <= k.dim(); ++p) {
    Index rank_p = rank(boundary_matrix(k, p));
    Index rank_next = (p == k.dim()) ? 0 : rank(boundary_matrix(k, p + 1));
    out.push_back(k.count(p) - rank_p - rank_next);
  }
  return out;
}

Cochain functional_to_cocycle(const SimplicialComplex& k,
                              const HomologyBasis& homology,
                              const RationalVector& phi) {
  const int p = homology.dim;
  if (phi.size() != homology.betti()) {
    throw DimensionError("period vector length " + std::to_string(phi.size()) +
                         " does not match betti number " +
                         std::to_string(homology.betti()));
  }
  // Rows of delta_p force cocycle-ness; the representative rows pin the
  // values of the induced functional on homology.
  RationalMatrix delta = coboundary_matrix(k, p);
  std::vector<RationalVector> rows;
  RationalVector rhs;
  for (Index i = 0; i < delta.rows(); ++i) {
    rows.push_back(delta.row(i));
    rhs.push_back(Rational(0));
  }
  for (Index i = 0; i < homology.representatives.size(); ++i) {
    rows.push_back(homology.representatives[i]);
    rhs.push_back(phi[i]);
  }
  auto solution = solve(RationalMatrix::from_rows(rows, k.count(p)), rhs);
  if (!solution) {
    throw StructuralError(
        "no cocycle realizes the requested homology functional");
  }
  return Cochain(p, *solution);
}

}  // namespace derham
