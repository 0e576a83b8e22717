// Exact linear algebra over the rationals: sparse matrices, reduced row
// echelon form, rank, nullspace, linear solves and quotient-space bases.
//
// Everything here is deterministic. Elimination uses a fixed pivot rule
// (largest |numerator|*denominator in the current column, ties broken by
// lowest row index), and the reduced echelon form it produces is the unique
// RREF of the matrix, so ranks, nullspace bases and particular solutions are
// reproducible across runs and platforms.

#ifndef DERHAM_LINALG_HPP
#define DERHAM_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "derham/rational.hpp"

namespace derham {

using Index = std::size_t;

/// Sparse rational matrix stored as sorted (row, col) -> value coordinates.
/// Absent entries are zero; stored entries are never zero.
class RationalMatrix {
 public:
  using EntryMap = std::map<std::pair<Index, Index>, Rational>;

  RationalMatrix() = default;
  RationalMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  const Rational& at(Index row, Index col) const;

  /// Stores value at (row, col); a zero value erases the entry.
  void set(Index row, Index col, Rational value);

  const EntryMap& entries() const { return entries_; }
  Index nonzero_count() const { return entries_.size(); }

  RationalMatrix transposed() const;

  /// Matrix-vector product A*x; x must have length cols().
  RationalVector apply(const RationalVector& x) const;

  /// Dense row extraction (length cols()).
  RationalVector row(Index r) const;

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                  Index cols);

  bool operator==(const RationalMatrix& other) const = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  EntryMap entries_;
};

/// A list of independent vectors spanning a subspace of Q^ambient_dim.
struct SubspaceBasis {
  Index ambient_dim = 0;
  std::vector<RationalVector> vectors;

  Index count() const { return vectors.size(); }
};

/// Reduced row echelon form: nonzero rows with unit pivots, pivot columns in
/// strictly increasing order, zeros above and below each pivot.
struct RowEchelon {
  std::vector<RationalVector> rows;
  std::vector<Index> pivot_cols;

  Index rank() const { return pivot_cols.size(); }
};

/// RREF of a dense row list (rows may be ragged-free: all length `cols`).
RowEchelon reduced_echelon(std::vector<RationalVector> rows, Index cols);

RowEchelon reduced_echelon(const RationalMatrix& a);

Index rank(const RationalMatrix& a);

/// Rank of the span of a vector list in Q^ambient.
Index rank_of(const std::vector<RationalVector>& vectors, Index ambient);

/// Basis of {x : Ax = 0} via the standard free-column construction on the
/// RREF; count = cols - rank. The basis is canonical.
SubspaceBasis nullspace(const RationalMatrix& a);

/// Basis of the column space: the pivot columns of A, in column order.
SubspaceBasis column_space(const RationalMatrix& a);

/// Some x with Ax = b, free variables set to zero; nothing when b is outside
/// the image. Never an approximation. Throws DimensionError when |b| != rows.
std::optional<RationalVector> solve(const RationalMatrix& a,
                                    const RationalVector& b);

/// Representatives of span(z)/span(b): the earliest vectors of z that stay
/// independent modulo b. Requires span(b) within span(z); violation throws
/// StructuralError.
SubspaceBasis quotient_basis(const SubspaceBasis& z, const SubspaceBasis& b);

}  // namespace derham

#endif
