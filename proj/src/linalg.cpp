#include "derham/linalg.hpp"

#include <utility>

#include "derham/errors.hpp"

namespace derham {

namespace {
const Rational kZero{};
}

const Rational& RationalMatrix::at(Index row, Index col) const {
  if (row >= rows_ || col >= cols_)
    throw DimensionError("matrix entry out of bounds");
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? kZero : it->second;
}

void RationalMatrix::set(Index row, Index col, Rational value) {
  if (row >= rows_ || col >= cols_)
    throw DimensionError("matrix entry out of bounds");
  if (value == 0)
    entries_.erase({row, col});
  else
    entries_.insert_or_assign({row, col}, std::move(value));
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RationalVector y(rows_, Rational(0));
  for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
  return y;
}

RationalVector RationalMatrix::row(Index r) const {
  RationalVector out(cols_, Rational(0));
  for (auto it = entries_.lower_bound({r, 0});
       it != entries_.end() && it->first.first == r; ++it)
    out[it->first.second] = it->second;
  return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         Index cols) {
  RationalMatrix m(rows.size(), cols);
  for (Index r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged row list");
    for (Index c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.set(r, c, rows[r][c]);
  }
  return m;
}

RowEchelon reduced_echelon(std::vector<RationalVector> rows, Index cols) {
  RowEchelon result;
  Index next = 0;  // next pivot row
  for (Index col = 0; col < cols && next < rows.size(); ++col) {
    // Pivot rule: largest |num|*den in this column, ties by lowest index.
    Index pivot = rows.size();
    Integer best_key;
    for (Index r = next; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Integer key = magnitude_key(rows[r][col]);
      if (pivot == rows.size() || key > best_key) {
        pivot = r;
        best_key = std::move(key);
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    const Rational inv = Rational(1) / rows[next][col];
    for (Index c = col; c < cols; ++c) rows[next][c] *= inv;
    for (Index r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (Index c = col; c < cols; ++c)
        rows[r][c] -= factor * rows[next][c];
    }
    result.pivot_cols.push_back(col);
    ++next;
  }
  result.rows.assign(rows.begin(), rows.begin() + next);
  return result;
}

RowEchelon reduced_echelon(const RationalMatrix& a) {
  std::vector<RationalVector> rows;
  rows.reserve(a.rows());
  for (Index r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return reduced_echelon(std::move(rows), a.cols());
}

Index rank(const RationalMatrix& a) { return reduced_echelon(a).rank(); }

Index rank_of(const std::vector<RationalVector>& vectors, Index ambient) {
  return reduced_echelon(vectors, ambient).rank();
}

SubspaceBasis nullspace(const RationalMatrix& a) {
  const RowEchelon ech = reduced_echelon(a);
  SubspaceBasis basis;
  basis.ambient_dim = a.cols();

  std::vector<bool> is_pivot(a.cols(), false);
  for (Index c : ech.pivot_cols) is_pivot[c] = true;

  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (Index i = 0; i < ech.pivot_cols.size(); ++i)
      v[ech.pivot_cols[i]] = -ech.rows[i][free];
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

SubspaceBasis column_space(const RationalMatrix& a) {
  const RowEchelon ech = reduced_echelon(a);
  SubspaceBasis basis;
  basis.ambient_dim = a.rows();
  for (Index c : ech.pivot_cols) {
    RationalVector v(a.rows(), Rational(0));
    for (Index r = 0; r < a.rows(); ++r) {
      const Rational& entry = a.at(r, c);
      if (entry != 0) v[r] = entry;
    }
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a,
                                    const RationalVector& b) {
  if (b.size() != a.rows())
    throw DimensionError("solve: right-hand side length != rows");
  std::vector<RationalVector> rows;
  rows.reserve(a.rows());
  for (Index r = 0; r < a.rows(); ++r) {
    RationalVector row = a.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  const Index cols = a.cols();
  const RowEchelon ech = reduced_echelon(std::move(rows), cols + 1);

  // A pivot in the augmented column means b is outside the image.
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == cols)
    return std::nullopt;

  RationalVector x(cols, Rational(0));
  for (Index i = 0; i < ech.pivot_cols.size(); ++i)
    x[ech.pivot_cols[i]] = ech.rows[i][cols];
  return x;
}

SubspaceBasis quotient_basis(const SubspaceBasis& z, const SubspaceBasis& b) {
  if (b.count() > 0 && b.ambient_dim != z.ambient_dim)
    throw DimensionError("quotient_basis: ambient dimension mismatch");

  std::vector<RationalVector> stacked = z.vectors;
  stacked.insert(stacked.end(), b.vectors.begin(), b.vectors.end());
  const Index z_rank = rank_of(z.vectors, z.ambient_dim);
  if (rank_of(stacked, z.ambient_dim) != z_rank)
    throw StructuralError(
        "quotient_basis: denominator subspace not contained in numerator "
        "(inconsistent complex data)");

  SubspaceBasis result;
  result.ambient_dim = z.ambient_dim;
  std::vector<RationalVector> kept = b.vectors;
  Index current = rank_of(kept, z.ambient_dim);
  for (const RationalVector& candidate : z.vectors) {
    kept.push_back(candidate);
    const Index grown = rank_of(kept, z.ambient_dim);
    if (grown > current) {
      result.vectors.push_back(candidate);
      current = grown;
    } else {
      kept.pop_back();
    }
  }
  return result;
}

}  // namespace derham
