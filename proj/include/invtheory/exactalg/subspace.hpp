#pragma once

#include <map>
#include <span>
#include <vector>

#include "invtheory/errors.hpp"
#include "invtheory/exactalg/dense_matrix.hpp"

namespace invtheory {

/// A subspace of k^n stored in canonical reduced row echelon form. Two bases
/// of the same subspace are entry-identical, so span equality is `==`.
template <class Field>
class SubspaceBasis {
 public:
  using value_type = typename Field::value_type;

  SubspaceBasis(Field field, std::size_t ambient_dim)
      : field_(field), ambient_dim_(ambient_dim), rows_(std::move(field), 0, ambient_dim) {}

  /// Takes rows already in reduced row echelon form with unit pivots.
  SubspaceBasis(DenseMatrix<Field> rref_rows, std::vector<std::size_t> pivots)
      : field_(rref_rows.field()),
        ambient_dim_(rref_rows.cols()),
        rows_(std::move(rref_rows)),
        pivots_(std::move(pivots)) {}

  const Field& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool is_zero() const noexcept { return pivots_.empty(); }
  bool is_full() const noexcept { return rank() == ambient_dim_; }
  const DenseMatrix<Field>& rows() const noexcept { return rows_; }
  std::span<const value_type> row(std::size_t r) const { return rows_.row(r); }
  const std::vector<std::size_t>& pivot_cols() const noexcept { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v is in the span.
  std::vector<value_type> residual(std::span<const value_type> v) const {
    if (v.size() != ambient_dim_) fail(ErrorKind::dimension_mismatch, "vector length vs ambient dimension");
    std::vector<value_type> out(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      value_type c = out[pivots_[r]];
      if (field_.is_zero(c)) continue;
      RowOps<Field>::axpy(field_, out, rows_.row(r), field_.neg(c));
    }
    return out;
  }

  bool contains(std::span<const value_type> v) const {
    auto res = residual(v);
    for (const auto& x : res) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  bool operator==(const SubspaceBasis& other) const {
    return ambient_dim_ == other.ambient_dim_ && pivots_ == other.pivots_ && rows_ == other.rows_;
  }

 private:
  Field field_;
  std::size_t ambient_dim_;
  DenseMatrix<Field> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical reduced row echelon basis of the row space of m.
template <class Field>
SubspaceBasis<Field> rref(DenseMatrix<Field> m) {
  const Field& field = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && field.is_zero(m(pivot_row, c))) ++pivot_row;
    if (pivot_row == rows) continue;
    m.swap_rows(rank, pivot_row);
    RowOps<Field>::scale(field, m.row(rank), field.inv(m(rank, c)));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || field.is_zero(m(r, c))) continue;
      RowOps<Field>::axpy(field, m.row(r), m.row(rank), field.neg(m(r, c)));
    }
    pivots.push_back(c);
    ++rank;
  }
  DenseMatrix<Field> basis(field, rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    auto src = m.row(r);
    std::copy(src.begin(), src.end(), basis.row(r).begin());
  }
  return SubspaceBasis<Field>(std::move(basis), std::move(pivots));
}

template <class Field>
std::size_t rank(const DenseMatrix<Field>& m) {
  return rref(m).rank();
}

/// Basis of {v : m v = 0} (column vectors), returned as rows.
template <class Field>
SubspaceBasis<Field> nullspace(const DenseMatrix<Field>& m) {
  const Field& field = m.field();
  auto reduced = rref(m);
  const auto& pivots = reduced.pivot_cols();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  DenseMatrix<Field> kernel(field, 0, m.cols());
  std::vector<typename Field::value_type> v(m.cols(), field.zero());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(reduced.rows()(r, free));
    kernel.append_row(v);
  }
  return rref(std::move(kernel));
}

/// Inverse of a square matrix via the RREF of [m | I].
template <class Field>
DenseMatrix<Field> inverse(const DenseMatrix<Field>& m) {
  if (!m.is_square()) fail(ErrorKind::dimension_mismatch, "inverse of a non-square matrix");
  const Field& field = m.field();
  const std::size_t n = m.rows();
  DenseMatrix<Field> aug(field, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = field.one();
  }
  auto reduced = rref(std::move(aug));
  if (reduced.rank() < n || (n > 0 && reduced.pivot_cols()[n - 1] != n - 1)) {
    fail(ErrorKind::singular_matrix, "matrix is not invertible");
  }
  DenseMatrix<Field> out(field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = reduced.rows()(r, n + c);
  }
  return out;
}

template <class Field>
bool subspace_contains(const SubspaceBasis<Field>& basis, std::span<const typename Field::value_type> v) {
  return basis.contains(v);
}

template <class Field>
bool subspace_equal(const SubspaceBasis<Field>& a, const SubspaceBasis<Field>& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::dimension_mismatch, "subspaces in different ambients");
  return a == b;
}

/// Sum of two subspaces.
template <class Field>
SubspaceBasis<Field> subspace_sum(const SubspaceBasis<Field>& a, const SubspaceBasis<Field>& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::dimension_mismatch, "subspaces in different ambients");
  DenseMatrix<Field> stacked(a.field(), 0, a.ambient_dim());
  for (std::size_t r = 0; r < a.rank(); ++r) stacked.append_row(a.row(r));
  for (std::size_t r = 0; r < b.rank(); ++r) stacked.append_row(b.row(r));
  return rref(std::move(stacked));
}

/// Incremental echelon form: rows are added one at a time and the canonical
/// basis is produced on demand.
template <class Field>
class EchelonBuilder {
 public:
  using value_type = typename Field::value_type;

  EchelonBuilder(Field field, std::size_t ambient_dim) : field_(std::move(field)), ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_full() const noexcept { return rank() == ambient_dim_; }

  /// Reduces v against the current rows in place.
  void reduce(std::vector<value_type>& v) const {
    if (v.size() != ambient_dim_) fail(ErrorKind::dimension_mismatch, "vector length vs ambient dimension");
    for (const auto& [pivot, row] : rows_) {
      const value_type c = v[pivot];
      if (field_.is_zero(c)) continue;
      RowOps<Field>::axpy(field_, v, row, field_.neg(c));
    }
  }

  bool contains(std::vector<value_type> v) const {
    reduce(v);
    return leading_index<Field>(field_, v) == v.size();
  }

  /// Adds v to the span; returns true iff the rank grew.
  bool insert(std::vector<value_type> v) {
    reduce(v);
    std::size_t lead = leading_index<Field>(field_, v);
    if (lead == v.size()) return false;
    RowOps<Field>::scale(field_, v, field_.inv(v[lead]));
    rows_.emplace(lead, std::move(v));
    return true;
  }

  SubspaceBasis<Field> basis() const {
    std::vector<std::vector<value_type>> rows;
    std::vector<std::size_t> pivots;
    rows.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) {
      pivots.push_back(pivot);
      rows.push_back(row);
    }
    for (std::size_t b = rows.size(); b-- > 0;) {
      for (std::size_t a = 0; a < b; ++a) {
        const value_type c = rows[a][pivots[b]];
        if (field_.is_zero(c)) continue;
        RowOps<Field>::axpy(field_, rows[a], rows[b], field_.neg(c));
      }
    }
    return SubspaceBasis<Field>(DenseMatrix<Field>::from_rows(field_, rows, ambient_dim_), std::move(pivots));
  }

 private:
  Field field_;
  std::size_t ambient_dim_;
  std::map<std::size_t, std::vector<value_type>> rows_;
};

}  // namespace invtheory
