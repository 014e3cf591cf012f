#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "invtheory/errors.hpp"
#include "invtheory/exactalg/field.hpp"
#include "invtheory/exactalg/row_ops.hpp"

namespace invtheory {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Row-major dense matrix over a field.
template <class Field>
class DenseMatrix {
 public:
  using value_type = typename Field::value_type;

  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static DenseMatrix identity(const Field& field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static DenseMatrix from_rows(const Field& field, const std::vector<std::vector<value_type>>& rows,
                               std::size_t cols_if_empty = 0) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    DenseMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) fail(ErrorKind::dimension_mismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static DenseMatrix from_integers(const Field& field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<value_type>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<value_type> out;
      out.reserve(row.size());
      for (auto v : row) out.push_back(field.from_int(v));
      converted.push_back(std::move(out));
    }
    return from_rows(field, converted);
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<value_type>& data() const noexcept { return data_; }

  void append_row(std::span<const value_type> values) {
    if (values.size() != cols_) fail(ErrorKind::dimension_mismatch, "append_row length");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  DenseMatrix operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(ErrorKind::dimension_mismatch, "matrix product shapes");
    DenseMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const value_type& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        RowOps<Field>::axpy(field_, out.row(i), rhs.row(k), a);
      }
    }
    return out;
  }

  DenseMatrix operator-(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::dimension_mismatch, "matrix difference shapes");
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.equal((*this)(i, j), i == j ? field_.one() : field_.zero())) return false;
      }
    }
    return true;
  }

  bool operator==(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Block-diagonal matrix with the given square blocks.
template <class Field>
DenseMatrix<Field> block_diagonal(const Field& field, const std::vector<const DenseMatrix<Field>*>& blocks) {
  std::size_t n = 0;
  for (const auto* b : blocks) n += b->rows();
  DenseMatrix<Field> out(field, n, n);
  std::size_t offset = 0;
  for (const auto* b : blocks) {
    for (std::size_t i = 0; i < b->rows(); ++i) {
      for (std::size_t j = 0; j < b->cols(); ++j) out(offset + i, offset + j) = (*b)(i, j);
    }
    offset += b->rows();
  }
  return out;
}

}  // namespace invtheory
