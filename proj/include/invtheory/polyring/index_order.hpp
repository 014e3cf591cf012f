#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "invtheory/polyring/layout.hpp"
#include "invtheory/polyring/monomial.hpp"

namespace invtheory {

/// The exponent matrix A of a monomial on the copies block: a(i, j) is the
/// exponent of x[i+1, j], with rows indexed by coordinates and columns by copies.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  /// Reads block 0 of the layout; other blocks must have zero exponents.
  static ExponentMatrix from_monomial(const Monomial& m, const VariableLayout& layout);
  static ExponentMatrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::uint32_t degree() const;
  std::uint32_t column_sum(std::size_t j) const;
  std::uint32_t row_sum(std::size_t i) const;

  /// Monomial on a layout whose block 0 has shape rows x cols.
  Monomial to_monomial(const VariableLayout& layout) const;
  std::vector<std::vector<std::uint32_t>> to_rows() const;

  bool operator==(const ExponentMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> a_;
};

/// ind A: column sums, then row sums, then entries in row-major order.
struct ExponentMatrixIndex {
  std::vector<std::uint32_t> column_sums;
  std::vector<std::uint32_t> row_sums;
  std::vector<std::uint32_t> entries;

  static ExponentMatrixIndex of(const ExponentMatrix& a);
  std::vector<std::uint32_t> flattened() const;
};

/// Lexicographic comparison of ind A and ind B.
std::strong_ordering index_compare(const ExponentMatrix& a, const ExponentMatrix& b);
std::strong_ordering index_compare(const Monomial& a, const Monomial& b, const VariableLayout& layout);

}  // namespace invtheory
