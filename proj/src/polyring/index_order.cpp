#include "invtheory/polyring/index_order.hpp"

#include <algorithm>

#include "invtheory/errors.hpp"

namespace invtheory {

ExponentMatrix ExponentMatrix::from_monomial(const Monomial& m, const VariableLayout& layout) {
  if (m.num_vars() != layout.num_vars()) fail(ErrorKind::dimension_mismatch, "monomial vs layout");
  const CopyBlock& b = layout.block(0);
  for (std::size_t v = b.size(); v < m.num_vars(); ++v) {
    if (m[v] != 0) fail(ErrorKind::invalid_argument, "exponent matrix of a monomial outside the copies block");
  }
  ExponentMatrix a(b.base_dim, b.copies);
  for (std::size_t j = 0; j < b.copies; ++j) {
    for (std::size_t i = 0; i < b.base_dim; ++i) a(i, j) = m[layout.index(0, i, j)];
  }
  return a;
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  if (rows.empty()) return {};
  ExponentMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols_) fail(ErrorKind::dimension_mismatch, "ragged exponent matrix");
    for (std::size_t j = 0; j < a.cols_; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

std::uint32_t ExponentMatrix::degree() const {
  std::uint32_t d = 0;
  for (auto e : a_) d += e;
  return d;
}

std::uint32_t ExponentMatrix::column_sum(std::size_t j) const {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

std::uint32_t ExponentMatrix::row_sum(std::size_t i) const {
  std::uint32_t s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

Monomial ExponentMatrix::to_monomial(const VariableLayout& layout) const {
  const CopyBlock& b = layout.block(0);
  if (b.base_dim != rows_ || b.copies != cols_) fail(ErrorKind::dimension_mismatch, "exponent matrix vs layout");
  std::vector<std::uint32_t> exps(layout.num_vars(), 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) exps[layout.index(0, i, j)] = (*this)(i, j);
  }
  return Monomial::from_exponents(exps);
}

std::vector<std::vector<std::uint32_t>> ExponentMatrix::to_rows() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

ExponentMatrixIndex ExponentMatrixIndex::of(const ExponentMatrix& a) {
  ExponentMatrixIndex ind;
  for (std::size_t j = 0; j < a.cols(); ++j) ind.column_sums.push_back(a.column_sum(j));
  for (std::size_t i = 0; i < a.rows(); ++i) ind.row_sums.push_back(a.row_sum(i));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) ind.entries.push_back(a(i, j));
  }
  return ind;
}

std::vector<std::uint32_t> ExponentMatrixIndex::flattened() const {
  std::vector<std::uint32_t> out = column_sums;
  out.insert(out.end(), row_sums.begin(), row_sums.end());
  out.insert(out.end(), entries.begin(), entries.end());
  return out;
}

std::strong_ordering index_compare(const ExponentMatrix& a, const ExponentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::dimension_mismatch, "exponent matrix shapes");
  auto fa = ExponentMatrixIndex::of(a).flattened();
  auto fb = ExponentMatrixIndex::of(b).flattened();
  return std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
}

std::strong_ordering index_compare(const Monomial& a, const Monomial& b, const VariableLayout& layout) {
  return index_compare(ExponentMatrix::from_monomial(a, layout), ExponentMatrix::from_monomial(b, layout));
}

}  // namespace invtheory
