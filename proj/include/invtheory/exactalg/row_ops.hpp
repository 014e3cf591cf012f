#pragma once

#include <span>

#include "invtheory/exactalg/field.hpp"
#include "invtheory/exactalg/kernels.hpp"

namespace invtheory {

/// Row operations used by every elimination routine. The prime-field
/// specialisation routes through the dispatched SIMD kernels.
template <class Field>
struct RowOps {
  using value_type = typename Field::value_type;

  // dst += factor * src
  static void axpy(const Field& field, std::span<value_type> dst, std::span<const value_type> src,
                   const value_type& factor) {
    if (field.is_zero(factor)) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (!field.is_zero(src[i])) dst[i] = field.add(dst[i], field.mul(factor, src[i]));
    }
  }

  static void scale(const Field& field, std::span<value_type> row, const value_type& factor) {
    if (field.is_one(factor)) return;
    for (auto& x : row) {
      if (!field.is_zero(x)) x = field.mul(factor, x);
    }
  }
};

template <>
struct RowOps<PrimeField> {
  using value_type = PrimeField::value_type;

  static void axpy(const PrimeField& field, std::span<value_type> dst, std::span<const value_type> src,
                   value_type factor) {
    kernels::axpy_mod(dst, src, factor, field.modulus());
  }

  static void scale(const PrimeField& field, std::span<value_type> row, value_type factor) {
    kernels::scale_mod(row, factor, field.modulus());
  }
};

/// Index of the first nonzero entry, or row.size().
template <class Field>
std::size_t leading_index(const Field& field, std::span<const typename Field::value_type> row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!field.is_zero(row[i])) return i;
  }
  return row.size();
}

}  // namespace invtheory
