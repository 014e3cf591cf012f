#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invtheory/polyring/polynomial.hpp"

namespace invtheory {

inline constexpr std::size_t kDefaultColumnCap = 20000;

/// C(num_vars + d - 1, d), or nullopt if it exceeds `limit`.
std::optional<std::size_t> component_dimension(std::size_t num_vars, std::uint32_t d,
                                               std::size_t limit = SIZE_MAX);

/// All monomials of total degree d, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t d,
                                          std::size_t cap = kDefaultColumnCap);
inline std::vector<Monomial> monomials_of_degree(const VariableLayout& layout, std::uint32_t d,
                                                 std::size_t cap = kDefaultColumnCap) {
  return monomials_of_degree(layout.num_vars(), d, cap);
}

/// Coordinatization of k[x_1..x_n]_d: monomial list plus reverse index.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t num_vars, std::uint32_t d, std::size_t cap = kDefaultColumnCap);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  /// Column of m; throws if m is not of this degree.
  std::size_t index_of(const Monomial& m) const;
  std::optional<std::size_t> find(const Monomial& m) const;

 private:
  std::size_t num_vars_;
  std::uint32_t degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

using MonomialBasisPtr = std::shared_ptr<const MonomialBasis>;

/// Shared, lazily built bases (per variable count and degree).
MonomialBasisPtr monomial_basis(std::size_t num_vars, std::uint32_t d, std::size_t cap = kDefaultColumnCap);

/// Multiplication-by-variable table from degree d-1 into degree d:
/// entry [i * num_vars + v] is the column of basis(d-1)[i] * x_v in basis(d).
using ShiftTable = std::shared_ptr<const std::vector<std::uint32_t>>;
ShiftTable variable_shift(std::size_t num_vars, std::uint32_t d, std::size_t cap = kDefaultColumnCap);

/// Coordinates of the product of a degree-a and a degree-b component.
template <class Field>
std::vector<typename Field::value_type> multiply_components(const Field& field, std::size_t num_vars,
                                                            std::uint32_t a, std::span<const typename Field::value_type> u,
                                                            std::uint32_t b, std::span<const typename Field::value_type> w,
                                                            std::size_t cap = kDefaultColumnCap) {
  auto ba = monomial_basis(num_vars, a, cap);
  auto bb = monomial_basis(num_vars, b, cap);
  auto bc = monomial_basis(num_vars, a + b, cap);
  if (u.size() != ba->size() || w.size() != bb->size()) fail(ErrorKind::dimension_mismatch, "component lengths");
  std::vector<typename Field::value_type> out(bc->size(), field.zero());
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!field.is_zero(w[j])) nz.push_back(j);
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (field.is_zero(u[i])) continue;
    for (auto j : nz) {
      auto& slot = out[bc->index_of((*ba)[i] * (*bb)[j])];
      slot = field.add(slot, field.mul(u[i], w[j]));
    }
  }
  return out;
}

/// Coefficients of the degree-d part of f against the basis order.
template <class Field>
std::vector<typename Field::value_type> component_to_vector(const Polynomial<Field>& f, const MonomialBasis& basis) {
  if (f.num_vars() != basis.num_vars()) fail(ErrorKind::dimension_mismatch, "polynomial vs basis variables");
  std::vector<typename Field::value_type> v(basis.size(), f.field().zero());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == basis.degree()) v[basis.index_of(m)] = c;
  }
  return v;
}

template <class Field>
std::vector<typename Field::value_type> component_to_vector(const Polynomial<Field>& f, std::uint32_t d,
                                                            std::size_t cap = kDefaultColumnCap) {
  return component_to_vector(f, *monomial_basis(f.num_vars(), d, cap));
}

template <class Field>
Polynomial<Field> vector_to_polynomial(const Field& field, LayoutPtr layout, const MonomialBasis& basis,
                                       std::span<const typename Field::value_type> v) {
  if (v.size() != basis.size()) fail(ErrorKind::dimension_mismatch, "vector vs basis length");
  std::vector<typename Polynomial<Field>::Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!field.is_zero(v[i])) terms.emplace_back(basis[i], v[i]);
  }
  // basis order is already descending grevlex
  return Polynomial<Field>::from_terms(field, std::move(layout), std::move(terms));
}

/// Rows of a subspace basis lifted back to polynomials.
template <class Field>
std::vector<Polynomial<Field>> basis_polynomials(const SubspaceBasis<Field>& b, LayoutPtr layout,
                                                 const MonomialBasis& basis) {
  std::vector<Polynomial<Field>> out;
  out.reserve(b.rank());
  for (std::size_t r = 0; r < b.rank(); ++r) out.push_back(vector_to_polynomial(b.field(), layout, basis, b.row(r)));
  return out;
}

}  // namespace invtheory
