#pragma once

#include <string>

#include "invtheory/invariants/graded_action.hpp"
#include "invtheory/polyring/polynomial.hpp"

namespace invtheory {

enum class InvariantMethod { kernel, reynolds };

/// k[V]_d^G as a canonical subspace of k[V]_d.
template <class Field>
struct InvariantComponent {
  std::uint32_t degree;
  SubspaceBasis<Field> basis;
  std::size_t dim() const noexcept { return basis.rank(); }
};

template <class Field>
void require_invertible_order(const MatrixGroup<Field>& g) {
  if (!g.order_invertible()) {
    fail(ErrorKind::modular_group_order,
         "characteristic " + std::to_string(g.field().characteristic()) + " divides |G| = " + std::to_string(g.order()));
  }
}

/// (1/|G|) sum_g g . f
template <class Field>
Polynomial<Field> reynolds(const Polynomial<Field>& f, const Representation<Field>& rep) {
  const auto& g = *rep.group();
  require_invertible_order(g);
  if (f.num_vars() != rep.num_vars()) fail(ErrorKind::dimension_mismatch, "polynomial vs representation");
  Polynomial<Field> sum(f.field(), f.layout());
  for (std::size_t a = 0; a < g.order(); ++a) sum += substitute_linear(rep.action(a), f);
  return sum.scaled(f.field().inv(f.field().from_int(static_cast<std::int64_t>(g.order()))));
}

/// g . f for a group element index.
template <class Field>
Polynomial<Field> act(const Representation<Field>& rep, std::size_t g, const Polynomial<Field>& f) {
  return substitute_linear(rep.action(g), f);
}

template <class Field>
bool is_invariant(const Representation<Field>& rep, const Polynomial<Field>& f) {
  for (auto s : rep.group()->generators()) {
    if (!(act(rep, s, f) == f)) return false;
  }
  return true;
}

/// Basis of the fixed subspace of k[V]_d.
template <class Field>
InvariantComponent<Field> invariant_basis(GradedAction<Field>& action, std::uint32_t d,
                                          InvariantMethod method = InvariantMethod::kernel) {
  const auto& rep = action.representation();
  const auto& g = *rep.group();
  const Field& field = rep.field();
  auto basis = monomial_basis(rep.num_vars(), d, action.cap());
  const std::size_t n = basis->size();
  if (method == InvariantMethod::reynolds) {
    require_invertible_order(g);
    // row m of the sum is |G| * R(m); its row space is the image of R
    DenseMatrix<Field> sum(field, n, n);
    for (std::size_t a = 0; a < g.order(); ++a) {
      const auto& img = action.images(a, d);
      for (std::size_t r = 0; r < n; ++r) RowOps<Field>::axpy(field, sum.row(r), img.row(r), field.one());
    }
    return {d, rref(std::move(sum))};
  }
  // stack (T_s - I) over generators; T_s(k, m) = images(s)(m, k)
  DenseMatrix<Field> stacked(field, 0, n);
  std::vector<typename Field::value_type> row(n);
  for (auto s : g.generators()) {
    const auto& img = action.images(s, d);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t m = 0; m < n; ++m) row[m] = img(m, k);
      row[k] = field.sub(row[k], field.one());
      stacked.append_row(row);
    }
  }
  if (g.generators().empty()) return {d, rref(DenseMatrix<Field>::identity(field, n))};
  return {d, nullspace(stacked)};
}

template <class Field>
InvariantComponent<Field> invariant_basis(const Representation<Field>& rep, std::uint32_t d,
                                          InvariantMethod method = InvariantMethod::kernel,
                                          std::size_t cap = kDefaultColumnCap) {
  GradedAction<Field> action(rep, cap);
  return invariant_basis(action, d, method);
}

/// Every basis row is fixed by every group element.
template <class Field>
bool verify_invariant_component(GradedAction<Field>& action, const InvariantComponent<Field>& c) {
  const auto& g = *action.representation().group();
  for (std::size_t r = 0; r < c.basis.rank(); ++r) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (!action.is_fixed(a, c.degree, c.basis.row(r))) return false;
    }
  }
  return true;
}

/// Trace of the averaging projection on k[V]_d, an element of the field.
template <class Field>
typename Field::value_type invariant_dim_by_trace(GradedAction<Field>& action, std::uint32_t d) {
  const auto& g = *action.representation().group();
  require_invertible_order(g);
  const Field& field = action.representation().field();
  auto tr = field.zero();
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto& img = action.images(a, d);
    for (std::size_t i = 0; i < img.rows(); ++i) tr = field.add(tr, img(i, i));
  }
  return field.div(tr, field.from_int(static_cast<std::int64_t>(g.order())));
}

template <class Field>
typename Field::value_type invariant_dim_by_trace(const Representation<Field>& rep, std::uint32_t d) {
  GradedAction<Field> action(rep);
  return invariant_dim_by_trace(action, d);
}

}  // namespace invtheory
