#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "invtheory/polyring/polynomial.hpp"

namespace invtheory {

/// P_{jj'} = sum_i x[i,j] d/dx[i,j'] on one copies block.
struct PolarizationOperator {
  std::size_t j = 0;
  std::size_t jp = 0;
  std::size_t block = 0;

  std::string name() const { return "P[" + std::to_string(j) + "," + std::to_string(jp) + "]"; }
};

inline void require_copies(const VariableLayout& layout, std::size_t block, std::size_t copy) {
  if (block >= layout.blocks().size()) fail(ErrorKind::invalid_argument, "block index out of range");
  if (copy >= layout.block(block).copies) {
    fail(ErrorKind::invalid_argument, "copy " + std::to_string(copy) + " out of range for block " +
                                          layout.block(block).name);
  }
}

template <class Field>
Polynomial<Field> polarize(const Polynomial<Field>& f, const PolarizationOperator& op) {
  const auto& layout = *f.layout();
  require_copies(layout, op.block, op.j);
  require_copies(layout, op.block, op.jp);
  const Field& field = f.field();
  const CopyBlock& b = layout.block(op.block);
  std::vector<typename Polynomial<Field>::Term> out;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < b.base_dim; ++i) {
      const std::size_t from = layout.index(op.block, i, op.jp);
      const auto e = m[from];
      if (e == 0) continue;
      auto coef = field.mul(c, field.from_int(e));
      if (field.is_zero(coef)) continue;
      Monomial shifted = m.without_one(from);
      shifted *= Monomial::variable(m.num_vars(), layout.index(op.block, i, op.j));
      out.emplace_back(std::move(shifted), std::move(coef));
    }
  }
  return Polynomial<Field>::from_terms(field, f.layout(), std::move(out));
}

/// Sends copy j of the block to copy perm[j].
inline Monomial permute_copies(const Monomial& m, const VariableLayout& layout, std::size_t block,
                               const std::vector<std::size_t>& perm) {
  const CopyBlock& b = layout.block(block);
  std::vector<Monomial::exponent_type> exps = m.exponents();
  for (std::size_t j = 0; j < b.copies; ++j) {
    for (std::size_t i = 0; i < b.base_dim; ++i) exps[layout.index(block, i, perm[j])] = m[layout.index(block, i, j)];
  }
  return Monomial(std::move(exps));
}

inline void require_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) fail(ErrorKind::invalid_argument, "permutation length does not match the copy count");
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (sorted[j] != j) fail(ErrorKind::invalid_argument, "not a permutation of the copies");
  }
}

template <class Field>
Polynomial<Field> permute_copies(const Polynomial<Field>& f, const std::vector<std::size_t>& perm, std::size_t block = 0) {
  const auto& layout = *f.layout();
  if (block >= layout.blocks().size()) fail(ErrorKind::invalid_argument, "block index out of range");
  require_permutation(perm, layout.block(block).copies);
  std::vector<typename Polynomial<Field>::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) out.emplace_back(permute_copies(m, layout, block, perm), c);
  return Polynomial<Field>::from_terms(f.field(), f.layout(), std::move(out));
}

/// Transposition of copies a and b.
inline std::vector<std::size_t> transposition(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[a], perm[b]);
  return perm;
}

/// Relabels f onto `target` by (block, coord, copy); variables without a
/// place in the target are set to zero.
template <class Field>
Polynomial<Field> transport(const Polynomial<Field>& f, const LayoutPtr& target) {
  const auto& src = *f.layout();
  if (src.blocks().size() != target->blocks().size()) fail(ErrorKind::invalid_argument, "layouts differ in blocks");
  std::vector<std::optional<std::size_t>> where(src.num_vars());
  for (std::size_t v = 0; v < src.num_vars(); ++v) {
    auto pos = src.position(v);
    const CopyBlock& tb = target->block(pos.block);
    if (tb.base_dim != src.block(pos.block).base_dim) fail(ErrorKind::invalid_argument, "block dimensions differ");
    if (pos.copy < tb.copies) where[v] = target->index(pos.block, pos.coord, pos.copy);
  }
  std::vector<typename Polynomial<Field>::Term> out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::exponent_type> exps(target->num_vars(), 0);
    bool keep = true;
    for (std::size_t v = 0; v < src.num_vars() && keep; ++v) {
      if (m[v] == 0) continue;
      if (!where[v]) keep = false;
      else exps[*where[v]] = m[v];
    }
    if (keep) out.emplace_back(Monomial(std::move(exps)), c);
  }
  return Polynomial<Field>::from_terms(f.field(), target, std::move(out));
}

/// Sets every variable of copies >= keep in the block to zero.
template <class Field>
Polynomial<Field> restitution(const Polynomial<Field>& f, std::size_t keep, std::size_t block = 0) {
  const auto& layout = *f.layout();
  if (block >= layout.blocks().size()) fail(ErrorKind::invalid_argument, "block index out of range");
  if (keep > layout.block(block).copies) fail(ErrorKind::invalid_argument, "restitution keeps more copies than exist");
  if (keep == layout.block(block).copies) return f;
  return transport(f, make_layout(layout.with_copies(block, keep)));
}

/// Views f on a layout with at least as many copies in every block.
template <class Field>
Polynomial<Field> embed(const Polynomial<Field>& f, const LayoutPtr& target) {
  const auto& src = *f.layout();
  for (std::size_t b = 0; b < src.blocks().size(); ++b) {
    if (b >= target->blocks().size() || target->block(b).copies < src.block(b).copies) {
      fail(ErrorKind::invalid_argument, "embedding target has fewer copies");
    }
  }
  return transport(f, target);
}

/// Copy degrees of a monomial in one block.
inline std::vector<std::uint32_t> copy_degrees(const Monomial& m, const VariableLayout& layout, std::size_t block = 0) {
  const CopyBlock& b = layout.block(block);
  std::vector<std::uint32_t> out(b.copies, 0);
  for (std::size_t j = 0; j < b.copies; ++j) {
    for (std::size_t i = 0; i < b.base_dim; ++i) out[j] += m[layout.index(block, i, j)];
  }
  return out;
}

}  // namespace invtheory
