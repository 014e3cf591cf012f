#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invtheory/grouprep/group.hpp"
#include "invtheory/grouprep/subgroup.hpp"
#include "invtheory/polyring/layout.hpp"
#include "invtheory/polyring/monomial.hpp"

namespace invtheory {

/// A linear action of a finite group on the span of the layout's variables.
/// action(g) acts on variables by x_i -> sum_k action(g)(k, i) x_k, the
/// convention of apply_linear.
template <class Field>
class Representation {
 public:
  using Matrix = DenseMatrix<Field>;

  /// Validates action(identity) = I and action(g s) = action(g) action(s)
  /// for every g and every generator s, which forces the homomorphism property.
  Representation(GroupPtr<Field> group, LayoutPtr layout, std::vector<Matrix> action,
                 std::optional<std::size_t> adjoined_block = std::nullopt)
      : group_(std::move(group)),
        layout_(std::move(layout)),
        action_(std::move(action)),
        adjoined_block_(adjoined_block) {
    const std::size_t n = layout_->num_vars();
    if (action_.size() != group_->order()) fail(ErrorKind::dimension_mismatch, "one action matrix per element");
    for (const auto& m : action_) {
      if (!m.is_square() || m.rows() != n) fail(ErrorKind::dimension_mismatch, "action matrix vs variable count");
    }
    if (!action_[0].is_identity()) fail(ErrorKind::invalid_argument, "identity must act trivially");
    for (std::size_t g = 0; g < group_->order(); ++g) {
      for (auto s : group_->generators()) {
        if (!(action_[group_->cayley(g, s)] == action_[g] * action_[s])) {
          fail(ErrorKind::invalid_argument, "action is not a group homomorphism");
        }
      }
    }
  }

  /// The group's own matrices acting on a single block.
  static Representation defining(GroupPtr<Field> group, std::string name = "x") {
    auto layout = make_layout(VariableLayout::single(group->dim(), std::move(name)));
    auto action = group->elements();
    return Representation(std::move(group), std::move(layout), std::move(action));
  }

  /// Extends generator images along the group's spanning tree.
  static Representation from_generator_images(GroupPtr<Field> group, LayoutPtr layout,
                                              const std::vector<Matrix>& images) {
    if (images.size() != group->generators().size()) fail(ErrorKind::dimension_mismatch, "one image per generator");
    const Field& field = group->field();
    std::vector<Matrix> action;
    action.reserve(group->order());
    action.push_back(Matrix::identity(field, layout->num_vars()));
    for (std::size_t i = 1; i < group->order(); ++i) action.push_back(images.at(group->via(i)) * action[group->parent(i)]);
    return Representation(std::move(group), std::move(layout), std::move(action));
  }

  static Representation trivial(GroupPtr<Field> group, std::size_t dim, std::string name = "x") {
    auto layout = make_layout(VariableLayout::single(dim, std::move(name)));
    std::vector<Matrix> action(group->order(), Matrix::identity(group->field(), dim));
    return Representation(std::move(group), std::move(layout), std::move(action));
  }

  const GroupPtr<Field>& group() const noexcept { return group_; }
  const Field& field() const noexcept { return group_->field(); }
  const LayoutPtr& layout() const noexcept { return layout_; }
  std::size_t num_vars() const noexcept { return layout_->num_vars(); }
  const Matrix& action(std::size_t g) const { return action_.at(g); }
  const std::vector<Matrix>& actions() const noexcept { return action_; }
  /// Block holding the adjoined x_g variables, if any.
  std::optional<std::size_t> adjoined_block() const noexcept { return adjoined_block_; }

  /// Same action on a relabeled layout with identical variable count.
  Representation with_layout(LayoutPtr layout) const {
    if (layout->num_vars() != num_vars()) fail(ErrorKind::dimension_mismatch, "layout variable count");
    return Representation(group_, std::move(layout), action_, adjoined_block_);
  }

 private:
  GroupPtr<Field> group_;
  LayoutPtr layout_;
  std::vector<Matrix> action_;
  std::optional<std::size_t> adjoined_block_;
};

/// Left translation on k[G]: g maps the basis vector of h to that of gh.
template <class Field>
Representation<Field> regular_representation(const GroupPtr<Field>& g, std::string name = "z") {
  const std::size_t n = g->order();
  std::vector<DenseMatrix<Field>> action;
  action.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    DenseMatrix<Field> m(g->field(), n, n);
    for (std::size_t h = 0; h < n; ++h) m(g->cayley(a, h), h) = g->field().one();
    action.push_back(std::move(m));
  }
  return Representation<Field>(g, make_layout(VariableLayout::single(n, std::move(name))), std::move(action));
}

template <class Field>
void require_same_group(const Representation<Field>& a, const Representation<Field>& b) {
  if (a.group() == b.group()) return;
  if (a.group()->order() != b.group()->order() || a.group()->elements() != b.group()->elements()) {
    fail(ErrorKind::group_mismatch, "representations of different groups");
  }
}

/// a ⊕ b with b's variables after a's.
template <class Field>
Representation<Field> direct_sum(const Representation<Field>& a, const Representation<Field>& b) {
  require_same_group(a, b);
  std::vector<DenseMatrix<Field>> action;
  for (std::size_t g = 0; g < a.group()->order(); ++g) {
    action.push_back(block_diagonal(a.field(), {&a.action(g), &b.action(g)}));
  }
  return Representation<Field>(a.group(), make_layout(a.layout()->concat(*b.layout())), std::move(action),
                               a.adjoined_block());
}

/// V^n: the single-block representation v repeated n times in one copies block.
template <class Field>
Representation<Field> copies(const Representation<Field>& v, std::size_t n) {
  if (v.layout()->blocks().size() != 1) fail(ErrorKind::invalid_argument, "copies() needs a single-block representation");
  if (n == 0) fail(ErrorKind::invalid_argument, "copies() needs at least one copy");
  const CopyBlock& b = v.layout()->block(0);
  auto layout = make_layout(VariableLayout::copies_of(b.base_dim, b.copies * n, b.name));
  std::vector<DenseMatrix<Field>> action;
  for (std::size_t g = 0; g < v.group()->order(); ++g) {
    std::vector<const DenseMatrix<Field>*> blocks(n, &v.action(g));
    action.push_back(block_diagonal(v.field(), blocks));
  }
  return Representation<Field>(v.group(), std::move(layout), std::move(action));
}

/// A(G): one new variable x_g per element with g x_h = x_{gh}.
template <class Field>
Representation<Field> adjoin_group_variables(const Representation<Field>& rep) {
  auto reg = regular_representation(rep.group(), "xg");
  std::vector<DenseMatrix<Field>> action;
  for (std::size_t g = 0; g < rep.group()->order(); ++g) {
    action.push_back(block_diagonal(rep.field(), {&rep.action(g), &reg.action(g)}));
  }
  auto layout = rep.layout()->with_block("xg", rep.group()->order(), 1);
  std::size_t block = layout.blocks().size() - 1;
  return Representation<Field>(rep.group(), make_layout(std::move(layout)), std::move(action), block);
}

/// (degree in the original variables, degree in the adjoined x_g).
template <class Field>
std::pair<std::uint32_t, std::uint32_t> bidegree(const Representation<Field>& rep, const Monomial& m) {
  if (!rep.adjoined_block()) return {m.degree(), 0};
  const CopyBlock& b = rep.layout()->block(*rep.adjoined_block());
  std::uint32_t adj = 0;
  for (std::size_t v = b.offset; v < b.offset + b.size(); ++v) adj += m[v];
  return {m.degree() - adj, adj};
}

/// The representation restricted to a subgroup, as a group in its own right.
template <class Field>
Representation<Field> restricted_to(const Representation<Field>& rep, const SubgroupHandle<Field>& h) {
  const auto& parent = *rep.group();
  std::vector<DenseMatrix<Field>> gens;
  for (auto m : h.members) gens.push_back(parent.element(m));
  auto sub = generate_group(parent.field(), gens, parent.dim());
  std::vector<DenseMatrix<Field>> action;
  for (std::size_t i = 0; i < sub->order(); ++i) action.push_back(rep.action(parent.index_of(sub->element(i))));
  return Representation<Field>(sub, rep.layout(), std::move(action), rep.adjoined_block());
}

}  // namespace invtheory
