#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "invtheory/errors.hpp"
#include "invtheory/exactalg/dense_matrix.hpp"
#include "invtheory/exactalg/subspace.hpp"

namespace invtheory {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite matrix group, fully enumerated. Element 0 is the identity and
/// cayley(a, b) is the index of elements[a] * elements[b].
template <class Field>
class MatrixGroup {
 public:
  using Matrix = DenseMatrix<Field>;

  /// Breadth-first closure of the generators.
  static MatrixGroup generate(const Field& field, const std::vector<Matrix>& gens, std::size_t dim,
                              std::size_t cap = kDefaultGroupCap) {
    for (const auto& g : gens) {
      if (!g.is_square() || g.rows() != dim) fail(ErrorKind::dimension_mismatch, "generator size");
      if (rank(g) != dim) fail(ErrorKind::singular_matrix, "group generator is not invertible");
    }
    MatrixGroup G(field, dim);
    G.add(Matrix::identity(field, dim));
    G.parent_.push_back(0);
    G.via_.push_back(0);
    // e_i = gens[via_i] * e_{parent_i}
    for (std::size_t cursor = 0; cursor < G.elements_.size(); ++cursor) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix next = gens[k] * G.elements_[cursor];
        if (G.lookup_.count(next.data())) continue;
        if (G.elements_.size() >= cap) {
          fail(ErrorKind::group_too_large, "group closure exceeds " + std::to_string(cap) + " elements");
        }
        G.add(std::move(next));
        G.parent_.push_back(cursor);
        G.via_.push_back(k);
      }
    }
    for (const auto& g : gens) G.generators_.push_back(G.index_of(g));
    G.build_tables(gens);
    return G;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Matrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  std::size_t cayley(std::size_t a, std::size_t b) const { return cayley_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverses_.at(a); }
  /// Element indices of the generators as supplied.
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

  std::size_t index_of(const Matrix& m) const {
    auto it = lookup_.find(m.data());
    if (it == lookup_.end()) fail(ErrorKind::invalid_argument, "matrix is not a group element");
    return it->second;
  }
  bool contains(const Matrix& m) const { return lookup_.count(m.data()) != 0; }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = cayley(a, x)) ++k;
    return k;
  }

  bool is_cyclic() const {
    for (std::size_t a = 0; a < order(); ++a) {
      if (element_order(a) == order()) return true;
    }
    return false;
  }

  bool is_abelian() const {
    for (auto a : generators_) {
      for (auto b : generators_) {
        if (cayley(a, b) != cayley(b, a)) return false;
      }
    }
    return true;
  }

  /// Spanning tree of the closure: element i = generator via(i) times element parent(i).
  std::size_t parent(std::size_t i) const { return parent_.at(i); }
  std::size_t via(std::size_t i) const { return via_.at(i); }

  /// |G| reduced into the field is nonzero.
  bool order_invertible() const { return field_.is_unit_integer(static_cast<std::int64_t>(order())); }

 private:
  MatrixGroup(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  void add(Matrix m) {
    lookup_.emplace(m.data(), elements_.size());
    elements_.push_back(std::move(m));
  }

  void build_tables(const std::vector<Matrix>& gens) {
    const std::size_t n = order();
    // right multiplication by generators, from matrices
    std::vector<std::size_t> right(n * gens.size());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t k = 0; k < gens.size(); ++k) right[a * gens.size() + k] = index_of(elements_[a] * gens[k]);
    }
    // a * e_i = (a * gens[via_i]) * e_{parent_i}, filled column by column
    cayley_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) cayley_[a * n] = a;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        cayley_[a * n + i] = cayley_[right[a * gens.size() + via_[i]] * n + parent_[i]];
      }
    }
    inverses_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (cayley_[a * n + b] == 0) {
          inverses_[a] = b;
          break;
        }
      }
    }
  }

  Field field_;
  std::size_t dim_;
  std::vector<Matrix> elements_;
  std::map<std::vector<typename Field::value_type>, std::size_t> lookup_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> via_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> cayley_;
  std::vector<std::size_t> inverses_;
};

template <class Field>
using GroupPtr = std::shared_ptr<const MatrixGroup<Field>>;

template <class Field>
GroupPtr<Field> generate_group(const Field& field, const std::vector<DenseMatrix<Field>>& gens, std::size_t dim,
                               std::size_t cap = kDefaultGroupCap) {
  return std::make_shared<const MatrixGroup<Field>>(MatrixGroup<Field>::generate(field, gens, dim, cap));
}

template <class Field>
bool is_cyclic(const MatrixGroup<Field>& g) {
  return g.is_cyclic();
}

}  // namespace invtheory
