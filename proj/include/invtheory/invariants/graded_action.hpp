#pragma once

#include <map>
#include <utility>

#include "invtheory/grouprep/representation.hpp"
#include "invtheory/polyring/graded.hpp"

namespace invtheory {

/// The induced action of each group element on k[V]_d, built degree by
/// degree from image(m) = image(m / x_v) * image(x_v).
///
/// images(g, d) has one row per monomial of degree d: row m holds the
/// coordinates of g . m.
template <class Field>
class GradedAction {
 public:
  using value_type = typename Field::value_type;
  using Matrix = DenseMatrix<Field>;

  explicit GradedAction(const Representation<Field>& rep, std::size_t cap = kDefaultColumnCap)
      : rep_(rep), cap_(cap) {}

  const Representation<Field>& representation() const noexcept { return rep_; }
  std::size_t num_vars() const noexcept { return rep_.num_vars(); }
  std::size_t cap() const noexcept { return cap_; }

  const Matrix& images(std::size_t g, std::uint32_t d) {
    auto key = std::make_pair(g, d);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, build(g, d)).first->second;
  }

  /// Coordinates of g . f for f given in degree d.
  std::vector<value_type> apply(std::size_t g, std::uint32_t d, std::span<const value_type> v) {
    const Matrix& img = images(g, d);
    const Field& field = rep_.field();
    std::vector<value_type> out(img.cols(), field.zero());
    for (std::size_t m = 0; m < v.size(); ++m) {
      if (!field.is_zero(v[m])) RowOps<Field>::axpy(field, out, img.row(m), v[m]);
    }
    return out;
  }

  bool is_fixed(std::size_t g, std::uint32_t d, std::span<const value_type> v) {
    auto w = apply(g, d, v);
    return std::equal(w.begin(), w.end(), v.begin(), v.end(),
                      [&](const value_type& a, const value_type& b) { return rep_.field().equal(a, b); });
  }

 private:
  Matrix build(std::size_t g, std::uint32_t d) {
    const Field& field = rep_.field();
    const std::size_t n = num_vars();
    auto upper = monomial_basis(n, d, cap_);
    Matrix out(field, upper->size(), upper->size());
    if (d == 0) {
      out(0, 0) = field.one();
      return out;
    }
    const Matrix& lower_img = images(g, d - 1);
    auto lower = monomial_basis(n, d - 1, cap_);
    auto shift = variable_shift(n, d, cap_);
    const Matrix& a = rep_.action(g);
    for (std::size_t m = 0; m < upper->size(); ++m) {
      const Monomial& mono = (*upper)[m];
      std::size_t v = 0;
      while (mono[v] == 0) ++v;
      std::size_t parent = lower->index_of(mono.without_one(v));
      auto src = lower_img.row(parent);
      auto dst = out.row(m);
      for (std::size_t i = 0; i < src.size(); ++i) {
        if (field.is_zero(src[i])) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (field.is_zero(a(k, v))) continue;
          auto& slot = dst[(*shift)[i * n + k]];
          slot = field.add(slot, field.mul(src[i], a(k, v)));
        }
      }
    }
    return out;
  }

  Representation<Field> rep_;
  std::size_t cap_;
  std::map<std::pair<std::size_t, std::uint32_t>, Matrix> cache_;
};

}  // namespace invtheory
