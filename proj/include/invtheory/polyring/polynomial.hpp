#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invtheory/errors.hpp"
#include "invtheory/exactalg/dense_matrix.hpp"
#include "invtheory/exactalg/subspace.hpp"
#include "invtheory/polyring/layout.hpp"
#include "invtheory/polyring/monomial.hpp"

namespace invtheory {

/// Sparse polynomial with terms sorted in descending grevlex order and no
/// zero coefficients.
template <class Field>
class Polynomial {
 public:
  using value_type = typename Field::value_type;
  using Term = std::pair<Monomial, value_type>;

  Polynomial(Field field, LayoutPtr layout) : field_(std::move(field)), layout_(std::move(layout)) {}

  static Polynomial term(const Field& field, LayoutPtr layout, Monomial m, value_type c) {
    Polynomial p(field, std::move(layout));
    if (m.num_vars() != p.num_vars()) fail(ErrorKind::dimension_mismatch, "monomial vs layout");
    if (!field.is_zero(c)) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }
  static Polynomial monomial(const Field& field, LayoutPtr layout, Monomial m) {
    return term(field, std::move(layout), std::move(m), field.one());
  }
  static Polynomial variable(const Field& field, LayoutPtr layout, std::size_t var) {
    std::size_t n = layout->num_vars();
    return monomial(field, std::move(layout), Monomial::variable(n, var));
  }
  static Polynomial constant(const Field& field, LayoutPtr layout, value_type c) {
    std::size_t n = layout->num_vars();
    return term(field, std::move(layout), Monomial(n), std::move(c));
  }
  /// Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(const Field& field, LayoutPtr layout, std::vector<Term> terms) {
    Polynomial p(field, std::move(layout));
    for (const auto& [m, c] : terms) {
      if (m.num_vars() != p.num_vars()) fail(ErrorKind::dimension_mismatch, "monomial vs layout");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.first, b.first) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = field.add(p.terms_.back().second, t.second);
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(p.terms_, [&](const Term& t) { return field.is_zero(t.second); });
    return p;
  }

  const Field& field() const noexcept { return field_; }
  const LayoutPtr& layout() const noexcept { return layout_; }
  std::size_t num_vars() const noexcept { return layout_->num_vars(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree()); }
  int min_degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.back().first.degree()); }
  bool is_homogeneous() const noexcept { return degree() == min_degree(); }

  Polynomial homogeneous_part(std::uint32_t d) const {
    Polynomial out(field_, layout_);
    for (const auto& t : terms_) {
      if (t.first.degree() == d) out.terms_.push_back(t);
    }
    return out;
  }

  value_type coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grevlex_compare(t.first, key) > 0; });
    if (it != terms_.end() && it->first == m) return it->second;
    return field_.zero();
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.second = field_.neg(t.second);
    return out;
  }

  Polynomial operator+(const Polynomial& other) const { return merge(other, field_.one()); }
  Polynomial operator-(const Polynomial& other) const { return merge(other, field_.neg(field_.one())); }
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

  /// this + c * other
  Polynomial axpy(const value_type& c, const Polynomial& other) const { return merge(other, c); }

  Polynomial scaled(const value_type& c) const {
    Polynomial out(field_, layout_);
    if (field_.is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.emplace_back(t.first, field_.mul(c, t.second));
    return out;
  }

  Polynomial times_monomial(const Monomial& m, const value_type& c) const {
    Polynomial out(field_, layout_);
    if (field_.is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.emplace_back(t.first * m, field_.mul(c, t.second));
    return out;  // multiplying by a fixed monomial preserves grevlex order
  }

  Polynomial operator*(const Polynomial& other) const {
    check_compatible(other);
    if (is_zero() || other.is_zero()) return Polynomial(field_, layout_);
    std::unordered_map<Monomial, value_type, MonomialHash> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : other.terms_) {
        auto [it, inserted] = acc.try_emplace(ma * mb, field_.zero());
        it->second = field_.add(it->second, field_.mul(ca, cb));
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!field_.is_zero(c)) out.emplace_back(m, std::move(c));
    }
    return from_terms(field_, layout_, std::move(out));
  }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(field_, layout_, field_.one());
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  bool operator==(const Polynomial& other) const {
    if (num_vars() != other.num_vars() || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].first == other.terms_[i].first) || !field_.equal(terms_[i].second, other.terms_[i].second))
        return false;
    }
    return true;
  }

  /// Same terms re-tagged with a layout that has the same variable count.
  Polynomial relabeled(LayoutPtr layout) const {
    if (layout->num_vars() != num_vars()) fail(ErrorKind::dimension_mismatch, "relabel to a different variable count");
    Polynomial out(field_, std::move(layout));
    out.terms_ = terms_;
    return out;
  }

 private:
  void check_compatible(const Polynomial& other) const {
    if (other.num_vars() != num_vars()) fail(ErrorKind::dimension_mismatch, "polynomials on different layouts");
  }

  Polynomial merge(const Polynomial& other, const value_type& c) const {
    check_compatible(other);
    Polynomial out(field_, layout_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
      int cmp;
      if (i == terms_.size()) cmp = 1;
      else if (j == other.terms_.size()) cmp = -1;
      else {
        auto o = grevlex_compare(terms_[i].first, other.terms_[j].first);
        cmp = o > 0 ? -1 : (o < 0 ? 1 : 0);
      }
      if (cmp < 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (cmp > 0) {
        value_type v = field_.mul(c, other.terms_[j].second);
        if (!field_.is_zero(v)) out.terms_.emplace_back(other.terms_[j].first, std::move(v));
        ++j;
      } else {
        value_type v = field_.add(terms_[i].second, field_.mul(c, other.terms_[j].second));
        if (!field_.is_zero(v)) out.terms_.emplace_back(terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Field field_;
  LayoutPtr layout_;
  std::vector<Term> terms_;
};

/// Formal partial derivative; exponents are reduced into the field.
template <class Field>
Polynomial<Field> partial_derivative(const Polynomial<Field>& f, std::size_t var) {
  if (var >= f.num_vars()) fail(ErrorKind::invalid_argument, "variable index out of range");
  const Field& field = f.field();
  std::vector<typename Polynomial<Field>::Term> out;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    auto coef = field.mul(field.from_int(m[var]), c);
    if (!field.is_zero(coef)) out.emplace_back(m.without_one(var), std::move(coef));
  }
  return Polynomial<Field>::from_terms(field, f.layout(), std::move(out));
}

/// Replaces variable i by images[i]; all images share the target layout.
template <class Field>
Polynomial<Field> substitute(const Polynomial<Field>& f, const std::vector<Polynomial<Field>>& images,
                             LayoutPtr target) {
  if (images.size() != f.num_vars()) fail(ErrorKind::dimension_mismatch, "substitution arity");
  const Field& field = f.field();
  Polynomial<Field> result(field, target);
  std::vector<std::vector<Polynomial<Field>>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial<Field>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial<Field>::constant(field, target, field.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  for (const auto& [m, c] : f.terms()) {
    Polynomial<Field> t = Polynomial<Field>::constant(field, target, c);
    for (std::size_t v = 0; v < m.num_vars() && !t.is_zero(); ++v) {
      if (m[v] != 0) t = t * power(v, m[v]);
    }
    result += t;
  }
  return result;
}

/// x_i -> sum_k g(k, i) x_k; no invertibility check.
template <class Field>
Polynomial<Field> substitute_linear(const DenseMatrix<Field>& g, const Polynomial<Field>& f) {
  const std::size_t n = f.num_vars();
  if (!g.is_square() || g.rows() != n) fail(ErrorKind::dimension_mismatch, "action matrix vs variable count");
  const Field& field = f.field();
  std::vector<Polynomial<Field>> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename Polynomial<Field>::Term> terms;
    for (std::size_t k = 0; k < n; ++k) {
      if (!field.is_zero(g(k, i))) terms.emplace_back(Monomial::variable(n, k), g(k, i));
    }
    images.push_back(Polynomial<Field>::from_terms(field, f.layout(), std::move(terms)));
  }
  return substitute(f, images, f.layout());
}

/// Linear change of variables x_i -> sum_k g(k, i) x_k. This is a left
/// action: apply_linear(g*h, f) = apply_linear(g, apply_linear(h, f)).
template <class Field>
Polynomial<Field> apply_linear(const DenseMatrix<Field>& g, const Polynomial<Field>& f) {
  if (!g.is_square() || g.rows() != f.num_vars()) fail(ErrorKind::dimension_mismatch, "action matrix vs variable count");
  if (rank(g) != g.rows()) fail(ErrorKind::singular_matrix, "apply_linear needs an invertible matrix");
  return substitute_linear(g, f);
}

}  // namespace invtheory
