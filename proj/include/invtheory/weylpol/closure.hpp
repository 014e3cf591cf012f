#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "invtheory/exactalg/subspace.hpp"
#include "invtheory/polyring/graded.hpp"
#include "invtheory/polyring/text.hpp"
#include "invtheory/verdict.hpp"
#include "invtheory/weylpol/polarization.hpp"

namespace invtheory {

inline constexpr std::size_t kClosureAmbientCap = 400000;

struct SpanClosureReport {
  std::size_t start_dim = 0;
  std::size_t final_dim = 0;
  std::size_t ambient_dim = 0;
  bool equals_full = false;
  std::size_t iterations = 0;
  std::size_t pieces = 1;
  bool multigraded = false;

  nlohmann::json to_json() const {
    return {{"start_dim", start_dim}, {"final_dim", final_dim},     {"ambient_dim", ambient_dim},
            {"equals_full", equals_full}, {"iterations", iterations}, {"pieces", pieces},
            {"path", multigraded ? "multigraded" : "general"}};
  }
};

struct ClosureOptions {
  /// Copies blocks acted on by P_{jj'} and copy transpositions.
  std::vector<std::size_t> operator_blocks{0};
  /// One-dimensional blocks whose degree components are promoted to full
  /// components (the enlarged operator algebra).
  std::vector<std::size_t> weak_blocks;
  std::size_t cap = kClosureAmbientCap;
};

/// Least subspace of k[layout]_d containing the seeds and closed under the
/// configured operators. When no promotion is requested and every seed is
/// homogeneous for row sums and copy degrees, the span is computed piece by
/// piece over those weights; the operators map pieces to pieces.
template <class Field>
class PolarizationClosure {
 public:
  using value_type = typename Field::value_type;

  PolarizationClosure(Field field, LayoutPtr layout, std::uint32_t d, const std::vector<Polynomial<Field>>& seeds,
                      ClosureOptions options = {})
      : field_(std::move(field)), layout_(std::move(layout)), degree_(d), options_(std::move(options)) {
    for (auto b : options_.operator_blocks) {
      if (b >= layout_->blocks().size()) fail(ErrorKind::invalid_argument, "operator block out of range");
    }
    for (auto b : options_.weak_blocks) {
      if (b >= layout_->blocks().size()) fail(ErrorKind::invalid_argument, "weak block out of range");
      if (layout_->block(b).base_dim != 1) fail(ErrorKind::invalid_argument, "promotion needs a one-dimensional block");
    }
    std::vector<Polynomial<Field>> embedded;
    embedded.reserve(seeds.size());
    for (const auto& s : seeds) {
      auto e = s.layout() == layout_ || *s.layout() == *layout_ ? s.relabeled(layout_) : embed(s, layout_);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != static_cast<int>(d)) {
        fail(ErrorKind::non_homogeneous, "closure seed is not homogeneous of degree " + std::to_string(d));
      }
      embedded.push_back(std::move(e));
    }
    multigraded_ = options_.weak_blocks.empty();
    for (const auto& s : embedded) {
      if (!multigraded_) break;
      auto k = key(s.terms().front().first);
      for (const auto& [m, c] : s.terms()) {
        if (key(m) != k) {
          multigraded_ = false;
          break;
        }
      }
    }
    build_pieces();
    std::deque<Pending> queue;
    for (const auto& s : embedded) {
      auto [piece, v] = to_piece_vector(s);
      if (pieces_[piece].span.insert(v)) queue.push_back({piece, std::move(v), 0});
    }
    report_.start_dim = dim();
    run(queue);
    report_.final_dim = dim();
    report_.ambient_dim = ambient_dim();
    report_.equals_full = report_.final_dim == report_.ambient_dim;
    report_.pieces = pieces_.size();
    report_.multigraded = multigraded_;
  }

  const SpanClosureReport& report() const noexcept { return report_; }
  const LayoutPtr& layout() const noexcept { return layout_; }
  std::uint32_t degree() const noexcept { return degree_; }

  std::size_t dim() const {
    std::size_t r = 0;
    for (const auto& p : pieces_) r += p.span.rank();
    return r;
  }
  std::size_t ambient_dim() const {
    std::size_t r = 0;
    for (const auto& p : pieces_) r += p.monomials.size();
    return r;
  }

  bool contains(const Monomial& m) const {
    auto it = where_.find(m);
    if (it == where_.end()) return false;
    const Piece& p = pieces_[it->second.first];
    if (p.span.is_full()) return true;
    std::vector<value_type> v(p.monomials.size(), field_.zero());
    v[it->second.second] = field_.one();
    return p.span.contains(std::move(v));
  }

  bool contains(const Polynomial<Field>& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous() || f.degree() != static_cast<int>(degree_)) return false;
    auto g = f.relabeled(layout_);
    // split by piece; pieces are independent summands of the ambient space
    std::map<std::size_t, std::vector<value_type>> parts;
    for (const auto& [m, c] : g.terms()) {
      auto [piece, idx] = where_.at(m);
      auto& v = parts[piece];
      if (v.empty()) v.assign(pieces_[piece].monomials.size(), field_.zero());
      v[idx] = c;
    }
    for (auto& [piece, v] : parts) {
      if (!pieces_[piece].span.contains(std::move(v))) return false;
    }
    return true;
  }

  /// First monomial in basis order outside the span.
  std::optional<Monomial> first_missing() const {
    if (report_.equals_full) return std::nullopt;
    for (const auto& m : monomials_of_degree(layout_->num_vars(), degree_, options_.cap)) {
      if (!contains(m)) return m;
    }
    return std::nullopt;
  }

  /// Basis of the span as polynomials, piece by piece.
  std::vector<Polynomial<Field>> polynomials() const {
    std::vector<Polynomial<Field>> out;
    for (const auto& p : pieces_) {
      auto b = p.span.basis();
      for (std::size_t r = 0; r < b.rank(); ++r) out.push_back(piece_polynomial(p, b.row(r)));
    }
    return out;
  }

  /// Canonical basis in the graded component (general layouts only).
  SubspaceBasis<Field> basis() const {
    auto mb = monomial_basis(layout_->num_vars(), degree_, options_.cap);
    DenseMatrix<Field> rows(field_, 0, mb->size());
    for (const auto& f : polynomials()) rows.append_row(component_to_vector(f, *mb));
    return rref(std::move(rows));
  }

  /// One more pass of every operator leaves the span unchanged.
  bool verify_closed() const {
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      auto b = pieces_[k].span.basis();
      for (std::size_t r = 0; r < b.rank(); ++r) {
        std::vector<value_type> v(b.row(r).begin(), b.row(r).end());
        bool closed = true;
        for_each_image(k, v, [&](std::size_t piece, std::vector<value_type> w) {
          if (closed && !pieces_[piece].span.contains(std::move(w))) closed = false;
        });
        if (!closed) return false;
      }
    }
    return true;
  }

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    EchelonBuilder<Field> span;
  };
  struct Pending {
    std::size_t piece;
    std::vector<value_type> vec;
    std::size_t level;
  };

  std::vector<std::uint32_t> key(const Monomial& m) const {
    if (!multigraded_) return {};
    std::vector<std::uint32_t> k;
    std::vector<bool> is_op(layout_->blocks().size(), false);
    for (auto b : options_.operator_blocks) is_op[b] = true;
    for (std::size_t b = 0; b < layout_->blocks().size(); ++b) {
      const CopyBlock& blk = layout_->block(b);
      if (is_op[b]) {
        for (std::size_t i = 0; i < blk.base_dim; ++i) {
          std::uint32_t r = 0;
          for (std::size_t j = 0; j < blk.copies; ++j) r += m[layout_->index(b, i, j)];
          k.push_back(r);
        }
        auto c = copy_degrees(m, *layout_, b);
        k.insert(k.end(), c.begin(), c.end());
      } else {
        for (std::size_t v = blk.offset; v < blk.offset + blk.size(); ++v) k.push_back(m[v]);
      }
    }
    return k;
  }

  void build_pieces() {
    auto dim = component_dimension(layout_->num_vars(), degree_, options_.cap);
    if (!dim) {
      fail(ErrorKind::dimension_overflow, "closure component of degree " + std::to_string(degree_) + " exceeds cap " +
                                              std::to_string(options_.cap));
    }
    auto all = monomials_of_degree(layout_->num_vars(), degree_, options_.cap);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    std::vector<std::vector<Monomial>> groups;
    for (auto& m : all) {
      auto k = key(m);
      auto [it, fresh] = index.emplace(std::move(k), groups.size());
      if (fresh) groups.emplace_back();
      groups[it->second].push_back(std::move(m));
    }
    where_.reserve(all.size());
    pieces_.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t i = 0; i < groups[g].size(); ++i) where_.emplace(groups[g][i], std::make_pair(g, i));
      const std::size_t n = groups[g].size();
      pieces_.push_back({std::move(groups[g]), EchelonBuilder<Field>(field_, n)});
    }
  }

  std::pair<std::size_t, std::vector<value_type>> to_piece_vector(const Polynomial<Field>& f) const {
    std::optional<std::size_t> piece;
    std::vector<value_type> v;
    for (const auto& [m, c] : f.terms()) {
      auto [p, idx] = where_.at(m);
      if (!piece) {
        piece = p;
        v.assign(pieces_[p].monomials.size(), field_.zero());
      } else if (*piece != p) {
        fail(ErrorKind::invalid_argument, "polynomial spans several closure pieces");
      }
      v[idx] = c;
    }
    return {*piece, std::move(v)};
  }

  Polynomial<Field> piece_polynomial(const Piece& p, std::span<const value_type> v) const {
    std::vector<typename Polynomial<Field>::Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!field_.is_zero(v[i])) terms.emplace_back(p.monomials[i], v[i]);
    }
    return Polynomial<Field>::from_terms(field_, layout_, std::move(terms));
  }

  /// Accumulates terms of one operator image; all terms must share a piece.
  class Image {
   public:
    Image(const PolarizationClosure& owner) : owner_(owner) {}
    void add(const Monomial& m, const value_type& c) {
      if (owner_.field_.is_zero(c)) return;
      auto [p, idx] = owner_.where_.at(m);
      if (!piece_) {
        piece_ = p;
        vec_.assign(owner_.pieces_[p].monomials.size(), owner_.field_.zero());
      } else if (*piece_ != p) {
        fail(ErrorKind::invalid_argument, "operator image leaves its closure piece");
      }
      vec_[idx] = owner_.field_.add(vec_[idx], c);
    }
    template <class Sink>
    void emit(Sink& sink) {
      if (piece_) sink(*piece_, std::move(vec_));
      piece_.reset();
      vec_.clear();
    }

   private:
    const PolarizationClosure& owner_;
    std::optional<std::size_t> piece_;
    std::vector<value_type> vec_;
  };

  /// Calls sink(piece, vector) for every operator image of v, in the fixed
  /// order: P_{jj'} lexicographic, then transpositions (j j+1), then promotion.
  template <class Sink>
  void for_each_image(std::size_t k, const std::vector<value_type>& v, Sink&& sink) const {
    const Piece& src = pieces_[k];
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!field_.is_zero(v[i])) support.push_back(i);
    }
    Image img(*this);
    for (auto b : options_.operator_blocks) {
      const CopyBlock& blk = layout_->block(b);
      for (std::size_t j = 0; j < blk.copies; ++j) {
        for (std::size_t jp = 0; jp < blk.copies; ++jp) {
          if (j == jp && multigraded_) continue;
          for (auto i : support) {
            const Monomial& m = src.monomials[i];
            for (std::size_t c = 0; c < blk.base_dim; ++c) {
              const std::size_t from = layout_->index(b, c, jp);
              if (m[from] == 0) continue;
              Monomial t = m.without_one(from);
              t *= Monomial::variable(m.num_vars(), layout_->index(b, c, j));
              img.add(t, field_.mul(v[i], field_.from_int(m[from])));
            }
          }
          img.emit(sink);
        }
      }
      for (std::size_t j = 0; j + 1 < blk.copies; ++j) {
        auto perm = transposition(blk.copies, j, j + 1);
        for (auto i : support) img.add(permute_copies(src.monomials[i], *layout_, b, perm), v[i]);
        img.emit(sink);
      }
    }
    for (auto b : options_.weak_blocks) promote(src, v, support, b, sink);
  }

  /// For f = sum_mu mu * f_mu over block monomials mu, emits w * f_mu for every
  /// block monomial w of the same degree as mu.
  template <class Sink>
  void promote(const Piece& src, const std::vector<value_type>& v, const std::vector<std::size_t>& support,
               std::size_t b, Sink& sink) const {
    const CopyBlock& blk = layout_->block(b);
    const std::size_t n = layout_->num_vars();
    std::map<std::vector<Monomial::exponent_type>, std::vector<std::pair<Monomial, value_type>>> parts;
    for (auto i : support) {
      const Monomial& m = src.monomials[i];
      std::vector<Monomial::exponent_type> mu(m.exponents().begin() + blk.offset,
                                              m.exponents().begin() + blk.offset + blk.size());
      auto rest = m.exponents();
      for (std::size_t t = 0; t < blk.size(); ++t) rest[blk.offset + t] = 0;
      parts[mu].emplace_back(Monomial(std::move(rest)), v[i]);
    }
    Image img(*this);
    for (const auto& [mu, terms] : parts) {
      std::uint32_t e = 0;
      for (auto x : mu) e += x;
      for (const auto& w : monomials_of_degree(blk.size(), e, options_.cap)) {
        std::vector<Monomial::exponent_type> lift(n, 0);
        for (std::size_t t = 0; t < blk.size(); ++t) lift[blk.offset + t] = w[t];
        Monomial wm(std::move(lift));
        for (const auto& [rest, c] : terms) img.add(rest * wm, c);
        img.emit(sink);
      }
    }
  }

  void run(std::deque<Pending>& queue) {
    std::size_t levels = queue.empty() ? 0 : 1;
    while (!queue.empty()) {
      Pending cur = std::move(queue.front());
      queue.pop_front();
      levels = std::max(levels, cur.level + 1);
      for_each_image(cur.piece, cur.vec, [&](std::size_t piece, std::vector<value_type> w) {
        auto& target = pieces_[piece].span;
        if (target.is_full()) return;
        if (target.insert(w)) queue.push_back({piece, std::move(w), cur.level + 1});
      });
    }
    report_.iterations = levels;
  }

  Field field_;
  LayoutPtr layout_;
  std::uint32_t degree_;
  ClosureOptions options_;
  bool multigraded_ = false;
  std::vector<Piece> pieces_;
  std::unordered_map<Monomial, std::pair<std::size_t, std::size_t>, MonomialHash> where_;
  SpanClosureReport report_;
};

/// Closure on a single block V^n of an l-dimensional V.
template <class Field>
PolarizationClosure<Field> polarization_closure(const Field& field, const std::vector<Polynomial<Field>>& seeds,
                                                std::size_t base_dim, std::size_t n, std::uint32_t d,
                                                std::vector<std::size_t> weak_blocks = {},
                                                std::size_t cap = kClosureAmbientCap) {
  auto layout = make_layout(VariableLayout::copies_of(base_dim, n));
  ClosureOptions opts;
  opts.weak_blocks = std::move(weak_blocks);
  opts.cap = cap;
  return PolarizationClosure<Field>(field, layout, d, seeds, opts);
}

/// All degree-d monomials of V^n supported on the copies in [first, first + count).
inline std::vector<Monomial> monomials_on_copies(const VariableLayout& layout, std::uint32_t d, std::size_t first,
                                                 std::size_t count, std::size_t cap = kClosureAmbientCap) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(layout.num_vars(), d, cap)) {
    auto deg = copy_degrees(m, layout);
    bool inside = true;
    for (std::size_t j = 0; j < deg.size() && inside; ++j) {
      if (deg[j] != 0 && (j < first || j >= first + count)) inside = false;
    }
    if (inside) out.push_back(std::move(m));
  }
  return out;
}

inline std::string weyl_instance_name(std::size_t l, std::uint32_t p, std::size_t m, std::size_t n, std::uint32_t d) {
  return "l=" + std::to_string(l) + ",p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",n=" +
         std::to_string(n) + ",d=" + std::to_string(d);
}

/// Closure of k[V^m]_d inside k[V^n]_d; asserted to be full when d <= (p-1)m,
/// recorded otherwise.
Verdict weyl_theorem_check(std::size_t l, std::uint32_t p, std::size_t m, std::size_t n, std::uint32_t d,
                           std::size_t cap = kClosureAmbientCap);

/// x[1,0] * prod_{j=1..l} x[1,j]^(p-1) on l+1 copies.
Monomial sharpness_witness(std::size_t l, std::uint32_t p);

/// The witness lies outside the closure of all degree-(1+(p-1)l) monomials on l copies.
Verdict sharpness_check(std::size_t l, std::uint32_t p, std::size_t cap = kClosureAmbientCap);

}  // namespace invtheory
