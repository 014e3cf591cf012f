#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "invtheory/invariants/ledger.hpp"
#include "invtheory/weylpol/closure.hpp"

namespace invtheory {

/// Best available upper bound for beta_k(G) with |G| invertible: |G| for
/// cyclic groups, otherwise min(|G| - 1, 3|G|/4 or 5|G|/8 by parity).
struct BetaBound {
  mpq_class value;
  std::string source;
  nlohmann::json to_json() const { return {{"value", value.get_str()}, {"source", source}}; }
};

template <class Field>
BetaBound beta_k_upper_bound(const MatrixGroup<Field>& g) {
  require_invertible_order(g);
  const long n = static_cast<long>(g.order());
  if (g.is_cyclic()) return {mpq_class(n), "cyclic: |G|"};
  BetaBound b{mpq_class(n - 1), "non-cyclic: |G| - 1"};
  mpq_class dhs = n % 2 == 0 ? mpq_class(3 * n, 4) : mpq_class(5 * n, 8);
  dhs.canonicalize();
  if (dhs < b.value) b = {dhs, n % 2 == 0 ? "non-cyclic, even order: 3|G|/4" : "non-cyclic, odd order: 5|G|/8"};
  return b;
}

/// bound / (p - 1), zero in characteristic 0.
inline mpq_class polarization_threshold(const mpq_class& bound, std::uint32_t p) {
  if (p == 0) return mpq_class(0);
  mpq_class t = bound / mpq_class(static_cast<long>(p - 1));
  t.canonicalize();
  return t;
}

/// max(dim, bound / (p - 1)).
inline mpq_class multiplicity_threshold(std::size_t dim, const mpq_class& bound, std::uint32_t p) {
  mpq_class t = polarization_threshold(bound, p);
  mpq_class d(static_cast<long>(dim));
  return d > t ? d : t;
}

/// `multiplicity` copies of an irreducible of dimension `dim`;
/// forms[j * dim + i] is coordinate i of copy j as a linear form.
template <class Field>
struct IsotypicComponent {
  std::string label;
  std::size_t dim = 1;
  std::size_t multiplicity = 0;
  std::vector<std::vector<typename Field::value_type>> forms;
  /// character values per group element (one-dimensional components)
  std::vector<typename Field::value_type> character;
};

template <class Field>
struct IsotypicDecomposition {
  std::vector<IsotypicComponent<Field>> components;
  /// All irreducibles of G as (label, dim), when known.
  std::optional<std::vector<std::pair<std::string, std::size_t>>> irreducibles;

  std::size_t multiplicity(const std::string& label) const {
    for (const auto& c : components) {
      if (c.label == label) return c.multiplicity;
    }
    return 0;
  }
};

template <class Field>
std::vector<typename Field::value_type> roots_of_unity(const Field& f, std::size_t k) {
  std::vector<typename Field::value_type> out;
  if constexpr (std::is_same_v<Field, PrimeField>) {
    for (std::uint32_t a = 1; a < f.modulus(); ++a) {
      if (f.pow(a, k) == 1) out.push_back(a);
    }
  } else {
    out.push_back(f.one());
    if (k % 2 == 0) out.push_back(f.neg(f.one()));
  }
  return out;
}

namespace detail {

template <class Field>
std::vector<IsotypicComponent<Field>> split_characters(const Representation<Field>& rep) {
  const auto& g = *rep.group();
  const Field& f = rep.field();
  const std::size_t n = rep.num_vars();
  if (!g.is_abelian()) fail(ErrorKind::decomposition_unavailable, "non-abelian group: supply the isotypic blocks");
  require_invertible_order(g);
  const auto& gens = g.generators();
  std::vector<std::vector<typename Field::value_type>> candidates;
  for (auto s : gens) candidates.push_back(roots_of_unity(f, g.element_order(s)));
  std::vector<IsotypicComponent<Field>> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::size_t total = 0;
  while (true) {
    DenseMatrix<Field> stacked(f, 0, n);
    std::string label = "chi(";
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto lambda = candidates[k][pick[k]];
      auto m = rep.action(gens[k]);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = f.sub(m(i, i), lambda);
      for (std::size_t i = 0; i < n; ++i) stacked.append_row(m.row(i));
      label += (k ? "," : "") + f.to_string(lambda);
    }
    label += ")";
    auto kernel = gens.empty() ? rref(DenseMatrix<Field>::identity(f, n)) : nullspace(stacked);
    if (kernel.rank() > 0) {
      IsotypicComponent<Field> c;
      c.label = label;
      c.dim = 1;
      c.multiplicity = kernel.rank();
      for (std::size_t r = 0; r < kernel.rank(); ++r) c.forms.emplace_back(kernel.row(r).begin(), kernel.row(r).end());
      const auto& v = c.forms.front();
      std::size_t lead = 0;
      while (f.is_zero(v[lead])) ++lead;
      for (std::size_t e = 0; e < g.order(); ++e) {
        const auto& a = rep.action(e);
        auto image = f.zero();
        for (std::size_t k = 0; k < n; ++k) image = f.add(image, f.mul(a(lead, k), v[k]));
        c.character.push_back(f.div(image, v[lead]));
      }
      total += c.multiplicity;
      out.push_back(std::move(c));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  if (total != n) {
    fail(ErrorKind::decomposition_unavailable, "characters of G are not all defined over " + f.name());
  }
  return out;
}

}  // namespace detail

/// Isotypic decomposition of a representation of an abelian group whose
/// characters are defined over the base field. The irreducibles are read off
/// the regular representation.
template <class Field>
IsotypicDecomposition<Field> abelian_isotypic_decomposition(const Representation<Field>& rep) {
  IsotypicDecomposition<Field> d;
  d.components = detail::split_characters(rep);
  std::vector<std::pair<std::string, std::size_t>> irr;
  for (const auto& c : detail::split_characters(regular_representation(rep.group()))) irr.emplace_back(c.label, 1);
  d.irreducibles = std::move(irr);
  return d;
}

/// U ⊕ V in coordinates adapted to the isotypic blocks. One copies block per
/// irreducible; the copies coming from U precede those from V.
template <class Field>
struct AdaptedSum {
  Representation<Field> rep;
  std::vector<std::string> labels;
  std::vector<std::size_t> u_copies;
  std::vector<std::size_t> v_copies;
  /// images of U's variables (Ext) and of the adapted variables (Res to V)
  std::vector<Polynomial<Field>> ext_images;
  std::vector<Polynomial<Field>> res_images;
};

template <class Field>
AdaptedSum<Field> adapted_sum(const Representation<Field>& u, const Representation<Field>& v,
                              const IsotypicDecomposition<Field>& du, const IsotypicDecomposition<Field>& dv) {
  require_same_group(u, v);
  const Field& f = u.field();
  const auto& g = *u.group();
  struct Source {
    bool from_u;
    std::size_t index;  // position among that side's forms
  };
  std::vector<std::string> labels;
  std::vector<std::size_t> dims, uc, vc;
  auto slot = [&](const IsotypicComponent<Field>& c) {
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (labels[b] == c.label) {
        if (dims[b] != c.dim) fail(ErrorKind::invalid_argument, "isotypic label with two dimensions");
        return b;
      }
    }
    labels.push_back(c.label);
    dims.push_back(c.dim);
    uc.push_back(0);
    vc.push_back(0);
    return labels.size() - 1;
  };
  for (const auto& c : du.components) uc[slot(c)] += c.multiplicity;
  for (const auto& c : dv.components) vc[slot(c)] += c.multiplicity;

  VariableLayout layout;
  for (std::size_t b = 0; b < labels.size(); ++b) {
    std::string name = "y" + std::to_string(b + 1);
    layout = b == 0 ? VariableLayout::copies_of(dims[b], uc[b] + vc[b], name)
                    : layout.with_block(name, dims[b], uc[b] + vc[b]);
  }
  auto lp = make_layout(std::move(layout));
  const std::size_t nw = lp->num_vars();

  // forms in adapted-variable order, and the columns C_U, C_V
  std::vector<Source> source(nw);
  std::vector<std::vector<typename Field::value_type>> u_forms, v_forms;
  std::vector<std::size_t> u_at, v_at;
  std::vector<std::size_t> u_next(labels.size(), 0), v_next(labels.size(), 0);
  auto place = [&](const IsotypicDecomposition<Field>& d, bool from_u) {
    for (const auto& c : d.components) {
      std::size_t b = slot(c);
      for (std::size_t copy = 0; copy < c.multiplicity; ++copy) {
        const std::size_t j = from_u ? u_next[b]++ : uc[b] + v_next[b]++;
        for (std::size_t i = 0; i < c.dim; ++i) {
          const std::size_t w = lp->index(b, i, j);
          auto& forms = from_u ? u_forms : v_forms;
          auto& at = from_u ? u_at : v_at;
          source[w] = {from_u, forms.size()};
          forms.push_back(c.forms.at(copy * c.dim + i));
          at.push_back(w);
        }
      }
    }
  };
  place(du, true);
  place(dv, false);
  if (u_forms.size() != u.num_vars() || v_forms.size() != v.num_vars()) {
    fail(ErrorKind::invalid_argument, "isotypic blocks do not cover the representation");
  }
  auto columns = [&](const std::vector<std::vector<typename Field::value_type>>& forms, std::size_t n) {
    DenseMatrix<Field> c(f, n, n);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t k = 0; k < n; ++k) c(k, t) = forms[t][k];
    }
    return c;
  };
  const auto cu = columns(u_forms, u.num_vars());
  const auto cv = columns(v_forms, v.num_vars());
  const auto cu_inv = inverse(cu);
  const auto cv_inv = inverse(cv);

  std::vector<DenseMatrix<Field>> action;
  for (std::size_t e = 0; e < g.order(); ++e) {
    DenseMatrix<Field> m(f, nw, nw);
    const auto mu = cu_inv * u.action(e) * cu;
    const auto mv = cv_inv * v.action(e) * cv;
    for (std::size_t a = 0; a < u_at.size(); ++a) {
      for (std::size_t b = 0; b < u_at.size(); ++b) m(u_at[a], u_at[b]) = mu(a, b);
    }
    for (std::size_t a = 0; a < v_at.size(); ++a) {
      for (std::size_t b = 0; b < v_at.size(); ++b) m(v_at[a], v_at[b]) = mv(a, b);
    }
    // every copy of a block must carry the same matrices
    for (std::size_t x = 0; x < nw; ++x) {
      for (std::size_t y = 0; y < nw; ++y) {
        auto px = lp->position(x), py = lp->position(y);
        typename Field::value_type expected = f.zero();
        if (px.block == py.block && px.copy == py.copy) expected = m(lp->index(px.block, px.coord, 0), lp->index(py.block, py.coord, 0));
        if (!f.equal(m(x, y), expected)) fail(ErrorKind::invalid_argument, "isotypic blocks are not G-stable copies");
      }
    }
    action.push_back(std::move(m));
  }

  AdaptedSum<Field> out{Representation<Field>(u.group(), lp, std::move(action)), labels, uc, vc, {}, {}};
  // x_k = sum_t (C_U^{-1})(t, k) y_t
  for (std::size_t k = 0; k < u.num_vars(); ++k) {
    Polynomial<Field> img(f, lp);
    for (std::size_t t = 0; t < u_at.size(); ++t) {
      if (!f.is_zero(cu_inv(t, k))) img += Polynomial<Field>::term(f, lp, Monomial::variable(nw, u_at[t]), cu_inv(t, k));
    }
    out.ext_images.push_back(std::move(img));
  }
  // y_t -> its form on V; U's adapted variables -> 0
  for (std::size_t w = 0; w < nw; ++w) {
    Polynomial<Field> img(f, v.layout());
    if (!source[w].from_u) {
      const auto& form = v_forms[source[w].index];
      for (std::size_t k = 0; k < v.num_vars(); ++k) {
        if (!f.is_zero(form[k])) img += Polynomial<Field>::term(f, v.layout(), Monomial::variable(v.num_vars(), k), form[k]);
      }
    }
    out.res_images.push_back(std::move(img));
  }
  return out;
}

/// Checks that `gens` are homogeneous invariants generating k[rep]^G up to |G|.
template <class Field>
void require_generating_set(const Representation<Field>& rep, const std::vector<Polynomial<Field>>& gens) {
  std::vector<GradedElement<Field>> coords;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) fail(ErrorKind::non_homogeneous, "generator is not homogeneous");
    if (!is_invariant(rep, p)) fail(ErrorKind::non_invariant, "generator is not invariant");
    const auto d = static_cast<std::uint32_t>(p.degree());
    coords.push_back({d, component_to_vector(p, d)});
  }
  GradedAction<Field> action(rep);
  if (!generates_invariants(action, coords, static_cast<std::uint32_t>(rep.group()->order()))) {
    fail(ErrorKind::invalid_argument, "supplied set does not generate the invariants up to |G|");
  }
}

/// Spanning set, degree by degree, of the given homogeneous polynomials.
template <class Field>
std::vector<GradedElement<Field>> graded_span(const Field& f, std::size_t num_vars,
                                              const std::map<std::uint32_t, std::vector<Polynomial<Field>>>& by_degree) {
  std::vector<GradedElement<Field>> out;
  for (const auto& [d, polys] : by_degree) {
    auto basis = monomial_basis(num_vars, d);
    EchelonBuilder<Field> eb(f, basis->size());
    for (const auto& p : polys) eb.insert(component_to_vector(p, *basis));
    auto b = eb.basis();
    for (std::size_t r = 0; r < b.rank(); ++r) out.push_back({d, std::vector<typename Field::value_type>(b.row(r).begin(), b.row(r).end())});
  }
  return out;
}

template <class Field>
std::uint32_t max_degree(const std::vector<GradedElement<Field>>& gens) {
  std::uint32_t m = 0;
  for (const auto& g : gens) m = std::max(m, g.degree);
  return m;
}

template <class Field>
struct ExtendReport {
  Verdict verdict;
  bool hypothesis = false;
  std::vector<Polynomial<Field>> polarized;
};

/// Polarizes generators of k[U ⊕ V^n]^G to U ⊕ V^m (m >= n) and checks that
/// they generate k[U ⊕ V^m]^G up to |G|.
template <class Field>
ExtendReport<Field> extend_generators(const std::optional<Representation<Field>>& u, const Representation<Field>& v,
                                      std::size_t n, std::size_t m,
                                      const std::optional<std::vector<Polynomial<std::type_identity_t<Field>>>>& s = std::nullopt,
                                      const std::string& instance = "") {
  const auto& g = *v.group();
  require_invertible_order(g);
  if (n < 1 || m < n) fail(ErrorKind::invalid_argument, "extend needs m >= n >= 1");
  const Field& f = v.field();
  const auto cap = static_cast<std::uint32_t>(g.order());
  auto with_u = [&](std::size_t copies_n) {
    auto w = copies(v, copies_n);
    if (!u) return w;
    return direct_sum(w, u->with_layout(make_layout(VariableLayout::single(u->num_vars(), "u"))));
  };
  auto wn = with_u(n);
  auto wm = with_u(m);
  std::vector<Polynomial<Field>> gens;
  if (s) {
    for (const auto& p : *s) gens.push_back(p.relabeled(wn.layout()));
    require_generating_set(wn, gens);
  } else {
    gens = minimal_generators_up_to(wn, cap).all_generators();
  }
  std::map<std::uint32_t, std::vector<Polynomial<Field>>> seeds;
  for (const auto& p : gens) {
    if (!p.is_zero()) seeds[static_cast<std::uint32_t>(p.degree())].push_back(embed(p, wm.layout()));
  }
  ExtendReport<Field> out;
  std::map<std::uint32_t, std::vector<Polynomial<Field>>> closed;
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [d, ss] : seeds) {
    ClosureOptions opts;
    opts.cap = kDefaultColumnCap;
    PolarizationClosure<Field> closure(f, wm.layout(), d, ss, opts);
    closed[d] = closure.polynomials();
    dims[std::to_string(d)] = closure.dim();
    out.polarized.insert(out.polarized.end(), closed[d].begin(), closed[d].end());
  }
  auto elements = graded_span(f, wm.num_vars(), closed);
  GradedAction<Field> action(wm);
  const bool generated = generates_invariants(action, elements, cap);

  const auto bound = beta_k_upper_bound(g);
  const auto threshold = multiplicity_threshold(v.num_vars(), bound.value, f.characteristic());
  out.hypothesis = mpq_class(static_cast<long>(n)) >= threshold;
  Verdict& vd = out.verdict;
  vd.theorem = "thm6.1";
  vd.instance = instance;
  vd.lhs = max_degree(elements);
  vd.rhs = cap;
  vd.holds = generated;
  vd.asserted = out.hypothesis;
  vd.details = {{"n", n},
                {"m", m},
                {"threshold", threshold.get_str()},
                {"beta_bound", bound.to_json()},
                {"in_hypothesis", out.hypothesis},
                {"polarized_dims", dims},
                {"generators_in", gens.size()}};
  return out;
}

template <class Field>
struct UniversalReport {
  Verdict verdict;
  bool hypothesis = false;
  /// Res_V Pol Ext(S), as a graded spanning set in V's coordinates.
  std::vector<Polynomial<Field>> restricted;
};

/// Ext to U ⊕ V, close under the operators of every isotypic block (with
/// one-dimensional blocks promoted when weak), restrict to V, and check that
/// the result generates k[V]^G up to |G|.
template <class Field>
UniversalReport<Field> universal_invariants_check(const Representation<Field>& u, const Representation<Field>& v,
                                                  const std::optional<std::vector<Polynomial<std::type_identity_t<Field>>>>& s, bool weak,
                                                  const std::string& instance = "",
                                                  std::optional<IsotypicDecomposition<std::type_identity_t<Field>>> du = std::nullopt,
                                                  std::optional<IsotypicDecomposition<std::type_identity_t<Field>>> dv = std::nullopt) {
  require_same_group(u, v);
  const auto& g = *u.group();
  require_invertible_order(g);
  const Field& f = u.field();
  const auto cap = static_cast<std::uint32_t>(g.order());
  UniversalReport<Field> out;
  Verdict& vd = out.verdict;
  vd.theorem = weak ? "thm7.3" : "thm6.3";
  vd.instance = instance;
  vd.rhs = cap;
  if (!du) du = abelian_isotypic_decomposition(u);

  const auto bound = beta_k_upper_bound(g);
  nlohmann::json mult = nlohmann::json::object();
  out.hypothesis = du->irreducibles.has_value();
  if (du->irreducibles) {
    for (const auto& [label, dim] : *du->irreducibles) {
      const auto have = du->multiplicity(label);
      mult[label] = have;
      const bool ok = weak && dim == 1 ? have >= 1
                                       : mpq_class(static_cast<long>(have)) >= multiplicity_threshold(dim, bound.value, f.characteristic());
      if (!ok) out.hypothesis = false;
    }
  }
  vd.details = {{"weak", weak},
                {"beta_bound", bound.to_json()},
                {"threshold", polarization_threshold(bound.value, f.characteristic()).get_str()},
                {"multiplicities_in_U", mult},
                {"in_hypothesis", out.hypothesis}};
  vd.asserted = out.hypothesis;

  if (v.num_vars() == 0) {
    vd.lhs = 0;
    vd.holds = true;
    return out;
  }
  if (!dv) dv = abelian_isotypic_decomposition(v);

  std::vector<Polynomial<Field>> gens;
  if (s) {
    gens = *s;
    require_generating_set(u, gens);
  } else {
    gens = minimal_generators_up_to(u, cap).all_generators();
  }
  auto w = adapted_sum(u, v, *du, *dv);
  std::map<std::uint32_t, std::vector<Polynomial<Field>>> seeds;
  for (const auto& p : gens) {
    auto e = substitute(p, w.ext_images, w.rep.layout());
    if (!e.is_zero()) seeds[static_cast<std::uint32_t>(e.degree())].push_back(std::move(e));
  }
  ClosureOptions opts;
  opts.cap = kDefaultColumnCap;
  opts.operator_blocks.clear();
  for (std::size_t b = 0; b < w.labels.size(); ++b) {
    opts.operator_blocks.push_back(b);
    if (weak && w.rep.layout()->block(b).base_dim == 1) opts.weak_blocks.push_back(b);
  }
  std::map<std::uint32_t, std::vector<Polynomial<Field>>> restricted;
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [d, ss] : seeds) {
    PolarizationClosure<Field> closure(f, w.rep.layout(), d, ss, opts);
    auto& bucket = restricted[d];
    for (const auto& p : closure.polynomials()) {
      auto r = substitute(p, w.res_images, v.layout());
      if (!r.is_zero()) bucket.push_back(std::move(r));
    }
    dims[std::to_string(d)] = {{"closure", closure.dim()}, {"ambient", closure.ambient_dim()}};
  }
  auto elements = graded_span(f, v.num_vars(), restricted);
  for (const auto& e : elements) {
    out.restricted.push_back(vector_to_polynomial(f, v.layout(), *monomial_basis(v.num_vars(), e.degree), e.coords));
  }
  GradedAction<Field> action(v);
  vd.holds = generates_invariants(action, elements, cap);
  vd.lhs = max_degree(elements);
  vd.details["closure_dims"] = dims;
  vd.details["restricted_count"] = elements.size();
  return out;
}

/// max over witnesses of beta(k[W]^G) <= beta(k[U]^G).
template <class Field>
Verdict beta_equals_beta_of_universal(const Representation<Field>& u, const std::vector<Representation<Field>>& witnesses,
                                      const std::string& instance = "") {
  const auto bu = beta(u).first;
  std::uint32_t worst = 0;
  nlohmann::json per = nlohmann::json::array();
  for (const auto& w : witnesses) {
    require_same_group(u, w);
    const auto bw = beta(w).first;
    per.push_back(bw);
    worst = std::max(worst, bw);
  }
  Verdict v;
  v.theorem = "beta-universal";
  v.instance = instance;
  v.lhs = worst;
  v.rhs = bu;
  v.holds = worst <= bu;
  v.details = {{"witness_betas", per}};
  return v;
}

/// Hypotheses of the regular-representation corollaries, with exact rationals.
struct CorollaryHypotheses {
  BetaBound bound;
  std::uint32_t p = 0;
  std::optional<std::size_t> min_nonlinear_dim;
  bool regular_universal = false;        // p > beta bound
  bool regular_weakly_universal = false; // p >= bound / l + 1
  bool beta_of_regular = false;          // p >= 3|G|/8 + 1

  nlohmann::json to_json() const {
    nlohmann::json j{{"beta_bound", bound.to_json()},
                     {"p", p},
                     {"p_gt_bound", regular_universal},
                     {"p_ge_bound_over_l_plus_1", regular_weakly_universal},
                     {"p_ge_3_8_order_plus_1", beta_of_regular}};
    j["l"] = min_nonlinear_dim ? nlohmann::json(*min_nonlinear_dim) : nlohmann::json("infinity");
    return j;
  }
};

template <class Field>
CorollaryHypotheses corollary_hypotheses(const MatrixGroup<Field>& g,
                                         const std::vector<std::pair<std::string, std::size_t>>& irreducibles) {
  CorollaryHypotheses h;
  h.bound = beta_k_upper_bound(g);
  h.p = g.field().characteristic();
  for (const auto& [label, dim] : irreducibles) {
    if (dim > 1 && (!h.min_nonlinear_dim || dim < *h.min_nonlinear_dim)) h.min_nonlinear_dim = dim;
  }
  if (h.p == 0) {
    h.regular_universal = h.regular_weakly_universal = h.beta_of_regular = true;
    return h;
  }
  const mpq_class p(static_cast<long>(h.p));
  h.regular_universal = p > h.bound.value;
  mpq_class over_l = h.min_nonlinear_dim ? mpq_class(h.bound.value / mpq_class(static_cast<long>(*h.min_nonlinear_dim)))
                                         : mpq_class(0);
  h.regular_weakly_universal = p >= over_l + 1;
  mpq_class three_eighths(3 * static_cast<long>(g.order()), 8);
  three_eighths.canonicalize();
  h.beta_of_regular = p >= three_eighths + 1;
  return h;
}

/// Sums of 1..max_dim characters of G, conjugated by a fixed unitriangular
/// matrix so that they are not given in adapted coordinates.
template <class Field>
std::vector<std::pair<std::string, Representation<Field>>> character_witnesses(const GroupPtr<Field>& group,
                                                                        std::size_t max_dim = 3) {
  const Field& f = group->field();
  auto chars = detail::split_characters(regular_representation(group));
  std::vector<std::pair<std::string, Representation<Field>>> out;
  for (std::size_t k = 1; k <= max_dim; ++k) {
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      DenseMatrix<Field> t(f, k, k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) t(a, b) = f.one();
      }
      const auto t_inv = inverse(t);
      std::vector<DenseMatrix<Field>> action;
      for (std::size_t e = 0; e < group->order(); ++e) {
        DenseMatrix<Field> d(f, k, k);
        for (std::size_t a = 0; a < k; ++a) d(a, a) = chars[pick[a]].character[e];
        action.push_back(t * d * t_inv);
      }
      std::string name;
      for (std::size_t a = 0; a < k; ++a) name += (a ? "+" : "") + chars[pick[a]].label;
      out.emplace_back(name, Representation<Field>(group, make_layout(VariableLayout::single(k)), std::move(action)));
      // non-decreasing index tuples
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] + 1 == chars.size()) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t q = pos; q < k; ++q) pick[q] = pick[pos - 1];
    }
  }
  return out;
}

}  // namespace invtheory
