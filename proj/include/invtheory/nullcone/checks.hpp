#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <vector>

#include "invtheory/nullcone/hilbert_ideal.hpp"

namespace invtheory {

/// η_G(m) <= [G:H] η_H(m).
template <class Field>
Verdict check_index_inequality(const Representation<Field>& rep, const SubgroupHandle<Field>& h,
                               const std::string& instance = "") {
  const Field& field = rep.field();
  if (!field.is_unit_integer(static_cast<std::int64_t>(h.index()))) {
    fail(ErrorKind::modular_group_order, "[G:H] is not invertible in the field");
  }
  auto eg = eta(rep);
  auto eh = eta(restricted_to(rep, h));
  Verdict v;
  v.theorem = "thm2.1";
  v.instance = instance;
  v.lhs = eg.eta;
  v.rhs = h.index() * eh.eta;
  v.holds = eg.eta <= h.index() * eh.eta;
  v.details = {{"eta_G", eg.eta}, {"eta_H", eh.eta}, {"index", h.index()}, {"H_order", h.order()},
               {"H_members", h.members}};
  return v;
}

/// Outcome of the Φ-expansion check for one tuple (a_v).
struct PhiCheck {
  bool phi_zero = false;
  bool expansion_matches = false;
  bool subsets_in_ideal = false;
  bool product_in_ideal = false;
  bool all() const { return phi_zero && expansion_matches && subsets_in_ideal && product_in_ideal; }
};

inline constexpr std::size_t kPhiIndexLimit = 8;

/// Φ = sum_u prod_v (v a_v - u a_v) for H-invariant samples a_v, one per left
/// coset; u and v run over the transversal. Checks Φ = 0, Φ = sum_S (-1)^|S| Φ_S,
/// Φ_S in <m^G> for S nonempty, and prod_v v(a_v) in <m^G>.
template <class Field>
PhiCheck phi_identity(const Representation<Field>& rep, const SubgroupHandle<Field>& h,
                      const std::vector<Polynomial<Field>>& samples, HilbertIdeal<Field>& ideal) {
  const Field& field = rep.field();
  const std::size_t d = h.index();
  if (d > kPhiIndexLimit) fail(ErrorKind::invalid_argument, "Φ expansion is limited to [G:H] <= 8");
  if (samples.size() != d) fail(ErrorKind::dimension_mismatch, "one sample per coset");
  if (!field.is_unit_integer(static_cast<std::int64_t>(d))) {
    fail(ErrorKind::modular_group_order, "[G:H] is not invertible in the field");
  }
  for (const auto& a : samples) {
    if (!a.is_zero() && a.min_degree() < 1) fail(ErrorKind::non_homogeneous, "samples must lie in m");
    for (auto m : h.members) {
      if (!(act(rep, m, a) == a)) fail(ErrorKind::non_invariant, "sample is not H-invariant: " + render(a));
    }
  }
  const auto& layout = rep.layout();
  const auto one = Polynomial<Field>::constant(field, layout, field.one());
  // ua[u][v] = u . a_v; the diagonal u = v gives v . a_v
  std::vector<std::vector<Polynomial<Field>>> ua(d);
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) ua[u].push_back(act(rep, h.transversal[u], samples[v]));
  }

  PhiCheck out;
  Polynomial<Field> phi(field, layout);
  for (std::size_t u = 0; u < d; ++u) {
    Polynomial<Field> prod = one;
    for (std::size_t v = 0; v < d; ++v) prod = prod * (ua[v][v] - ua[u][v]);
    phi += prod;
  }
  out.phi_zero = phi.is_zero();

  Polynomial<Field> expansion(field, layout);
  out.subsets_in_ideal = true;
  for (std::size_t s = 0; s < (std::size_t{1} << d); ++s) {
    Polynomial<Field> phi_s(field, layout);
    for (std::size_t u = 0; u < d; ++u) {
      Polynomial<Field> prod = one;
      for (std::size_t v = 0; v < d; ++v) prod = prod * ((s >> v) & 1 ? ua[u][v] : ua[v][v]);
      phi_s += prod;
    }
    bool odd = std::popcount(s) % 2 == 1;
    expansion = odd ? expansion - phi_s : expansion + phi_s;
    if (s != 0 && !ideal.contains(phi_s)) out.subsets_in_ideal = false;
  }
  out.expansion_matches = expansion == phi;

  Polynomial<Field> product = one;
  for (std::size_t v = 0; v < d; ++v) product = product * ua[v][v];
  out.product_in_ideal = ideal.contains(product);
  return out;
}

/// Ideal of G-invariants, generated by the minimal generators up to max_degree
/// (kernel method, valid in every characteristic).
template <class Field>
HilbertIdeal<Field> invariant_ideal(const Representation<Field>& rep, std::uint32_t max_degree) {
  auto ledger = minimal_generators_up_to(rep, std::max<std::uint32_t>(1, max_degree));
  return HilbertIdeal<Field>(rep.field(), rep.num_vars(), ledger.all_coords());
}

/// All tuples (a_v) drawn from a basis of H-invariants of degree 1..max_degree.
template <class Field>
std::vector<std::vector<Polynomial<Field>>> exhaustive_phi_samples(const Representation<Field>& rep,
                                                                   const SubgroupHandle<Field>& h,
                                                                   std::uint32_t max_degree = 2) {
  auto sub = restricted_to(rep, h);
  GradedAction<Field> action(sub);
  std::vector<Polynomial<Field>> pool;
  for (std::uint32_t e = 1; e <= max_degree; ++e) {
    auto c = invariant_basis(action, e);
    auto polys = basis_polynomials(c.basis, rep.layout(), *monomial_basis(rep.num_vars(), e));
    pool.insert(pool.end(), polys.begin(), polys.end());
  }
  std::vector<std::vector<Polynomial<Field>>> out;
  if (pool.empty()) return out;
  std::vector<std::size_t> idx(h.index(), 0);
  while (true) {
    std::vector<Polynomial<Field>> tuple;
    for (auto i : idx) tuple.push_back(pool[i]);
    out.push_back(std::move(tuple));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == pool.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

template <class Field>
Verdict check_phi_identity(const Representation<Field>& rep, const SubgroupHandle<Field>& h,
                           const std::vector<std::vector<Polynomial<Field>>>& sample_sets,
                           const std::string& instance = "") {
  int max_deg = 1;
  for (const auto& set : sample_sets) {
    int total = 0;
    for (const auto& a : set) total += std::max(0, a.degree());
    max_deg = std::max(max_deg, total);
  }
  auto ideal = invariant_ideal(rep, static_cast<std::uint32_t>(max_deg));
  std::size_t ok = 0, zero = 0, expansion = 0, subsets = 0, product = 0;
  for (const auto& set : sample_sets) {
    auto r = phi_identity(rep, h, set, ideal);
    zero += r.phi_zero;
    expansion += r.expansion_matches;
    subsets += r.subsets_in_ideal;
    product += r.product_in_ideal;
    ok += r.all();
  }
  Verdict v;
  v.theorem = "eq2.6";
  v.instance = instance;
  v.lhs = ok;
  v.rhs = sample_sets.size();
  v.holds = ok == sample_sets.size();
  v.details = {{"index", h.index()},
               {"H_members", h.members},
               {"samples", sample_sets.size()},
               {"phi_zero", zero},
               {"expansion_matches", expansion},
               {"subsets_in_ideal", subsets},
               {"product_in_ideal", product}};
  return v;
}

/// β(k[V]^G) <= η_G(m).
template <class Field>
Verdict check_beta_le_eta(const Representation<Field>& rep, const std::string& instance = "") {
  auto [b, ledger] = beta(rep);
  HilbertIdeal<Field> ideal(rep.field(), rep.num_vars(), ledger.all_coords());
  auto e = eta_from_ideal(ideal, static_cast<std::uint32_t>(rep.group()->order()), GeneratorSource::computed);
  Verdict v;
  v.theorem = "lem3.1";
  v.instance = instance;
  v.lhs = b;
  v.rhs = e.eta;
  v.holds = b <= e.eta;
  return v;
}

/// η_G(m) <= β(A(G)^G).
template <class Field>
Verdict check_eta_le_beta_AG(const Representation<Field>& rep, const std::string& instance = "") {
  require_invertible_order(*rep.group());
  auto e = eta(rep);
  auto ag = adjoin_group_variables(rep);
  auto [b, ledger] = beta(ag);
  Verdict v;
  v.theorem = "lem3.2";
  v.instance = instance;
  v.lhs = e.eta;
  v.rhs = b;
  v.holds = e.eta <= b;
  v.details = {{"A(G)_vars", ag.num_vars()}, {"A(G)_generator_counts", ledger_to_json(ledger)["generator_counts"]}};
  return v;
}

/// Z/2 over GF(2) swapping x_i and y_i on k^{2n}; x_i is variable i and y_i
/// is variable n + i.
inline Representation<PrimeField> char2_swap_representation(std::size_t n) {
  PrimeField f(2);
  DenseMatrix<PrimeField> sigma(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma(i, n + i) = 1;
    sigma(n + i, i) = 1;
  }
  return Representation<PrimeField>::defining(generate_group(f, {sigma}, 2 * n));
}

/// x_i y_i for all i, and x^α + y^α for 1 <= |α| <= max_degree.
inline std::vector<Polynomial<PrimeField>> char2_explicit_generators(const Representation<PrimeField>& rep,
                                                                  std::uint32_t max_degree) {
  const std::size_t n = rep.num_vars() / 2;
  const auto& f = rep.field();
  const auto& layout = rep.layout();
  std::vector<Polynomial<PrimeField>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial<PrimeField>::variable(f, layout, i) * Polynomial<PrimeField>::variable(f, layout, n + i));
  }
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    for (const auto& alpha : monomials_of_degree(n, d)) {
      std::vector<std::uint32_t> ex(2 * n, 0), ey(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        ex[i] = alpha[i];
        ey[n + i] = alpha[i];
      }
      gens.push_back(Polynomial<PrimeField>::monomial(f, layout, Monomial::from_exponents(ex)) +
                     Polynomial<PrimeField>::monomial(f, layout, Monomial::from_exponents(ey)));
    }
  }
  return gens;
}

struct Char2Report {
  std::size_t n = 0;
  std::uint32_t cap = 0;
  EtaReport eta;
  /// Degrees where the supplied generators and the computed invariants
  /// (kernel method) give the same ideal component.
  std::map<std::uint32_t, bool> ideal_agrees;
  bool agrees() const {
    return std::all_of(ideal_agrees.begin(), ideal_agrees.end(), [](const auto& e) { return e.second; });
  }
};

/// η for the swap example from the explicit generator set, cross-checked
/// against the ideal of all invariants of degree <= cap.
inline Char2Report char2_example(std::size_t n, std::uint32_t cap) {
  auto rep = char2_swap_representation(n);
  Char2Report r;
  r.n = n;
  r.cap = cap;
  r.eta = eta(rep, char2_explicit_generators(rep, cap), cap);
  HilbertIdeal<PrimeField> supplied(rep.field(), rep.num_vars(), invariant_generators(rep, char2_explicit_generators(rep, cap)));
  auto computed = invariant_ideal(rep, cap);
  for (std::uint32_t d = 1; d <= cap; ++d) r.ideal_agrees[d] = supplied.component(d) == computed.component(d);
  return r;
}

}  // namespace invtheory
