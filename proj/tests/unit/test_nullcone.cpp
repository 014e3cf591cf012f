#include <doctest.h>

#include <random>

#include "invtheory/nullcone/checks.hpp"

using namespace invtheory;
using M = DenseMatrix<PrimeField>;
using P = Polynomial<PrimeField>;

namespace {

Representation<PrimeField> rep_of(std::uint32_t p, const std::vector<IntMatrix>& gens) {
  PrimeField f(p);
  std::vector<M> mats;
  for (const auto& g : gens) mats.push_back(M::from_integers(f, g));
  return Representation<PrimeField>::defining(generate_group(f, mats, gens.front().size()));
}

Representation<PrimeField> z3_gf7() { return rep_of(7, {{{2}}}); }
Representation<PrimeField> swap_gf5() { return rep_of(5, {{{0, 1}, {1, 0}}}); }
Representation<PrimeField> klein4_gf5() { return rep_of(5, {{{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}}); }
Representation<PrimeField> sign_gf5() { return rep_of(5, {{{-1}}}); }
Representation<PrimeField> trivial(std::size_t n) {
  IntMatrix id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return rep_of(5, {id});
}
Representation<PrimeField> s3_gf5() { return rep_of(5, {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}}); }

P var(const Representation<PrimeField>& rep, std::size_t v) { return P::variable(rep.field(), rep.layout(), v); }

SubgroupHandle<PrimeField> subgroup_with(const Representation<PrimeField>& rep, const IntMatrix& m) {
  const auto& g = rep.group();
  auto idx = g->index_of(M::from_integers(rep.field(), m));
  return cosets(g, generated_subgroup(*g, {idx}));
}

SubgroupHandle<PrimeField> whole(const Representation<PrimeField>& rep) {
  std::vector<std::size_t> all(rep.group()->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return cosets(rep.group(), all);
}

SubgroupHandle<PrimeField> identity_subgroup(const Representation<PrimeField>& rep) { return cosets(rep.group(), {0}); }

}  // namespace

TEST_CASE("hilbert ideal component examples") {
  auto z = z3_gf7();
  auto c3 = hilbert_ideal_component(z, {var(z, 0).pow(3)}, 3);
  CHECK(c3.full);
  CHECK(c3.basis.rank() == 1);
  auto c2 = hilbert_ideal_component(z, {var(z, 0).pow(3)}, 2);
  CHECK_FALSE(c2.full);
  CHECK(c2.basis.rank() == 0);

  auto t = trivial(2);
  CHECK(hilbert_ideal_component(t, {var(t, 0), var(t, 1)}, 1).full);

  auto v = klein4_gf5();
  std::vector<P> gens{var(v, 0).pow(2), var(v, 1).pow(2)};
  auto d2 = hilbert_ideal_component(v, gens, 2);
  CHECK_FALSE(d2.full);
  CHECK(d2.basis.rank() == 2);
  CHECK_FALSE(d2.basis.contains(component_to_vector(var(v, 0) * var(v, 1), 2)));
  CHECK(hilbert_ideal_component(v, gens, 3).full);
}

TEST_CASE("hilbert ideal rejects bad generators") {
  auto z = z3_gf7();
  CHECK_THROWS_AS(hilbert_ideal_component(z, {var(z, 0)}, 2), Error);
  try {
    hilbert_ideal_component(z, {var(z, 0)}, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_invariant);
  }
  auto s = swap_gf5();
  auto mixed = var(s, 0) + var(s, 1) + var(s, 0) * var(s, 1);
  try {
    hilbert_ideal_component(s, {mixed}, 2);
    FAIL("expected non_homogeneous");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_homogeneous);
  }
}

TEST_CASE("ideal slices are closed under variable multiplication") {
  for (auto rep : {klein4_gf5(), s3_gf5(), swap_gf5()}) {
    auto [b, ledger] = beta(rep);
    HilbertIdeal<PrimeField> ideal(rep.field(), rep.num_vars(), ledger.all_coords());
    for (std::uint32_t d = 1; d < 5; ++d) {
      const auto& c = ideal.component(d);
      auto polys = basis_polynomials(c, rep.layout(), *monomial_basis(rep.num_vars(), d));
      for (const auto& f : polys) {
        for (std::size_t v = 0; v < rep.num_vars(); ++v) CHECK(ideal.contains(f * var(rep, v)));
      }
    }
  }
}

TEST_CASE("eta examples") {
  CHECK(eta(trivial(1)).eta == 1);
  CHECK(eta(trivial(3)).eta == 1);
  auto z = eta(z3_gf7());
  CHECK(z.eta == 3);
  CHECK(z.stayed_full);
  CHECK(z.per_degree.at(2) == false);
  CHECK(eta(klein4_gf5()).eta == 3);
  CHECK(eta(swap_gf5()).eta == 2);
  CHECK(eta(sign_gf5()).eta == 2);
  auto j = z.to_json();
  CHECK(j["generator_source"] == "computed-reynolds");
  CHECK_FALSE(j.contains("assumption"));
}

TEST_CASE("eta requires a cap for supplied generators and reports exhaustion") {
  auto rep = char2_swap_representation(1);
  std::vector<P> only_product{var(rep, 0) * var(rep, 1)};
  CHECK_THROWS_AS(eta(rep, only_product), Error);
  try {
    eta(rep, only_product, 4u);
    FAIL("expected cap_exhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::cap_exhausted);
  }
  try {
    eta(rep);
    FAIL("expected modular_group_order");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::modular_group_order);
  }
}

TEST_CASE("char-2 swap example gives eta = n + 1") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = char2_example(n, static_cast<std::uint32_t>(n + 2));
    CHECK(r.eta.eta == n + 1);
    CHECK(r.eta.stayed_full);
    CHECK(r.agrees());
    CHECK(r.eta.to_json().contains("assumption"));
  }
  auto r = char2_example(2, 4);
  CHECK(r.eta.eta == 3);
}

TEST_CASE("index inequality") {
  auto v = klein4_gf5();
  auto h = subgroup_with(v, {{-1, 0}, {0, 1}});
  auto verdict = check_index_inequality(v, h);
  CHECK(verdict.holds);
  CHECK(verdict.lhs == 3);
  CHECK(verdict.rhs == 4);
  CHECK(verdict.details["eta_H"] == 2);

  auto self = check_index_inequality(v, whole(v));
  CHECK(self.holds);
  CHECK(self.lhs == self.rhs);

  for (auto rep : {v, s3_gf5(), z3_gf7()}) {
    auto t = check_index_inequality(rep, identity_subgroup(rep));
    CHECK(t.holds);
    CHECK(t.rhs == rep.group()->order());
  }
  for (const auto& sub : enumerate_subgroups(s3_gf5().group())) {
    CHECK(check_index_inequality(s3_gf5(), sub).holds);
  }
}

TEST_CASE("phi identity examples") {
  auto s = swap_gf5();
  auto triv = identity_subgroup(s);
  auto ideal = invariant_ideal(s, 2);
  auto x = var(s, 0);
  auto r = phi_identity(s, triv, {x, x}, ideal);
  CHECK(r.all());
  CHECK(ideal.contains(x * var(s, 1)));

  P zero(s.field(), s.layout());
  CHECK(phi_identity(s, triv, {zero, zero}, ideal).all());

  auto v = klein4_gf5();
  auto h = subgroup_with(v, {{-1, 0}, {0, 1}});
  auto samples = exhaustive_phi_samples(v, h, 2);
  CHECK(samples.size() == 9);
  auto verdict = check_phi_identity(v, h, samples);
  CHECK(verdict.holds);
  CHECK(verdict.lhs == 9);
}

TEST_CASE("phi identity with random samples") {
  auto v = klein4_gf5();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(0, 4);
  for (const auto& h : enumerate_subgroups(v.group())) {
    if (h.index() == 1) continue;
    auto sub = restricted_to(v, h);
    std::vector<P> pool;
    for (std::uint32_t d = 1; d <= 2; ++d) {
      auto c = invariant_basis(sub, d);
      auto polys = basis_polynomials(c.basis, v.layout(), *monomial_basis(2, d));
      pool.insert(pool.end(), polys.begin(), polys.end());
    }
    std::vector<std::vector<P>> sets;
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<P> set;
      for (std::size_t k = 0; k < h.index(); ++k) {
        // one homogeneous degree per sample
        std::uint32_t d = 1 + coef(rng) % 2;
        P a(v.field(), v.layout());
        for (const auto& p : pool) {
          if (static_cast<std::uint32_t>(p.degree()) == d) a += p.scaled(coef(rng));
        }
        set.push_back(a);
      }
      sets.push_back(set);
    }
    CHECK(check_phi_identity(v, h, sets).holds);
  }
}

TEST_CASE("phi identity rejects non-invariant samples") {
  auto v = klein4_gf5();
  auto h = subgroup_with(v, {{-1, 0}, {0, 1}});
  auto ideal = invariant_ideal(v, 2);
  try {
    phi_identity(v, h, {var(v, 0), var(v, 1)}, ideal);
    FAIL("expected non_invariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_invariant);
  }
}

TEST_CASE("beta <= eta examples") {
  auto z = check_beta_le_eta(z3_gf7());
  CHECK(z.lhs == 3);
  CHECK(z.rhs == 3);
  CHECK(z.holds);
  auto v = check_beta_le_eta(klein4_gf5());
  CHECK(v.lhs == 2);
  CHECK(v.rhs == 3);
  CHECK(v.holds);
  auto t = check_beta_le_eta(trivial(1));
  CHECK(t.lhs == 1);
  CHECK(t.rhs == 1);
}

TEST_CASE("eta <= beta(A(G)) examples") {
  auto t = check_eta_le_beta_AG(trivial(1));
  CHECK(t.lhs == 1);
  CHECK(t.rhs == 1);
  auto s = check_eta_le_beta_AG(sign_gf5());
  CHECK(s.lhs == 2);
  CHECK(s.rhs == 2);
  CHECK(s.holds);
  auto z = check_eta_le_beta_AG(z3_gf7());
  CHECK(z.lhs == 3);
  CHECK(z.rhs == 3);
  CHECK(z.holds);
}

TEST_CASE("eta bounded by group order") {
  for (auto rep : {z3_gf7(), swap_gf5(), klein4_gf5(), s3_gf5(), sign_gf5()}) {
    CHECK(eta(rep).eta <= rep.group()->order());
  }
}
