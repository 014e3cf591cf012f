#include <doctest.h>

#include <random>

#include "invtheory/invariants/ledger.hpp"

using namespace invtheory;
using M = DenseMatrix<PrimeField>;

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
Representation<PrimeField> trivial2() { return rep_of(5, {{{1, 0}, {0, 1}}}); }

Polynomial<PrimeField> var(const Representation<PrimeField>& rep, std::size_t v) {
  return Polynomial<PrimeField>::variable(rep.field(), rep.layout(), v);
}

}  // namespace

TEST_CASE("reynolds examples") {
  auto t = trivial2();
  auto f = var(t, 0) * var(t, 1) + var(t, 0);
  CHECK(reynolds(f, t) == f);
  auto s = swap_gf5();
  auto r = reynolds(var(s, 0), s);
  CHECK(r == var(s, 0).scaled(3) + var(s, 1).scaled(3));
  auto z = z3_gf7();
  CHECK(reynolds(var(z, 0), z).is_zero());
  CHECK(reynolds(var(z, 0).pow(3), z) == var(z, 0).pow(3));
  auto modular = rep_of(2, {{{0, 1}, {1, 0}}});
  CHECK_THROWS_AS(reynolds(var(modular, 0), modular), Error);
}

TEST_CASE("reynolds is a projection onto invariants") {
  std::mt19937 rng(12);
  auto rep = klein4_gf5();
  for (int t = 0; t < 20; ++t) {
    std::vector<Polynomial<PrimeField>::Term> terms;
    for (int k = 0; k < 4; ++k) {
      std::vector<std::uint32_t> e{static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 4)};
      terms.emplace_back(Monomial::from_exponents(e), rng() % 5);
    }
    auto f = Polynomial<PrimeField>::from_terms(rep.field(), rep.layout(), terms);
    auto r = reynolds(f, rep);
    CHECK(reynolds(r, rep) == r);
    CHECK(is_invariant(rep, r));
  }
}

TEST_CASE("invariant_basis examples") {
  auto t = trivial2();
  for (std::uint32_t d = 0; d <= 4; ++d) CHECK(invariant_basis(t, d).dim() == d + 1);
  auto z = z3_gf7();
  CHECK(invariant_basis(z, 1).dim() == 0);
  CHECK(invariant_basis(z, 2).dim() == 0);
  CHECK(invariant_basis(z, 3).dim() == 1);
  auto s = swap_gf5();
  auto c = invariant_basis(s, 2);
  REQUIRE(c.dim() == 2);
  // canonical rows in the basis {x^2, xy, y^2}: x^2 + y^2 and xy
  CHECK(c.basis.row(0)[0] == 1);
  CHECK(c.basis.row(0)[1] == 0);
  CHECK(c.basis.row(0)[2] == 1);
  CHECK(c.basis.row(1)[1] == 1);
}

TEST_CASE("kernel and reynolds methods agree") {
  for (const auto& rep : {z3_gf7(), swap_gf5(), klein4_gf5(), rep_of(7, {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}})}) {
    GradedAction<PrimeField> action(rep);
    for (std::uint32_t d = 0; d <= 6; ++d) {
      auto a = invariant_basis(action, d, InvariantMethod::reynolds);
      auto b = invariant_basis(action, d, InvariantMethod::kernel);
      CHECK(a.basis == b.basis);
      CHECK(verify_invariant_component(action, b));
      CHECK(invariant_dim_by_trace(action, d) == rep.field().from_int(static_cast<std::int64_t>(b.dim())));
    }
  }
}

TEST_CASE("invariant_dim_by_trace examples") {
  auto t = trivial2();
  CHECK(invariant_dim_by_trace(t, 2) == 3);
  auto z = z3_gf7();
  CHECK(invariant_dim_by_trace(z, 3) == 1);
  CHECK(invariant_dim_by_trace(z, 2) == 0);
}

TEST_CASE("minimal generators") {
  auto t = trivial2();
  auto lt = minimal_generators_up_to(t, 2);
  CHECK(lt.beta() == 1);
  CHECK(lt.count(1) == 2);
  CHECK(lt.count(2) == 0);
  CHECK(lt.complete);

  auto z = z3_gf7();
  auto lz = minimal_generators_up_to(z, 3);
  CHECK(lz.beta() == 3);
  REQUIRE(lz.count(3) == 1);
  CHECK(lz.generators.at(3)[0] == var(z, 0).pow(3));

  auto k = klein4_gf5();
  auto lk = minimal_generators_up_to(k, 4);
  CHECK(lk.beta() == 2);
  CHECK(lk.count(2) == 2);
  CHECK(lk.count(4) == 0);
  CHECK(lk.complete);

  auto s = swap_gf5();
  auto [b, ls] = beta(s);
  CHECK(b == 2);
  CHECK(ls.count(1) == 1);
  CHECK(ls.count(2) == 1);
  CHECK(beta(z).first == 3);
  CHECK(beta(t).first == 1);

  auto modular = rep_of(2, {{{0, 1}, {1, 0}}});
  CHECK_THROWS_AS(beta(modular), Error);
  auto lm = minimal_generators_up_to(modular, 3);
  CHECK(lm.modular);
  CHECK_FALSE(lm.complete);
  CHECK_THROWS_AS(minimal_generators_up_to(modular, 3, InvariantMethod::reynolds), Error);
}

TEST_CASE("ledger regenerates the invariant ring") {
  for (const auto& rep : {z3_gf7(), swap_gf5(), klein4_gf5(), rep_of(13, {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}})}) {
    GradedAction<PrimeField> action(rep);
    auto ledger = minimal_generators_up_to(action, 6);
    for (const auto& gen : ledger.all_generators()) {
      for (std::size_t a = 0; a < rep.group()->order(); ++a) CHECK(act(rep, a, gen) == gen);
    }
    CHECK(generates_invariants(action, ledger.all_coords(), 6));
    CHECK(ledger.beta() <= rep.group()->order());
  }
}

TEST_CASE("ledger JSON") {
  auto lz = minimal_generators_up_to(z3_gf7(), 3);
  auto j = ledger_to_json(lz);
  CHECK(j["beta"] == 3);
  CHECK(j["complete"] == true);
  CHECK(j["generators"]["3"][0] == "x[1,0]^3");
}

TEST_CASE("rationals") {
  Rationals q;
  auto g = generate_group(q, {DenseMatrix<Rationals>::from_integers(q, {{0, -1}, {1, 0}})}, 2);
  auto rep = Representation<Rationals>::defining(g);
  auto [b, ledger] = beta(rep);
  CHECK(b == 4);
  GradedAction<Rationals> action(rep);
  for (std::uint32_t d = 0; d <= 6; ++d) {
    CHECK(invariant_basis(action, d, InvariantMethod::reynolds).basis == invariant_basis(action, d).basis);
  }
}
