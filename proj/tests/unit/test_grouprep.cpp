#include <doctest.h>

#include "invtheory/grouprep/instance.hpp"
#include "invtheory/grouprep/representation.hpp"
#include "invtheory/grouprep/subgroup.hpp"

using namespace invtheory;
using M = DenseMatrix<PrimeField>;

namespace {

GroupPtr<PrimeField> group_of(std::uint32_t p, const std::vector<IntMatrix>& gens) {
  PrimeField f(p);
  std::vector<M> mats;
  for (const auto& g : gens) mats.push_back(M::from_integers(f, g));
  return generate_group(f, mats, gens.front().size());
}

GroupPtr<PrimeField> klein4() { return group_of(5, {{{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}}); }
GroupPtr<PrimeField> s3() { return group_of(7, {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}}); }

template <class Field>
void check_representation_laws(const Representation<Field>& rep) {
  const auto& g = *rep.group();
  for (std::size_t a = 0; a < g.order(); ++a) {
    CHECK((rep.action(a) * rep.action(g.inverse(a))).is_identity());
    for (std::size_t b = 0; b < g.order(); ++b) CHECK(rep.action(g.cayley(a, b)) == rep.action(a) * rep.action(b));
  }
}

}  // namespace

TEST_CASE("generate_group examples") {
  CHECK(group_of(5, {{{1, 0}, {0, 1}}})->order() == 1);
  auto s2 = group_of(5, {{{0, 1}, {1, 0}}});
  CHECK(s2->order() == 2);
  auto z3 = group_of(7, {{{2}}});
  CHECK(z3->order() == 3);
  CHECK(z3->element(0).is_identity());
  CHECK(s3()->order() == 6);
  CHECK(group_of(13, {{{5}}})->order() == 4);
  PrimeField f(5);
  CHECK_THROWS_AS(generate_group(f, {M::from_integers(f, {{1, 1}, {1, 1}})}, 2), Error);
  CHECK_THROWS_AS(generate_group(f, {M::from_integers(f, {{2}})}, 1, 3), Error);
}

TEST_CASE("cayley table matches matrix products") {
  for (const auto& g : {klein4(), s3(), group_of(13, {{{5}}})}) {
    for (std::size_t a = 0; a < g->order(); ++a) {
      for (std::size_t b = 0; b < g->order(); ++b) CHECK(g->element(g->cayley(a, b)) == g->element(a) * g->element(b));
      CHECK(g->cayley(a, g->inverse(a)) == 0);
    }
  }
}

TEST_CASE("is_cyclic") {
  CHECK(group_of(7, {{{2}}})->is_cyclic());
  CHECK_FALSE(klein4()->is_cyclic());
  CHECK(group_of(5, {{{0, 1}, {1, 0}}})->is_cyclic());
  CHECK_FALSE(s3()->is_cyclic());
  CHECK(klein4()->is_abelian());
  CHECK_FALSE(s3()->is_abelian());
}

TEST_CASE("cosets") {
  auto g = klein4();
  std::vector<std::size_t> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto whole = cosets(g, all);
  CHECK(whole.transversal == std::vector<std::size_t>{0});
  auto triv = cosets(g, {0});
  CHECK(triv.index() == 4);
  PrimeField f(5);
  auto h = cosets(g, {0, g->index_of(M::from_integers(f, {{-1, 0}, {0, 1}}))});
  CHECK(h.index() == 2);
  CHECK(h.transversal.front() == 0);
  CHECK_THROWS_AS(cosets(g, {1}), Error);

  for (const auto& grp : {klein4(), s3()}) {
    for (const auto& sub : enumerate_subgroups(grp)) {
      std::vector<int> hits(grp->order(), 0);
      for (auto u : sub.transversal)
        for (auto m : sub.members) ++hits[grp->cayley(u, m)];
      for (int hcount : hits) CHECK(hcount == 1);
      CHECK(sub.index() * sub.order() == grp->order());
    }
  }
  CHECK(enumerate_subgroups(klein4()).size() == 5);
  CHECK(enumerate_subgroups(s3()).size() == 6);
}

TEST_CASE("regular representation") {
  auto triv = group_of(5, {{{1}}});
  auto r1 = regular_representation(triv);
  CHECK(r1.num_vars() == 1);
  CHECK(r1.action(0).is_identity());
  auto s2 = group_of(5, {{{0, 1}, {1, 0}}});
  auto r2 = regular_representation(s2);
  CHECK(r2.action(1) == M::from_integers(PrimeField(5), {{0, 1}, {1, 0}}));
  auto z3 = group_of(7, {{{2}}});
  auto r3 = regular_representation(z3);
  for (std::size_t a = 0; a < 3; ++a) {
    const auto& m = r3.action(a);
    for (std::size_t i = 0; i < 3; ++i) {
      std::uint32_t row = 0, col = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        row += m(i, j);
        col += m(j, i);
      }
      CHECK(row == 1);
      CHECK(col == 1);
    }
  }
  CHECK_FALSE(r3.action(1).is_identity());
  check_representation_laws(r3);
  check_representation_laws(regular_representation(s3()));
}

TEST_CASE("adjoin_group_variables") {
  auto triv = group_of(5, {{{1}}});
  auto a1 = adjoin_group_variables(Representation<PrimeField>::defining(triv));
  CHECK(a1.num_vars() == 2);
  CHECK(a1.layout()->extra_vars() == 1);

  auto sign = group_of(5, {{{-1}}});
  auto rep = Representation<PrimeField>::defining(sign);
  auto a = adjoin_group_variables(rep);
  REQUIRE(a.num_vars() == 3);
  CHECK(a.action(1) == M::from_integers(PrimeField(5), {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  CHECK(a.action(1)(0, 0) == rep.action(1)(0, 0));
  auto m = Monomial(std::vector<std::uint16_t>{2, 1, 0});
  CHECK(bidegree(a, m) == std::pair<std::uint32_t, std::uint32_t>{2, 1});
  check_representation_laws(a);

  auto z3 = group_of(7, {{{2}}});
  auto a3 = adjoin_group_variables(Representation<PrimeField>::defining(z3));
  CHECK(a3.num_vars() == 4);
  CHECK(a3.layout()->label(1) == "xg[1]");
  check_representation_laws(a3);
}

TEST_CASE("direct sums and copies") {
  auto sign = group_of(5, {{{0, 1}, {1, 0}}});
  auto s2sign = Representation<PrimeField>::from_generator_images(
      sign, make_layout(VariableLayout::single(1)), {M::from_integers(PrimeField(5), {{-1}})});
  auto v1 = copies(s2sign, 1);
  CHECK(v1.actions() == s2sign.actions());
  auto v2 = copies(s2sign, 2);
  CHECK(v2.action(1) == M::from_integers(PrimeField(5), {{-1, 0}, {0, -1}}));
  CHECK(v2.layout()->copies() == 2);
  auto ds = direct_sum(regular_representation(sign), s2sign);
  CHECK(ds.num_vars() == 3);
  CHECK(ds.layout()->label(2) == "x[1]");
  check_representation_laws(ds);

  auto other = group_of(5, {{{-1}}});
  CHECK_THROWS_AS(direct_sum(s2sign, Representation<PrimeField>::defining(other)), Error);
  CHECK_THROWS_AS(Representation<PrimeField>::from_generator_images(sign, make_layout(VariableLayout::single(1)),
                                                                   {M::from_integers(PrimeField(5), {{2}})}),
                  Error);
}

TEST_CASE("restriction to a subgroup") {
  auto g = s3();
  auto rep = Representation<PrimeField>::defining(g);
  for (const auto& h : enumerate_subgroups(g)) {
    auto r = restricted_to(rep, h);
    CHECK(r.group()->order() == h.order());
    check_representation_laws(r);
  }
}

TEST_CASE("instance JSON") {
  auto spec = InstanceSpec::from_json(nlohmann::json::parse(
      R"({"field": {"prime": 7}, "generators": [[[2]]], "name": "z3"})"));
  CHECK(spec.dim == 1);
  CHECK(spec.field == FieldDescriptor::prime(7));
  auto g = build_group(spec, PrimeField(7));
  CHECK(g->order() == 3);
  auto q = InstanceSpec::from_json(nlohmann::json::parse(
      R"({"field": {"rationals": true}, "generators": [[[0,-1],[1,0]]]})"));
  CHECK(build_group(q, Rationals{})->order() == 4);
  CHECK(InstanceSpec::from_json(spec.to_json()).generators == spec.generators);
  CHECK_THROWS_AS(InstanceSpec::from_json(nlohmann::json::parse(R"({"field": {"prime": 8}, "generators": []})")),
                  Error);
  CHECK_THROWS_AS(InstanceSpec::from_json(nlohmann::json::parse(R"({"field": {"prime": 7}})")), Error);
}
