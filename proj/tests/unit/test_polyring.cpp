#include <doctest.h>

#include <random>

#include "invtheory/polyring/graded.hpp"
#include "invtheory/polyring/index_order.hpp"
#include "invtheory/polyring/polynomial.hpp"
#include "invtheory/polyring/text.hpp"

using namespace invtheory;

namespace {

template <class Field>
Polynomial<Field> random_poly(const Field& f, const LayoutPtr& layout, std::uint32_t max_deg, std::mt19937& rng) {
  std::vector<typename Polynomial<Field>::Term> terms;
  int count = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < count; ++t) {
    std::vector<std::uint32_t> e(layout->num_vars());
    for (auto& x : e) x = rng() % (max_deg + 1);
    terms.emplace_back(Monomial::from_exponents(e), f.from_int(static_cast<int>(rng() % 11) - 5));
  }
  return Polynomial<Field>::from_terms(f, layout, std::move(terms));
}

template <class Field>
DenseMatrix<Field> random_matrix(const Field& f, std::size_t n, std::mt19937& rng) {
  DenseMatrix<Field> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(static_cast<int>(rng() % 7) - 3);
  return m;
}

}  // namespace

TEST_CASE("layout labels and positions") {
  auto l = VariableLayout::copies_of(2, 3);
  CHECK(l.num_vars() == 6);
  CHECK(l.label(0) == "x[1,0]");
  CHECK(l.label(3) == "x[2,1]");
  auto p = l.position(5);
  CHECK(p.coord == 1);
  CHECK(p.copy == 2);
  auto u = l.with_extra(2);
  CHECK(u.num_vars() == 8);
  CHECK(u.extra_vars() == 2);
  CHECK(u.label(7) == "u[2]");
  auto clash = u.with_extra(1);
  CHECK(clash.label(8) == "u2[1]");
  CHECK(l.with_copies(0, 1).num_vars() == 2);
  CHECK(*u.find_label("u[1]") == 6);
}

TEST_CASE("monomials_of_degree") {
  auto two = monomials_of_degree(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Monomial(std::vector<std::uint16_t>{2, 0}));
  CHECK(two[1] == Monomial(std::vector<std::uint16_t>{1, 1}));
  CHECK(two[2] == Monomial(std::vector<std::uint16_t>{0, 2}));
  auto one = monomials_of_degree(1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].degree() == 5);
  CHECK(monomials_of_degree(3, 3).size() == 10);
  CHECK(monomials_of_degree(4, 0).size() == 1);
  CHECK_THROWS_AS(monomials_of_degree(40, 10), Error);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t d = 0; d <= 5; ++d) {
      auto ms = monomials_of_degree(n, d);
      CHECK(ms.size() == *component_dimension(n, d));
      for (std::size_t i = 1; i < ms.size(); ++i) CHECK(grevlex_compare(ms[i - 1], ms[i]) > 0);
    }
  }
}

TEST_CASE("apply_linear examples") {
  PrimeField f5(5);
  auto l = make_layout(VariableLayout::single(2));
  auto x = Polynomial<PrimeField>::variable(f5, l, 0);
  auto y = Polynomial<PrimeField>::variable(f5, l, 1);
  auto f = x * x + x * y;
  CHECK(apply_linear(DenseMatrix<PrimeField>::identity(f5, 2), f) == f);
  auto swap = DenseMatrix<PrimeField>::from_integers(f5, {{0, 1}, {1, 0}});
  CHECK(apply_linear(swap, f) == y * y + x * y);
  auto sing = DenseMatrix<PrimeField>::from_integers(f5, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(apply_linear(sing, f), Error);

  PrimeField f7(7);
  auto l1 = make_layout(VariableLayout::single(1));
  auto x7 = Polynomial<PrimeField>::variable(f7, l1, 0);
  auto two = DenseMatrix<PrimeField>::from_integers(f7, {{2}});
  CHECK(apply_linear(two, x7.pow(3)) == x7.pow(3));
}

TEST_CASE("apply_linear is a left action") {
  std::mt19937 rng(99);
  PrimeField f(7);
  auto l = make_layout(VariableLayout::single(3));
  int checked = 0;
  while (checked < 25) {
    auto g = random_matrix(f, 3, rng), h = random_matrix(f, 3, rng);
    if (rank(g) < 3 || rank(h) < 3) continue;
    auto p = random_poly(f, l, 2, rng);
    CHECK(apply_linear(g * h, p) == apply_linear(g, apply_linear(h, p)));
    ++checked;
  }
  Rationals q;
  auto lq = make_layout(VariableLayout::single(2));
  for (int t = 0; t < 10; ++t) {
    auto g = random_matrix(q, 2, rng), h = random_matrix(q, 2, rng);
    if (rank(g) < 2 || rank(h) < 2) continue;
    auto p = random_poly(q, lq, 3, rng);
    CHECK(apply_linear(g * h, p) == apply_linear(g, apply_linear(h, p)));
  }
}

TEST_CASE("partial derivatives") {
  PrimeField f3(3);
  auto l = make_layout(VariableLayout::single(2));
  auto x = Polynomial<PrimeField>::variable(f3, l, 0);
  auto y = Polynomial<PrimeField>::variable(f3, l, 1);
  CHECK(partial_derivative(x.pow(3), 0).is_zero());
  CHECK(partial_derivative(x * x, 1).is_zero());
  Rationals q;
  auto xq = Polynomial<Rationals>::variable(q, l, 0);
  auto yq = Polynomial<Rationals>::variable(q, l, 1);
  CHECK(partial_derivative(xq * xq * yq, 0) == (xq * yq).scaled(q.from_int(2)));

  std::mt19937 rng(3);
  PrimeField f5(5);
  auto l3 = make_layout(VariableLayout::single(3));
  for (int t = 0; t < 30; ++t) {
    auto a = random_poly(f5, l3, 3, rng), b = random_poly(f5, l3, 3, rng);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
    }
  }
  (void)y;
}

TEST_CASE("ring axioms spot-check") {
  std::mt19937 rng(17);
  PrimeField f(13);
  auto l = make_layout(VariableLayout::single(3));
  for (int t = 0; t < 30; ++t) {
    auto a = random_poly(f, l, 2, rng), b = random_poly(f, l, 2, rng), c = random_poly(f, l, 2, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("component_to_vector") {
  PrimeField f5(5);
  auto l = make_layout(VariableLayout::single(2));
  auto x = Polynomial<PrimeField>::variable(f5, l, 0);
  auto y = Polynomial<PrimeField>::variable(f5, l, 1);
  CHECK(component_to_vector(x * x + (x * y).scaled(3), 2) == std::vector<std::uint32_t>{1, 3, 0});
  CHECK(component_to_vector(Polynomial<PrimeField>(f5, l), 2) == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(component_to_vector((x + y).pow(2), 2) == std::vector<std::uint32_t>{1, 2, 1});

  std::mt19937 rng(8);
  auto basis = monomial_basis(2, 3);
  for (int t = 0; t < 20; ++t) {
    auto a = random_poly(f5, l, 3, rng).homogeneous_part(3);
    auto b = random_poly(f5, l, 3, rng).homogeneous_part(3);
    std::uint32_t al = rng() % 5, be = rng() % 5;
    auto lhs = component_to_vector(a.scaled(al) + b.scaled(be), *basis);
    auto va = component_to_vector(a, *basis), vb = component_to_vector(b, *basis);
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == f5.add(f5.mul(al, va[i]), f5.mul(be, vb[i])));
    CHECK(vector_to_polynomial(f5, l, *basis, std::span<const std::uint32_t>(va)) == a);
  }
}

TEST_CASE("index order") {
  auto l = VariableLayout::copies_of(1, 2);
  Monomial x0(std::vector<std::uint16_t>{1, 0});
  Monomial x1(std::vector<std::uint16_t>{0, 1});
  CHECK(index_compare(x0, x0, l) == 0);
  CHECK(index_compare(x1, x0, l) < 0);

  auto a = ExponentMatrix::from_rows({{1, 0}, {0, 1}});
  auto b = ExponentMatrix::from_rows({{0, 1}, {1, 0}});
  auto ia = ExponentMatrixIndex::of(a), ib = ExponentMatrixIndex::of(b);
  CHECK(ia.column_sums == ib.column_sums);
  CHECK(ia.row_sums == ib.row_sums);
  CHECK(index_compare(b, a) < 0);
  CHECK(ia.flattened() == std::vector<std::uint32_t>{1, 1, 1, 1, 1, 0, 0, 1});

  // total order on all degree-3 monomials of a 2x2 block
  auto l2 = VariableLayout::copies_of(2, 2);
  auto ms = monomials_of_degree(l2, 3);
  for (const auto& p : ms) {
    for (const auto& q : ms) {
      auto pq = index_compare(p, q, l2);
      CHECK((pq == 0) == (p == q));
      CHECK(index_compare(q, p, l2) == (0 <=> pq));
      for (const auto& r : ms) {
        if (pq < 0 && index_compare(q, r, l2) < 0) CHECK(index_compare(p, r, l2) < 0);
      }
    }
  }
  auto round = ExponentMatrix::from_monomial(ms[4], l2).to_monomial(l2);
  CHECK(round == ms[4]);
}

TEST_CASE("text round trip") {
  PrimeField f7(7);
  auto l = make_layout(VariableLayout::copies_of(2, 2).with_extra(1));
  auto p = parse_polynomial(f7, l, "3*x[1,0]^2*x[1,1] + x[2,0] - u[1] + 2");
  CHECK(p.size() == 4);
  CHECK(render(p) == "3*x[1,0]^2*x[1,1] + x[2,0] + 6*u[1] + 2");
  CHECK(parse_polynomial(f7, l, render(p)) == p);
  CHECK(render(Polynomial<PrimeField>(f7, l)) == "0");
  CHECK(parse_polynomial(f7, l, "0").is_zero());
  CHECK_THROWS_AS(parse_polynomial(f7, l, "y[1]"), Error);

  Rationals q;
  auto pq = parse_polynomial(q, l, "-1/2*x[1,0]*x[2,1] + 3/4*u[1]^3");
  CHECK(render(pq) == "3/4*u[1]^3 - 1/2*x[1,0]*x[2,1]");
  CHECK(parse_polynomial(q, l, render(pq)) == pq);

  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    auto r = random_poly(q, l, 3, rng);
    CHECK(parse_polynomial(q, l, render(r)) == r);
  }
}
