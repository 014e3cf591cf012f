#include <doctest.h>

#include <random>

#include "invtheory/exactalg/subspace.hpp"

using namespace invtheory;

namespace {

template <class Field>
DenseMatrix<Field> random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  DenseMatrix<Field> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(dist(rng));
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(2, 3) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_fraction(1, 2) == 4);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(2147483659u), Error);
}

TEST_CASE("rationals stay exact") {
  Rationals q;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int t = 0; t < 200; ++t) {
    int a = dist(rng), b = dist(rng);
    if (a == 0 || b == 0) continue;
    auto x = q.from_fraction(a, b);
    auto y = q.from_fraction(b, a);
    CHECK(q.is_one(q.mul(x, y)));
  }
  auto half = q.from_fraction(2, -4);
  CHECK(half.get_num() == -1);
  CHECK(half.get_den() == 2);
  CHECK(parse_scalar(q, "-6/4") == q.from_fraction(-3, 2));
  CHECK(parse_scalar(PrimeField(5), "3/2") == 4);
}

TEST_CASE("rref examples") {
  PrimeField f5(5);
  auto id = DenseMatrix<PrimeField>::identity(f5, 3);
  auto r = rref(id);
  CHECK(r.rank() == 3);
  CHECK(r.rows() == id);

  auto m = DenseMatrix<PrimeField>::from_integers(f5, {{1, 2}, {2, 4}});
  auto rm = rref(m);
  REQUIRE(rm.rank() == 1);
  CHECK(rm.row(0)[0] == 1);
  CHECK(rm.row(0)[1] == 2);

  Rationals q;
  DenseMatrix<Rationals> mq(q, 2, 2);
  mq(0, 0) = q.from_fraction(1, 2);
  mq(0, 1) = q.one();
  mq(1, 0) = q.one();
  mq(1, 1) = q.from_int(2);
  auto rq = rref(mq);
  REQUIRE(rq.rank() == 1);
  CHECK(rq.row(0)[0] == 1);
  CHECK(rq.row(0)[1] == 2);
}

TEST_CASE("subspace membership and equality") {
  PrimeField f7(7);
  auto b = rref(DenseMatrix<PrimeField>::from_integers(f7, {{1, 0}}));
  std::vector<std::uint32_t> zero{0, 0}, e2{0, 1};
  CHECK(subspace_contains(b, std::span<const std::uint32_t>(zero)));
  CHECK_FALSE(subspace_contains(b, std::span<const std::uint32_t>(e2)));
  std::vector<std::uint32_t> bad{1, 0, 0};
  CHECK_THROWS_AS(subspace_contains(b, std::span<const std::uint32_t>(bad)), Error);

  // span{x^2, y^2} in the basis {x^2, xy, y^2}
  PrimeField f5(5);
  auto sq = rref(DenseMatrix<PrimeField>::from_integers(f5, {{1, 0, 0}, {0, 0, 1}}));
  std::vector<std::uint32_t> xy{0, 1, 0};
  CHECK_FALSE(subspace_contains(sq, std::span<const std::uint32_t>(xy)));

  auto a = rref(DenseMatrix<PrimeField>::from_integers(f7, {{1, 0}, {0, 1}}));
  auto c = rref(DenseMatrix<PrimeField>::from_integers(f7, {{1, 1}, {1, -1}}));
  CHECK(subspace_equal(a, a));
  CHECK(subspace_equal(a, c));
  auto d = rref(DenseMatrix<PrimeField>::from_integers(f7, {{0, 1}}));
  CHECK_FALSE(subspace_equal(b, d));
  auto wide = rref(DenseMatrix<PrimeField>::from_integers(f7, {{1, 0, 0}}));
  CHECK_THROWS_AS(subspace_equal(a, wide), Error);
}

TEST_CASE("rref properties on random matrices") {
  std::mt19937 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u, 13u, 2003u, 65521u}) {
    PrimeField f(p);
    for (int t = 0; t < 40; ++t) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      auto m = random_matrix(f, r, c, rng, 0, 3);
      auto once = rref(m);
      CHECK(rref(once.rows()) == once);
      CHECK(rank(m) == rank(m.transpose()));
      for (std::size_t i = 0; i < once.rank(); ++i) CHECK(once.contains(once.row(i)));
      for (std::size_t i = 0; i < m.rows(); ++i) CHECK(once.contains(m.row(i)));
      auto ker = nullspace(m);
      CHECK(ker.rank() + once.rank() == c);
      for (std::size_t k = 0; k < ker.rank(); ++k) {
        for (std::size_t i = 0; i < r; ++i) {
          std::uint32_t s = 0;
          for (std::size_t j = 0; j < c; ++j) s = f.add(s, f.mul(m(i, j), ker.row(k)[j]));
          CHECK(s == 0);
        }
      }
    }
  }
}

TEST_CASE("echelon builder matches batch rref") {
  std::mt19937 rng(7);
  PrimeField f(3);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    auto m = random_matrix(f, r, c, rng, 0, 2);
    EchelonBuilder<PrimeField> eb(f, c);
    for (std::size_t i = 0; i < r; ++i) eb.insert(std::vector<std::uint32_t>(m.row(i).begin(), m.row(i).end()));
    CHECK(eb.basis() == rref(m));
  }
  Rationals q;
  std::mt19937 rq(9);
  for (int t = 0; t < 20; ++t) {
    auto m = random_matrix(q, 4, 5, rq, -3, 3);
    EchelonBuilder<Rationals> eb(q, 5);
    for (std::size_t i = 0; i < 4; ++i) eb.insert(std::vector<mpq_class>(m.row(i).begin(), m.row(i).end()));
    CHECK(eb.basis() == rref(m));
    CHECK(rank(m) == rank(m.transpose()));
  }
}
