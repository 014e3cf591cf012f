#include <doctest.h>

#include <random>
#include <vector>

#include "invtheory/exactalg/kernels.hpp"
#include "invtheory/exactalg/subspace.hpp"

using namespace invtheory;
namespace k = invtheory::kernels;

namespace {

struct IsaGuard {
  k::Isa saved = k::active_isa();
  ~IsaGuard() { k::set_active_isa(saved); }
};

std::vector<std::uint32_t> random_row(std::size_t n, std::uint32_t p, std::mt19937& rng) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = rng() % p;
  return v;
}

}  // namespace

TEST_CASE("scalar reference kernels") {
  std::vector<std::uint32_t> dst{1, 2, 3}, src{4, 5, 6};
  k::axpy_mod_scalar(dst, src, 2, 7);
  CHECK(dst == std::vector<std::uint32_t>{2, 5, 1});
  k::scale_mod_scalar(dst, 3, 7);
  CHECK(dst == std::vector<std::uint32_t>{6, 1, 3});
}

#if INVTHEORY_X86
TEST_CASE("avx2 kernels agree with scalar reference") {
  if (!k::cpu_has_avx2()) {
    MESSAGE("AVX2 unavailable; equivalence test skipped");
    return;
  }
  std::mt19937 rng(31337);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 101u, 1031u, 2039u}) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 33u, 257u}) {
      for (int t = 0; t < 8; ++t) {
        auto dst = random_row(n, p, rng);
        auto src = random_row(n, p, rng);
        std::uint32_t f = rng() % p;
        auto a = dst, b = dst;
        k::axpy_mod_scalar(a, src, f, p);
        k::axpy_mod_avx2(b, src, f, p);
        CHECK(a == b);
        auto c = src, d = src;
        k::scale_mod_scalar(c, f, p);
        k::scale_mod_avx2(d, f, p);
        CHECK(c == d);
      }
    }
  }
  // extreme residues
  const std::uint32_t p = 2039;
  std::vector<std::uint32_t> hi(40, p - 1);
  auto a = hi, b = hi;
  k::axpy_mod_scalar(a, hi, p - 1, p);
  k::axpy_mod_avx2(b, hi, p - 1, p);
  CHECK(a == b);
}

TEST_CASE("rref is identical under both dispatch targets") {
  if (!k::cpu_has_avx2()) return;
  IsaGuard guard;
  std::mt19937 rng(5);
  for (std::uint32_t p : {3u, 5u, 7u, 1999u}) {
    PrimeField f(p);
    for (int t = 0; t < 20; ++t) {
      std::size_t r = 5 + rng() % 20, c = 5 + rng() % 40;
      DenseMatrix<PrimeField> m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % 3 == 0 ? 0 : rng() % p;
      k::set_active_isa(k::Isa::scalar);
      auto s = rref(m);
      k::set_active_isa(k::Isa::avx2);
      auto v = rref(m);
      CHECK(s == v);
    }
  }
}
#endif

TEST_CASE("dispatch falls back to scalar for large moduli") {
  std::vector<std::uint32_t> dst{65520, 1}, src{65520, 65520};
  k::axpy_mod(dst, src, 65520, 65521);
  CHECK(dst == std::vector<std::uint32_t>{0, 2});
}
