#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/errors.hpp"
#include "nichols/root_of_unity.hpp"
#include "nichols/root_sum.hpp"

using namespace nichols;
using testing::R;

TEST_SUITE("cyclotomic") {

TEST_CASE("roots of unity are stored canonically") {
  CHECK(RootOfUnity(2, 6) == RootOfUnity(1, 3));
  CHECK(RootOfUnity(-1, 5) == RootOfUnity(4, 5));
  CHECK(RootOfUnity(7, 7).is_one());
  CHECK(RootOfUnity(0, 9).order() == 1);
  CHECK(R("3/9").to_string() == "1/3");
  CHECK_THROWS_AS(RootOfUnity::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnity::parse("x"), std::invalid_argument);
}

TEST_CASE("products of roots of unity") {
  CHECK(mul(R("1/3"), R("1/3")) == R("2/3"));
  CHECK(mul(R("1/2"), R("1/2")) == R("0/1"));
  CHECK(mul(R("1/3"), R("1/6")) == R("1/2"));
}

TEST_CASE("powers of roots of unity") {
  CHECK(pow(R("1/5"), -1) == R("4/5"));
  CHECK(pow(R("1/3"), 3) == R("0/1"));
  CHECK(pow(R("2/7"), 4) == R("1/7"));
}

TEST_CASE("order and power laws hold on every root of order at most 24") {
  for (std::int64_t n = 1; n <= 24; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      const RootOfUnity r(a, n);
      CHECK(pow(r, r.order()).is_one());
      for (std::int64_t k = -30; k <= 30; k += 7) CHECK(pow(r, k) == pow(r, ((k % r.order()) + r.order()) % r.order()));
      for (std::int64_t m = 1; m <= 12; ++m) {
        const RootOfUnity s(1, m);
        CHECK(std::lcm(r.order(), s.order()) % mul(r, s).order() == 0);
      }
    }
}

TEST_CASE("discrete logarithm in a window") {
  CHECK(discrete_log(R("1/5"), R("3/5"), -5, 0) == std::optional<std::int64_t>(-2));
  // k = 0 is the member of (-3, 0] with (1/3)^k = 1; k = -3 lies outside the half-open window
  CHECK(discrete_log(R("1/3"), R("0/1"), -3, 0) == std::optional<std::int64_t>(0));
  CHECK_FALSE(discrete_log(R("1/3"), R("1/2"), -3, 0).has_value());
  CHECK_THROWS_AS(discrete_log(R("1/3"), R("1/3"), -10, 0), AmbiguityError);
  CHECK_THROWS_AS(discrete_log(R("0/1"), R("0/1"), -3, 0), PreconditionError);
  // brute-force agreement
  for (std::int64_t n = 2; n <= 15; ++n)
    for (std::int64_t t = 0; t < n; ++t) {
      const RootOfUnity base(1, n), target(t, n);
      const auto k = discrete_log(base, target, -n, 0);
      REQUIRE(k.has_value());
      CHECK(pow(base, *k) == target);
      CHECK(*k > -n);
      CHECK(*k <= 0);
    }
}

TEST_CASE("odd square roots") {
  for (std::int64_t n = 1; n <= 31; n += 2)
    for (std::int64_t a = 0; a < n; ++a) {
      const RootOfUnity r(a, n);
      const RootOfUnity s = odd_square_root(r);
      CHECK(s.has_odd_order());
      CHECK(pow(s, 2) == r);
    }
  CHECK_THROWS_AS(odd_square_root(R("1/4")), PreconditionError);
}

TEST_CASE("cyclotomic polynomials and totients") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (std::int64_t n = 1; n <= 60; ++n) {
    CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("cyclotomic integers reduce modulo the cyclotomic polynomial") {
  const std::int64_t n = 3;
  const CyclotomicInt one = CyclotomicInt::one(n);
  const CyclotomicInt z = CyclotomicInt::zeta_power(n, 1);
  CHECK((one + z + z * z).is_zero());
  CHECK(z * z * z == one);
  CHECK(CyclotomicInt::zeta_power(n, -1) == z * z);
  for (std::int64_t level = 1; level <= 15; ++level)
    for (std::int64_t a = 0; a < level; ++a)
      for (std::int64_t b = 0; b < level; ++b)
        CHECK(CyclotomicInt::zeta_power(level, a) * CyclotomicInt::zeta_power(level, b) ==
              CyclotomicInt::zeta_power(level, a + b));
  CHECK(CyclotomicInt::from_root(R("1/3"), 6) == CyclotomicInt::zeta_power(6, 2));
  CHECK_THROWS_AS(CyclotomicInt::from_root(R("1/4"), 6), PreconditionError);
}

TEST_CASE("multiplication is commutative and associative at levels up to 15") {
  std::mt19937_64 rng(7);
  for (std::int64_t level = 1; level <= 15; ++level)
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = testing::random_cyclotomic(level, rng);
      const auto b = testing::random_cyclotomic(level, rng);
      const auto c = testing::random_cyclotomic(level, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("norms and exact division") {
  // N(1 - zeta_p) = p
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto x = CyclotomicInt::one(p) - CyclotomicInt::zeta_power(p, 1);
    CHECK(x.norm() == p);
    CHECK(x * x.conjugate_product() == CyclotomicInt::integer(p, p));
  }
  std::mt19937_64 rng(11);
  for (std::int64_t level : {4, 5, 9, 12}) {
    const auto a = testing::random_cyclotomic(level, rng);
    auto b = testing::random_cyclotomic(level, rng);
    if (b.is_zero()) b = CyclotomicInt::one(level);
    CHECK((a * b).divide_exact(b) == a);
    CHECK(b.conjugate(1) == b);
  }
}

TEST_CASE("rank over the cyclotomic field: worked cases") {
  const std::int64_t n = 3;
  auto z = [&](std::int64_t e) { return CyclotomicInt::zeta_power(n, e); };
  const auto one = CyclotomicInt::one(n), zero = CyclotomicInt::zero(n);
  CHECK(cyc_rank({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}) == 3);
  CHECK(cyc_rank({{one, z(1)}, {z(2), one}}) == 1);
  CHECK(cyc_rank({{one + z(1) + z(2), zero}, {zero, one}}) == 1);
  CHECK(cyc_rank({}) == 0);
  CHECK(cyc_rank({{zero, zero}, {zero, zero}}) == 0);
}

TEST_CASE("rank agrees with the modular oracle on designed low-rank products") {
  std::mt19937_64 rng(3);
  for (std::int64_t level : {3, 5, 7, 8, 9, 12, 15}) {
    for (std::size_t target = 0; target <= 4; ++target) {
      const std::size_t rows = 5, cols = 6;
      CyclotomicMatrix left(rows, std::vector<CyclotomicInt>(target, CyclotomicInt::zero(level)));
      CyclotomicMatrix right(target, std::vector<CyclotomicInt>(cols, CyclotomicInt::zero(level)));
      for (auto& r : left)
        for (auto& e : r) e = testing::random_cyclotomic(level, rng);
      for (auto& r : right)
        for (auto& e : r) e = testing::random_cyclotomic(level, rng);
      CyclotomicMatrix m(rows, std::vector<CyclotomicInt>(cols, CyclotomicInt::zero(level)));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          for (std::size_t k = 0; k < target; ++k) m[i][j] += left[i][k] * right[k][j];
      const std::size_t r = cyc_rank(m);
      CHECK(r == testing::modular_rank_oracle(m));
      CHECK(r <= target);
    }
  }
}

TEST_CASE("rank is invariant under permutations and unit scaling") {
  std::mt19937_64 rng(5);
  const std::int64_t level = 7;
  CyclotomicMatrix m(4, std::vector<CyclotomicInt>(4, CyclotomicInt::zero(level)));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = testing::random_cyclotomic(level, rng);
  m[3] = m[0];
  for (std::size_t j = 0; j < 4; ++j) m[3][j] += m[1][j];
  const std::size_t base = cyc_rank(m);
  CHECK(base == 3);
  auto p = m;
  std::swap(p[0], p[2]);
  for (auto& row : p) std::swap(row[1], row[3]);
  CHECK(cyc_rank(p) == base);
  for (std::int64_t e = 0; e < level; ++e) {
    auto s = m;
    for (auto& x : s[1]) x = x.times_zeta(e);
    for (auto& x : s[2]) x = x * (CyclotomicInt::one(level) + CyclotomicInt::zeta_power(level, e + 1));
    CHECK(cyc_rank(s) == base);
  }
}

TEST_CASE("root sums evaluate exactly") {
  const std::int64_t level = 6;
  RootSum a = RootSum::monomial(level, 0) + RootSum::monomial(level, 2) + RootSum::monomial(level, 4);
  CHECK_FALSE(a.is_trivially_zero());
  CHECK(a.is_zero());
  CHECK(same_value(a, RootSum::zero(level)));
  const RootSum b = RootSum::of_root(R("1/2"), level, 3);
  CHECK(b.to_cyclotomic() == CyclotomicInt::integer(level, -3));
  CHECK((b * b).to_cyclotomic() == CyclotomicInt::integer(level, 9));
  CHECK(b.rotated(R("1/2")).to_cyclotomic() == CyclotomicInt::integer(level, 3));
  CHECK((b - b).is_trivially_zero());
  CHECK(b.scaled(2).to_cyclotomic() == CyclotomicInt::integer(level, -6));
}

}
