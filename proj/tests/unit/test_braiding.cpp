#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nichols/braiding.hpp"
#include "nichols/errors.hpp"

using namespace nichols;
using testing::braiding;
using testing::R;

namespace {

void check_replay(const BraidingMatrix& b, const CartanTypeResult& ct, const FLWitness& w) {
  std::int64_t g = 0;
  for (auto d : w.d) {
    CHECK(d > 0);
    g = std::gcd(g, d);
  }
  CHECK(g == 1);
  for (std::size_t i = 0; i < b.theta(); ++i)
    for (std::size_t j = 0; j < b.theta(); ++j) {
      CHECK(w.d[i] * ct.gcm(i, j) == w.d[j] * ct.gcm(j, i));
      CHECK(w.q.pow(w.d[i] * ct.gcm(i, j)) == b(i, j));
    }
}

// Every symmetric connected rank-two braiding of Cartan type with diagonal orders n1, n2.
std::vector<BraidingMatrix> symmetric_rank2(std::int64_t n1, std::int64_t n2) {
  std::vector<BraidingMatrix> out;
  const std::int64_t l = std::lcm(n1, n2);
  for (std::int64_t k1 = 1; k1 < n1; ++k1) {
    if (std::gcd(k1, n1) != 1) continue;
    for (std::int64_t k2 = 1; k2 < n2; ++k2) {
      if (std::gcd(k2, n2) != 1) continue;
      for (std::int64_t t = 1; t < l; ++t) {
        const RootOfUnity off(t, l);
        BraidingMatrix b({{RootOfUnity(k1, n1), off}, {off, RootOfUnity(k2, n2)}});
        const auto ct = cartan_type(b);
        if (ct && ct->gcm(0, 1) != 0) out.push_back(b);
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("braiding") {

TEST_CASE("construction") {
  CHECK_THROWS_AS(BraidingMatrix(std::vector<std::vector<RootOfUnity>>{}), PreconditionError);
  CHECK_THROWS_AS(BraidingMatrix({{R("1/3"), R("1/3")}}), PreconditionError);
  const auto b = braiding({{"1/3", "1/6"}, {"1/2", "1/5"}});
  CHECK(b.level() == 30);
  CHECK_FALSE(b.has_odd_order());
  CHECK(braiding({{"1/3", "1/5"}, {"4/5", "2/3"}}).has_odd_order());
}

TEST_CASE("cartan_type extraction") {
  const auto line = cartan_type(braiding({{"1/3"}}));
  REQUIRE(line.has_value());
  CHECK(line->gcm.rows() == IntMatrix{{2}});
  CHECK(line->diagonal_orders == IntVector{3});

  const auto ex = cartan_type(braiding({{"2/5", "2/5", "2/5"}, {"2/5", "4/5", "4/5"}, {"2/5", "4/5", "1/5"}}));
  REQUIRE(ex.has_value());
  CHECK(ex->gcm.rows() == IntMatrix{{2, -3, -3}, {-4, 2, -3}, {-1, -2, 2}});
  CHECK(ex->diagonal_orders == IntVector{5, 5, 5});

  // b12 b21 = 1 gives a disconnected pair
  const auto split = cartan_type(braiding({{"1/3", "1/2"}, {"1/2", "1/3"}}));
  REQUIRE(split.has_value());
  CHECK(split->gcm.rows() == IntMatrix{{2, 0}, {0, 2}});
  // b12 b21 = 2/3 = (1/3)^{-1}
  const auto linked = cartan_type(braiding({{"1/3", "1/2"}, {"1/6", "1/3"}}));
  REQUIRE(linked.has_value());
  CHECK(linked->gcm.rows() == IntMatrix{{2, -1}, {-1, 2}});
  // b12 b21 = 1/2 is not a power of 1/3
  CHECK_FALSE(cartan_type(braiding({{"1/3", "1/2"}, {"0/1", "1/3"}})).has_value());
  // trivial diagonal entry
  CHECK_FALSE(cartan_type(braiding({{"0/1", "1/3"}, {"2/3", "1/3"}})).has_value());
  // even orders are accepted here
  const auto even = cartan_type(braiding({{"1/4", "3/4"}, {"0/1", "1/4"}}));
  REQUIRE(even.has_value());
  CHECK(even->gcm.rows() == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(even->diagonal_orders == IntVector{4, 4});
}

TEST_CASE("cartan_type postconditions on random braidings") {
  std::mt19937_64 rng(4);
  std::size_t found = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::int64_t level = std::vector<std::int64_t>{3, 5, 7, 9, 15}[rng() % 5];
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::vector<RootOfUnity>> e(n, std::vector<RootOfUnity>(n));
    for (auto& row : e)
      for (auto& x : row) x = RootOfUnity(static_cast<std::int64_t>(rng() % level), level);
    const BraidingMatrix b(e);
    const auto ct = cartan_type(b);
    if (!ct) continue;
    ++found;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(ct->diagonal_orders[i] == b(i, i).order());
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(-ct->diagonal_orders[i] < ct->gcm(i, j));
        CHECK(ct->gcm(i, j) <= 0);
        CHECK(b(i, i).pow(ct->gcm(i, j)) == b(i, j) * b(j, i));
      }
    }
  }
  CHECK(found > 100);
}

TEST_CASE("connected components") {
  CHECK(connected_components(braiding({{"1/3", "1/5"}, {"4/5", "2/3"}})) == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(connected_components(braiding({{"1/3", "1/3"}, {"1/3", "1/3"}})) == std::vector<std::vector<std::size_t>>{{0, 1}});
  // A2 x A2 over Z/3: blocks {1,2} and {3,4}
  const auto b = braiding({{"1/3", "1/3", "0/1", "0/1"},
                           {"1/3", "1/3", "0/1", "0/1"},
                           {"0/1", "0/1", "1/3", "1/3"},
                           {"0/1", "0/1", "1/3", "1/3"}});
  CHECK(connected_components(b) == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  // chains link transitively
  const auto chain = braiding({{"1/5", "3/5", "0/1"}, {"3/5", "1/5", "3/5"}, {"0/1", "3/5", "1/5"}});
  CHECK(connected_components(chain) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  const auto interleaved = braiding({{"1/5", "0/1", "3/5"}, {"0/1", "1/7", "0/1"}, {"3/5", "0/1", "1/5"}});
  CHECK(connected_components(interleaved) == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(braiding({{"1/3", "0/1"}, {"0/1", "1/5"}})));
  CHECK_FALSE(is_symmetric(braiding({{"1/7", "2/7"}, {"4/7", "1/7"}})));
  CHECK(is_symmetric(braiding({{"1/7", "3/7"}, {"3/7", "1/7"}})));
}

TEST_CASE("FL witnesses for constructed braidings") {
  // G2: d = (1, 3), b_ij = q^{d_i a_ij}, q = 1/7
  const auto g2 = testing::braiding_from_exponents(7, {{2, -3}, {-3, 6}});
  const auto ct = cartan_type(g2);
  REQUIRE(ct.has_value());
  CHECK(ct->gcm.rows() == IntMatrix{{2, -3}, {-1, 2}});
  const auto w = fl_witness(g2, *ct);
  REQUIRE(w);
  CHECK(w.witness->d == IntVector{1, 3});
  check_replay(g2, *ct, *w.witness);
  CHECK(fl_rank2_criterion(g2, *ct));
}

TEST_CASE("the order-nine instance has no FL witness") {
  // b11 = q, b22 = q^4, b12 = b21 = odd square root of q^{-3}, q of order 9
  const RootOfUnity q(1, 9);
  const RootOfUnity off = odd_square_root(q.pow(-3));
  const BraidingMatrix b({{q, off}, {off, q.pow(4)}});
  const auto ct = cartan_type(b);
  REQUIRE(ct.has_value());
  CHECK(ct->gcm.rows() == IntMatrix{{2, -3}, {-3, 2}});
  CHECK(ct->diagonal_orders == IntVector{9, 9});
  const auto w = fl_witness(b, *ct);
  CHECK_FALSE(w);
  CHECK(w.reason == FLAbsence::NotFLType);
  CHECK_FALSE(fl_rank2_criterion(b, *ct));
  CHECK_FALSE(is_locally_fl(b, *ct));

  // embedded as a block of a rank-three braiding whose third vertex is isolated
  const BraidingMatrix big({{q, off, R("1/5")}, {off, q.pow(4), R("2/7")}, {R("4/5"), R("5/7"), R("1/3")}});
  const auto bct = cartan_type(big);
  REQUIRE(bct.has_value());
  CHECK(connected_components(big) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK_FALSE(is_locally_fl(big, *bct));
}

TEST_CASE("odd entry a21 forces FL type") {
  // a12 = -1, a21 = -3 in every consistent odd-order realization
  std::size_t seen = 0;
  for (std::int64_t n : {5, 7, 11, 13, 25, 35}) {
    for (std::int64_t k = 1; k < n; ++k) {
      const RootOfUnity b22(k, n);
      if (b22.order() != n) continue;
      const RootOfUnity b11 = b22.pow(3);
      if (b11.is_one()) continue;
      // symmetric: b12^2 = b22^{-3} = b11^{-1}
      const RootOfUnity off = odd_square_root(b22.pow(-3));
      const BraidingMatrix b({{b11, off}, {off, b22}});
      const auto ct = cartan_type(b);
      REQUIRE(ct.has_value());
      if (ct->gcm(0, 1) != -1 || ct->gcm(1, 0) != -3) continue;
      ++seen;
      const auto w = fl_witness(b, *ct);
      REQUIRE(w);
      check_replay(b, *ct, *w.witness);
      CHECK(fl_rank2_criterion(b, *ct));
      CHECK(is_locally_fl(b, *ct));
      // non-symmetric variant with the same products is handled through symmetrization
      const RootOfUnity shift(1, n);
      const BraidingMatrix skew({{b11, off * shift}, {off / shift, b22}});
      CHECK(is_locally_fl(skew, *cartan_type(skew)));
    }
  }
  CHECK(seen > 20);
}

TEST_CASE("A2 braidings and equal-symmetrizer braidings are FL") {
  for (std::int64_t n : {3, 5, 7, 9, 15}) {
    for (std::int64_t k = 1; k < n; ++k) {
      const RootOfUnity q(k, n);
      if (q.order() != n) continue;
      const RootOfUnity off = odd_square_root(q.inverse());
      const BraidingMatrix b({{q, off}, {off, q}});
      const auto ct = cartan_type(b);
      REQUIRE(ct.has_value());
      CHECK(fl_rank2_criterion(b, *ct));
      const auto w = fl_witness(b, *ct);
      REQUIRE(w);
      check_replay(b, *ct, *w.witness);
    }
  }
}

TEST_CASE("rank-two criterion agrees with the exhaustive search") {
  std::size_t total = 0, positive = 0;
  for (std::int64_t n1 : {3, 5, 7, 9})
    for (std::int64_t n2 : {3, 5, 7, 9})
      for (const auto& b : symmetric_rank2(n1, n2)) {
        const auto ct = cartan_type(b);
        const auto w = fl_witness(b, *ct);
        CHECK(fl_rank2_criterion(b, *ct) == static_cast<bool>(w));
        if (w) {
          ++positive;
          check_replay(b, *ct, *w.witness);
        }
        ++total;
      }
  CHECK(total > 0);
  CHECK(positive > 0);
  CHECK(positive < total);
}

TEST_CASE("criterion preconditions") {
  const auto a2 = braiding({{"1/3", "1/3"}, {"1/3", "1/3"}});
  const auto ct = *cartan_type(a2);
  const auto plane = braiding({{"1/3", "0/1"}, {"0/1", "1/3"}});
  CHECK_THROWS_AS(fl_rank2_criterion(plane, *cartan_type(plane)), PreconditionError);
  const auto skew = braiding({{"1/7", "2/7"}, {"4/7", "1/7"}});
  CHECK_THROWS_AS(fl_rank2_criterion(skew, *cartan_type(skew)), PreconditionError);
  const auto even = braiding({{"1/3", "1/6"}, {"1/6", "1/3"}});
  CHECK_THROWS_AS(fl_witness(even, *cartan_type(even)), PreconditionError);
  CHECK(fl_rank2_criterion(a2, ct));
}

TEST_CASE("non-symmetrizable braidings are locally FL but have no witness") {
  const auto b = braiding({{"2/5", "2/5", "2/5"}, {"2/5", "4/5", "4/5"}, {"2/5", "4/5", "1/5"}});
  const auto ct = *cartan_type(b);
  const auto w = fl_witness(b, ct);
  CHECK_FALSE(w);
  CHECK(w.reason == FLAbsence::NonSymmetrizable);
  CHECK(is_locally_fl(b, ct));
}

TEST_CASE("symmetric companion") {
  const auto b = braiding({{"1/7", "2/7"}, {"4/7", "1/7"}});
  const auto s = symmetric_companion(b);
  CHECK(is_symmetric(s));
  CHECK(s(0, 0) == b(0, 0));
  CHECK(s(0, 1) * s(1, 0) == b(0, 1) * b(1, 0));
  CHECK(cartan_type(s)->gcm == cartan_type(b)->gcm);
}

TEST_CASE("relative primeness yields FL type and equal diagonal orders") {
  std::mt19937_64 rng(99);
  std::size_t hits = 0;
  for (int trial = 0; trial < 20000 && hits < 300; ++trial) {
    const std::int64_t level = std::vector<std::int64_t>{5, 7, 9, 11, 13, 15, 21, 25}[rng() % 8];
    const std::size_t n = 2 + rng() % 2;
    std::vector<std::vector<RootOfUnity>> e(n, std::vector<RootOfUnity>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) e[i][j] = e[j][i] = RootOfUnity(static_cast<std::int64_t>(rng() % level), level);
    const BraidingMatrix b(e);
    const auto ct = cartan_type(b);
    if (!ct || connected_components(b).size() != 1 || !symmetrizer(ct->gcm)) continue;
    bool coprime = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && ct->gcm(i, j) != 0 && std::gcd(ct->gcm(i, j), ct->diagonal_orders[i]) != 1) coprime = false;
    if (!coprime) continue;
    ++hits;
    for (std::size_t i = 1; i < n; ++i) CHECK(ct->diagonal_orders[i] == ct->diagonal_orders[0]);
    const auto w = fl_witness(b, *ct);
    REQUIRE(w);
    check_replay(b, *ct, *w.witness);
  }
  CHECK(hits >= 100);
}

}
