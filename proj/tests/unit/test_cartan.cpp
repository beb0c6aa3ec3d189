#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nichols/cartan_matrix.hpp"
#include "nichols/dimension.hpp"
#include "nichols/errors.hpp"

using namespace nichols;

namespace {

GeneralizedCartanMatrix type_a(std::size_t n) {
  IntMatrix a(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return GeneralizedCartanMatrix(a);
}

GeneralizedCartanMatrix with_entry(GeneralizedCartanMatrix g, std::size_t i, std::size_t j, std::int64_t v) {
  IntMatrix a = g.rows();
  a[i][j] = v;
  return GeneralizedCartanMatrix(a);
}

// Finite-type GCMs in Bourbaki numbering, with their positive-root counts.
struct Classical {
  const char* label;
  GeneralizedCartanMatrix g;
  std::size_t roots;
};

std::vector<Classical> classical_table() {
  std::vector<Classical> t;
  for (std::size_t n = 1; n <= 7; ++n) t.push_back({nullptr, type_a(n), n * (n + 1) / 2});
  t.push_back({"B2", GeneralizedCartanMatrix({{2, -2}, {-1, 2}}), 4});
  t.push_back({"G2", GeneralizedCartanMatrix({{2, -3}, {-1, 2}}), 6});
  t.push_back({"B3", with_entry(type_a(3), 2, 1, -2), 9});
  t.push_back({"C3", with_entry(type_a(3), 1, 2, -2), 9});
  t.push_back({"B4", with_entry(type_a(4), 3, 2, -2), 16});
  t.push_back({"F4", with_entry(type_a(4), 1, 2, -2), 24});
  t.push_back({"D4", GeneralizedCartanMatrix({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}), 12});
  t.push_back({"D5", GeneralizedCartanMatrix({{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, -1}, {0, 0, -1, 2, 0}, {0, 0, -1, 0, 2}}), 20});
  auto e = [](std::size_t n) {
    IntMatrix a(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    link(0, 2);
    link(1, 3);
    link(2, 3);
    for (std::size_t i = 3; i + 1 < n; ++i) link(i, i + 1);
    return GeneralizedCartanMatrix(a);
  };
  t.push_back({"E6", e(6), 36});
  t.push_back({"E7", e(7), 63});
  t.push_back({"E8", e(8), 120});
  return t;
}

}  // namespace

TEST_SUITE("cartan") {

TEST_CASE("generalized Cartan matrices are validated") {
  CHECK_THROWS_AS(GeneralizedCartanMatrix({{2, -1}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(GeneralizedCartanMatrix({{1, 0}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(GeneralizedCartanMatrix({{2, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(GeneralizedCartanMatrix(IntMatrix{}), PreconditionError);
}

TEST_CASE("symmetrizers") {
  CHECK(symmetrizer(GeneralizedCartanMatrix({{2, -1}, {-1, 2}})) == IntVector{1, 1});
  CHECK(symmetrizer(GeneralizedCartanMatrix({{2, -3}, {-1, 2}})) == IntVector{1, 3});
  CHECK(symmetrizer(GeneralizedCartanMatrix({{2, -1}, {-3, 2}})) == IntVector{3, 1});
  CHECK_FALSE(symmetrizer(GeneralizedCartanMatrix({{2, -3, -3}, {-4, 2, -3}, {-1, -2, 2}})).has_value());
  // disconnected pieces are normalized separately
  CHECK(symmetrizer(GeneralizedCartanMatrix({{2, -2, 0}, {-1, 2, 0}, {0, 0, 2}})) == IntVector{1, 2, 1});
  for (const auto& c : classical_table()) {
    const auto d = symmetrizer(c.g);
    REQUIRE(d.has_value());
    for (std::size_t i = 0; i < c.g.size(); ++i)
      for (std::size_t j = 0; j < c.g.size(); ++j) CHECK((*d)[i] * c.g(i, j) == (*d)[j] * c.g(j, i));
  }
}

TEST_CASE("finite-type recognition on named matrices") {
  CHECK(is_finite_type(type_a(3)));
  CHECK_FALSE(is_finite_type(GeneralizedCartanMatrix({{2, -2}, {-2, 2}})));
  CHECK_FALSE(is_finite_type(GeneralizedCartanMatrix({{2, -3, -1}, {-1, 2, -3}, {-3, -1, 2}})));
  CHECK_FALSE(is_finite_type(GeneralizedCartanMatrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})));
  CHECK_FALSE(is_finite_type(GeneralizedCartanMatrix({{2, -4}, {-1, 2}})));
  for (const auto& c : classical_table()) CHECK(is_finite_type(c.g));
}

TEST_CASE("both recognizers agree on every rank-3 matrix with entries in [-4, 0]") {
  const std::int64_t vals[] = {0, -1, -2, -3, -4};
  std::size_t checked = 0;
  for (auto a01 : vals) for (auto a10 : vals) for (auto a02 : vals) for (auto a20 : vals)
  for (auto a12 : vals) for (auto a21 : vals) {
    if ((a01 == 0) != (a10 == 0) || (a02 == 0) != (a20 == 0) || (a12 == 0) != (a21 == 0)) continue;
    const GeneralizedCartanMatrix g({{2, a01, a02}, {a10, 2, a12}, {a20, a21, 2}});
    CHECK(finite_type_by_minors(g) == finite_type_by_reflections(g));
    ++checked;
  }
  CHECK(checked == 17 * 17 * 17);
}

TEST_CASE("recognizers agree on rank-2 matrices with large entries") {
  // large products make the root coordinates grow geometrically
  for (std::int64_t a = 0; a >= -40; --a)
    for (std::int64_t c = 0; c >= -40; --c) {
      if ((a == 0) != (c == 0)) continue;
      const GeneralizedCartanMatrix g({{2, a}, {c, 2}});
      CHECK(finite_type_by_minors(g) == finite_type_by_reflections(g));
      CHECK(finite_type_by_minors(g) == (a * c < 4));
    }
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK_FALSE(finite_type_by_reflections(GeneralizedCartanMatrix({{2, -big}, {-big, 2}})));
  CHECK_FALSE(is_finite_type(GeneralizedCartanMatrix({{2, -1, -9}, {-1, 2, -1}, {-7, -1, 2}})));
}

TEST_CASE("positive roots and classical counts") {
  const auto a2 = positive_roots(type_a(2));
  CHECK(a2.positive_roots == std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(a2.heights == IntVector{1, 1, 2});
  const auto b2 = positive_roots(GeneralizedCartanMatrix({{2, -2}, {-1, 2}}));
  CHECK(b2.heights == IntVector{1, 1, 2, 3});
  CHECK(positive_roots(GeneralizedCartanMatrix({{2, -3}, {-1, 2}})).positive_roots.size() == 6);
  for (const auto& c : classical_table()) {
    const auto rs = positive_roots(c.g);
    CHECK(rs.positive_roots.size() == c.roots);
    if (c.label) CHECK(diagram_label(c.g) == c.label);
    // simple roots present, no duplicates
    for (std::size_t i = 0; i < c.g.size(); ++i) {
      IntVector e(c.g.size(), 0);
      e[i] = 1;
      CHECK(std::count(rs.positive_roots.begin(), rs.positive_roots.end(), e) == 1);
    }
    auto sorted = rs.positive_roots;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
  CHECK_THROWS_AS(positive_roots(GeneralizedCartanMatrix({{2, -2}, {-2, 2}})), PreconditionError);
}

TEST_CASE("diagram labels") {
  CHECK(diagram_label(type_a(1)) == "A1");
  CHECK(diagram_label(type_a(4)) == "A4");
  CHECK(diagram_label(GeneralizedCartanMatrix({{2, -1}, {-2, 2}})) == "B2");
  CHECK(diagram_label(GeneralizedCartanMatrix({{2, -1, 0}, {-1, 2, 0}, {0, 0, 2}})) == "A2xA1");
  CHECK(diagram_label(GeneralizedCartanMatrix({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}})) == "A2xA1");
  CHECK(diagram_label(GeneralizedCartanMatrix({{2, -2}, {-2, 2}})) == "indefinite");
}

TEST_CASE("permuting indices permutes root coordinates") {
  const GeneralizedCartanMatrix g = with_entry(type_a(4), 1, 2, -2);
  const auto base = positive_roots(g);
  std::vector<std::size_t> sigma{2, 0, 3, 1};
  IntMatrix permuted(4, IntVector(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) permuted[i][j] = g(sigma[i], sigma[j]);
  const GeneralizedCartanMatrix h(permuted);
  const auto moved = positive_roots(h);
  REQUIRE(moved.positive_roots.size() == base.positive_roots.size());
  std::vector<IntVector> mapped;
  for (const auto& r : moved.positive_roots) {
    IntVector v(4);
    for (std::size_t k = 0; k < 4; ++k) v[sigma[k]] = r[k];
    mapped.push_back(v);
  }
  auto a = base.positive_roots;
  std::sort(a.begin(), a.end());
  std::sort(mapped.begin(), mapped.end());
  CHECK(a == mapped);
}

TEST_CASE("dimension formula") {
  using testing::braiding;
  const auto a2 = braiding({{"1/3", "1/3"}, {"1/3", "1/3"}});
  const auto ct = *cartan_type(a2);
  CHECK(nichols_dimension(a2, ct) == 27);
  CHECK(top_degree(a2, ct) == 8);
  std::vector<mpz_class> h = graded_hilbert(a2, ct, 10);
  CHECK(h == std::vector<mpz_class>{1, 2, 4, 4, 5, 4, 4, 2, 1, 0, 0});

  const auto a2a1 = braiding({{"1/3", "1/3", "2/3"}, {"1/3", "1/3", "2/3"}, {"1/3", "1/3", "2/3"}});
  CHECK(nichols_dimension(a2a1, *cartan_type(a2a1)) == 81);
  const auto b2 = braiding({{"1/5", "2/5"}, {"1/5", "2/5"}});
  CHECK(nichols_dimension(b2, *cartan_type(b2)) == 625);

  const auto line = braiding({{"2/7"}});
  CHECK(graded_hilbert(line, *cartan_type(line), 9) == std::vector<mpz_class>{1, 1, 1, 1, 1, 1, 1, 0, 0, 0});
  // two quantum lines of orders 3 and 5 that commute: convolution of (1,1,1) and (1,1,1,1,1)
  const auto plane = braiding({{"1/3", "1/7"}, {"6/7", "1/5"}});
  CHECK(graded_hilbert(plane, *cartan_type(plane), 7) == std::vector<mpz_class>{1, 2, 3, 3, 3, 2, 1, 0});
  CHECK(nichols_dimension(plane, *cartan_type(plane)) == 15);
}

TEST_CASE("Hilbert coefficients sum to the dimension on random finite-type braidings") {
  const std::vector<IntMatrix> shapes{{{2, -1}, {-1, 2}}, {{2, -2}, {-1, 2}}, {{2, -3}, {-1, 2}},
                                      {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}};
  for (const auto& a : shapes) {
    const auto d = *symmetrizer(GeneralizedCartanMatrix(a));
    for (std::int64_t n : {7, 11, 13}) {
      // b_ij = q^{d_i a_ij} with q of order n, prime to every entry
      std::vector<std::vector<std::int64_t>> alpha(a.size(), std::vector<std::int64_t>(a.size()));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) alpha[i][j] = d[i] * a[i][j];
      const auto b = testing::braiding_from_exponents(n, alpha);
      const auto ct = cartan_type(b);
      REQUIRE(ct.has_value());
      CHECK(ct->gcm == GeneralizedCartanMatrix(a));
      const std::int64_t top = top_degree(b, *ct);
      const auto h = graded_hilbert(b, *ct, top + 2);
      CHECK(std::accumulate(h.begin(), h.end(), mpz_class(0)) == nichols_dimension(b, *ct));
      CHECK(h[static_cast<std::size_t>(top)] == 1);
      CHECK(h[static_cast<std::size_t>(top + 1)] == 0);
      // palindromic
      for (std::int64_t k = 0; k <= top; ++k) CHECK(h[static_cast<std::size_t>(k)] == h[static_cast<std::size_t>(top - k)]);
    }
  }
}

TEST_CASE("dimension refusals") {
  using testing::braiding;
  const auto even = braiding({{"1/4"}});
  CHECK_THROWS_AS(nichols_dimension(even, *cartan_type(even)), PreconditionError);
  const auto affine = testing::braiding_from_exponents(5, {{2, 1}, {1, 2}});  // a12 = a21 = -2
  const auto ct = cartan_type(affine);
  REQUIRE(ct.has_value());
  CHECK_THROWS_AS(nichols_dimension(affine, *ct), PreconditionError);
  // unequal diagonal orders inside one component
  const auto mixed = braiding({{"1/3", "1/9"}, {"5/9", "1/9"}});
  const auto cm = cartan_type(mixed);
  REQUIRE(cm.has_value());
  CHECK(diagram_label(cm->gcm) == "G2");
  CHECK(nichols_dimension(mixed, *cm) == 531441);  // component order lcm(3, 9)
  CHECK_THROWS_AS(graded_hilbert(mixed, *cm, 5), PreconditionError);
}

}
