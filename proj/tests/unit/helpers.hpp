#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"

namespace testing {

inline nichols::RootOfUnity R(const char* s) { return nichols::RootOfUnity::parse(s); }

inline nichols::BraidingMatrix braiding(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<nichols::RootOfUnity>> m;
  for (auto row : rows) {
    std::vector<nichols::RootOfUnity> r;
    for (const char* e : row) r.push_back(R(e));
    m.push_back(std::move(r));
  }
  return nichols::BraidingMatrix(std::move(m));
}

// b_ij = q^{alpha_ij} with q = exp(2 pi i / n).
inline nichols::BraidingMatrix braiding_from_exponents(std::int64_t n, const std::vector<std::vector<std::int64_t>>& alpha) {
  std::vector<std::vector<nichols::RootOfUnity>> m;
  for (const auto& row : alpha) {
    std::vector<nichols::RootOfUnity> r;
    for (auto a : row) r.emplace_back(a, n);
    m.push_back(std::move(r));
  }
  return nichols::BraidingMatrix(std::move(m));
}

// Rank over F_l of the image under zeta -> w, maximized over all primitive N-th roots w in F_l
// for a prime l = 1 mod N. A lower bound for the rank over Q(zeta) that is attained with
// overwhelming probability for matrices with moderate entries.
std::size_t modular_rank_oracle(const nichols::CyclotomicMatrix& m);

nichols::CyclotomicInt random_cyclotomic(std::int64_t level, std::mt19937_64& rng, int spread = 3);

}  // namespace testing
