#include "helpers.hpp"

#include <numeric>

namespace testing {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

std::size_t rank_mod(std::vector<std::vector<u64>> a, u64 l) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const u64 inv = powmod(a[rank][c], l - 2, l);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const u64 f = mulmod(a[r][c], inv, l);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + l - mulmod(f, a[rank][k], l)) % l;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t modular_rank_oracle(const nichols::CyclotomicMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  const auto n = static_cast<u64>(m[0][0].level());
  u64 l = (u64{1} << 31) / n * n + 1;
  while (!is_prime(l)) l += n;
  // a generator of the multiplicative group, then all primitive n-th roots
  u64 gen = 2;
  const auto pf = prime_factors(l - 1);
  for (;; ++gen) {
    bool ok = true;
    for (u64 p : pf) ok = ok && powmod(gen, (l - 1) / p, l) != 1;
    if (ok) break;
  }
  const u64 w0 = powmod(gen, (l - 1) / n, l);
  std::size_t best = 0;
  for (u64 k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    const u64 w = powmod(w0, k, l);
    std::vector<std::vector<u64>> a(m.size(), std::vector<u64>(m[0].size()));
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        u64 v = 0, wp = 1;
        for (const auto& coef : m[r][c].coeffs()) {
          mpz_class red = coef % static_cast<unsigned long>(l);
          if (red < 0) red += static_cast<unsigned long>(l);
          v = (v + mulmod(red.get_ui(), wp, l)) % l;
          wp = mulmod(wp, w, l);
        }
        a[r][c] = v;
      }
    best = std::max(best, rank_mod(std::move(a), l));
  }
  return best;
}

nichols::CyclotomicInt random_cyclotomic(std::int64_t level, std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> coef(-spread, spread);
  std::vector<mpz_class> powers(static_cast<std::size_t>(level));
  for (auto& p : powers) p = coef(rng);
  return nichols::CyclotomicInt::from_powers(level, powers);
}

}  // namespace testing
