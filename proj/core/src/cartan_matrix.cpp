#include "nichols/cartan_matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "nichols/errors.hpp"

namespace nichols {

GeneralizedCartanMatrix::GeneralizedCartanMatrix(IntMatrix a) : a_(std::move(a)) {
  const std::size_t n = a_.size();
  if (n == 0) throw PreconditionError("Cartan matrix must be nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw PreconditionError("Cartan matrix must be square");
    if (a_[i][i] != 2) throw PreconditionError("Cartan matrix diagonal must be 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw PreconditionError("Cartan matrix off-diagonal entries must be nonpositive");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw PreconditionError("Cartan matrix zero pattern must be symmetric");
    }
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::restrict_to(const std::vector<std::size_t>& idx) const {
  IntMatrix sub(idx.size(), IntVector(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = a_[idx[r]][idx[c]];
  return GeneralizedCartanMatrix(std::move(sub));
}

std::vector<std::vector<std::size_t>> GeneralizedCartanMatrix::components() const {
  const std::size_t n = size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> block;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      block.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && a_[i][j] != 0) {
          seen[j] = 1;
          stack.push_back(j);
        }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

std::optional<IntVector> symmetrizer(const GeneralizedCartanMatrix& g) {
  const std::size_t n = g.size();
  std::vector<mpq_class> d(n);
  for (const auto& comp : g.components()) {
    // propagate along a spanning tree of the component
    d[comp[0]] = 1;
    std::vector<int> seen(n, 0);
    seen[comp[0]] = 1;
    std::queue<std::size_t> todo;
    todo.push(comp[0]);
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j : comp) {
        if (seen[j] || g(i, j) == 0) continue;
        d[j] = d[i] * g(i, j) / g(j, i);
        d[j].canonicalize();
        seen[j] = 1;
        todo.push(j);
      }
    }
    mpz_class den = 1;
    for (std::size_t i : comp) den = lcm(den, mpz_class(d[i].get_den()));
    mpz_class num = 0;
    for (std::size_t i : comp) {
      d[i] *= den;
      num = gcd(num, mpz_class(d[i].get_num()));
    }
    for (std::size_t i : comp) d[i] /= num;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i] * g(i, j) != d[j] * g(j, i)) return std::nullopt;
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!d[i].get_num().fits_slong_p()) throw ResourceGuardError("symmetrizer entry exceeds 64 bits", 64, 63);
    out[i] = d[i].get_num().get_si();
  }
  return out;
}

namespace {

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

bool finite_type_by_minors(const GeneralizedCartanMatrix& g) {
  const std::size_t n = g.size();
  if (n > 24) throw ResourceGuardError("principal-minor test limited to rank 24", n, 24);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) idx.push_back(i);
    std::vector<std::vector<mpz_class>> m(idx.size(), std::vector<mpz_class>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) m[r][c] = static_cast<long>(g(idx[r], idx[c]));
    if (determinant(std::move(m)) <= 0) return false;
  }
  return true;
}

ReflectionClosure reflection_closure(const GeneralizedCartanMatrix& g, std::size_t cap) {
  const std::size_t n = g.size();
  ReflectionClosure out;
  std::set<IntVector> seen;
  std::queue<IntVector> todo;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    out.roots.push_back(e);
    todo.push(std::move(e));
  }
  while (!todo.empty()) {
    const IntVector beta = std::move(todo.front());
    todo.pop();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      bool overflow = false;
      for (std::size_t k = 0; k < n; ++k) {
        std::int64_t term = 0;
        overflow = overflow || __builtin_mul_overflow(g(i, k), beta[k], &term) ||
                   __builtin_add_overflow(pairing, term, &pairing);
      }
      if (overflow) return out;
      if (pairing == 0) continue;
      IntVector next = beta;
      if (__builtin_sub_overflow(next[i], pairing, &next[i])) return out;
      if (next[i] < 0) continue;
      // no root of a finite root system has a coefficient above 6, so the closure is infinite
      if (next[i] > kMaxFiniteRootCoefficient) return out;
      if (!seen.insert(next).second) continue;
      if (out.roots.size() >= cap) return out;
      out.roots.push_back(next);
      todo.push(std::move(next));
    }
  }
  out.terminated = true;
  return out;
}

std::size_t finite_root_bound(std::size_t rank) {
  // Classical series have at most rank^2 positive roots; the exceptional excess is at most 56 (E8).
  return std::min<std::size_t>(kReflectionClosureCap, rank * rank + 56);
}

bool finite_type_by_reflections(const GeneralizedCartanMatrix& g) {
  return reflection_closure(g, finite_root_bound(g.size())).terminated;
}

bool is_finite_type(const GeneralizedCartanMatrix& g) {
  const bool a = finite_type_by_minors(g);
  const bool b = finite_type_by_reflections(g);
  if (a != b) throw InternalFault("finite-type recognizers disagree");
  return a;
}

RootSystemData positive_roots(const GeneralizedCartanMatrix& g) {
  if (!finite_type_by_minors(g)) throw PreconditionError("positive_roots requires a finite-type Cartan matrix");
  auto closure = reflection_closure(g, kReflectionClosureCap);
  if (!closure.terminated) throw InternalFault("reflection closure exceeded its cap on a finite-type matrix");
  auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
  std::sort(closure.roots.begin(), closure.roots.end(), [&](const IntVector& x, const IntVector& y) {
    const auto hx = height(x);
    const auto hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  RootSystemData out;
  for (const auto& r : closure.roots) out.heights.push_back(height(r));
  out.positive_roots = std::move(closure.roots);
  return out;
}

namespace {

std::string connected_label(const GeneralizedCartanMatrix& g) {
  const std::size_t n = g.size();
  const std::size_t count = positive_roots(g).positive_roots.size();
  const auto d = *symmetrizer(g);
  const bool simply_laced = std::all_of(d.begin(), d.end(), [&](std::int64_t x) { return x == d[0]; });
  const std::string rank = std::to_string(n);
  if (simply_laced) {
    if (count == n * (n + 1) / 2) return "A" + rank;
    if (n >= 4 && count == n * (n - 1)) return "D" + rank;
    if (n == 6 && count == 36) return "E6";
    if (n == 7 && count == 63) return "E7";
    if (n == 8 && count == 120) return "E8";
  } else {
    if (n == 2 && count == 6) return "G2";
    if (n == 4 && count == 24) return "F4";
    if (count == n * n) {
      const auto top = *std::max_element(d.begin(), d.end());
      const auto long_roots = std::count(d.begin(), d.end(), top);
      return (n == 2 || long_roots > 1 ? "B" : "C") + rank;
    }
  }
  throw InternalFault("finite-type matrix with an unrecognized root count");
}

}  // namespace

std::string diagram_label(const GeneralizedCartanMatrix& g) {
  if (!is_finite_type(g)) return "indefinite";
  // larger components first, so that A2 + A1 reads "A2xA1" whatever the numbering
  std::vector<std::pair<std::size_t, std::string>> parts;
  for (const auto& comp : g.components()) parts.emplace_back(comp.size(), connected_label(g.restrict_to(comp)));
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  std::string out;
  for (const auto& [size, label] : parts) {
    if (!out.empty()) out += "x";
    out += label;
  }
  return out;
}

}  // namespace nichols
