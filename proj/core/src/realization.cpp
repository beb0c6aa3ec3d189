#include "nichols/realization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "nichols/dimension.hpp"
#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_small_prime(std::int64_t p) {
  if (!is_odd_prime(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
  if (p > 100) throw PreconditionError("exhaustive searches over Z/p are limited to p <= 100");
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  a = mod_pos(a, m);
  std::int64_t t = 0, nt = 1, r = m, nr = a;
  while (nr != 0) {
    const std::int64_t k = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - k * nt);
    std::tie(r, nr) = std::make_pair(nr, r - k * nr);
  }
  if (r != 1) throw PreconditionError("element is not invertible modulo " + std::to_string(m));
  return mod_pos(t, m);
}

// Cartan matrix of the realization g(i) = u^{g_i}, <chi(j), u> = q^{chi_j} over Z/p with
// q primitive, computed directly from the exponents alpha_ij = g_i chi_j.
// Returns false when some alpha_ii vanishes (then b_ii = 1).
bool zp_cartan(std::int64_t p, const std::vector<std::int64_t>& inv, const IntVector& g, const IntVector& chi,
               IntMatrix& a) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t aii = g[i] * chi[i] % p;
    if (aii == 0) return false;
    a[i][i] = 2;
    const std::int64_t inv_ii = inv[static_cast<std::size_t>(aii)];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::int64_t s = (g[i] * chi[j] + g[j] * chi[i]) % p;
      std::int64_t k = s * inv_ii % p;
      if (k > 0) k -= p;
      a[i][j] = k;
    }
  }
  return true;
}

// Finite-type verdicts and labels, memoized per Cartan matrix.
class FiniteTypeMemo {
 public:
  // nullopt when not of finite type
  const std::optional<std::string>& label(const IntMatrix& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    std::optional<std::string> v;
    if (plausible(a)) {
      GeneralizedCartanMatrix g(a);
      if (is_finite_type(g)) v = diagram_label(g);
    }
    return memo_.emplace(a, std::move(v)).first->second;
  }

  static bool plausible(const IntMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a[i][j] * a[j][i] > 3) return false;
    return true;
  }

 private:
  std::map<IntMatrix, std::optional<std::string>> memo_;
};

std::vector<std::int64_t> inverse_table(std::int64_t p) {
  std::vector<std::int64_t> inv(static_cast<std::size_t>(p), 0);
  for (std::int64_t x = 1; x < p; ++x) inv[static_cast<std::size_t>(x)] = inverse_mod(x, p);
  return inv;
}

IntVector matvec(const IntMatrix& m, const IntVector& v, const GroupData& group) {
  IntVector r(v.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    __int128 s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<__int128>(m[i][j]) * v[j];
    r[i] = static_cast<std::int64_t>(s % group.factor(i));
  }
  return group.reduce(r);
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

// Inverse of an invertible matrix over Z/n (n prime when the size exceeds 1).
IntMatrix inverse_matrix(const IntMatrix& m, std::int64_t n) {
  const std::size_t s = m.size();
  IntMatrix a = m;
  IntMatrix inv(s, IntVector(s, 0));
  for (std::size_t i = 0; i < s; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = c;
    while (piv < s && mod_pos(a[piv][c], n) == 0) ++piv;
    if (piv == s) throw InternalFault("automorphism matrix is singular");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const std::int64_t f = inverse_mod(a[c][c], n);
    for (std::size_t k = 0; k < s; ++k) {
      a[c][k] = mod_pos(a[c][k] * f, n);
      inv[c][k] = mod_pos(inv[c][k] * f, n);
    }
    for (std::size_t r = 0; r < s; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const std::int64_t t = a[r][c];
      for (std::size_t k = 0; k < s; ++k) {
        a[r][k] = mod_pos(a[r][k] - t * a[c][k], n);
        inv[r][k] = mod_pos(inv[r][k] - t * inv[c][k], n);
      }
    }
  }
  return inv;
}

std::vector<std::int64_t> flatten_key(const RealizationData& r) {
  std::vector<std::int64_t> key;
  for (std::size_t j = 0; j < r.theta(); ++j) {
    key.insert(key.end(), r.g[j].begin(), r.g[j].end());
    key.insert(key.end(), r.chi[j].begin(), r.chi[j].end());
  }
  return key;
}

struct AutomorphismPair {
  IntMatrix on_elements;    // Q
  IntMatrix on_characters;  // Q^{-T}
};

std::vector<AutomorphismPair> automorphism_pairs(const GroupData& group) {
  std::vector<AutomorphismPair> out;
  const std::int64_t n = group.factor(0);
  for (auto& q : automorphisms(group)) {
    IntMatrix cq = transpose(inverse_matrix(q, n));
    out.push_back({std::move(q), std::move(cq)});
  }
  return out;
}

RealizationData canonical_with(const RealizationData& r, const std::vector<AutomorphismPair>& autos) {
  const std::size_t n = r.theta();
  if (n > 8) throw ResourceGuardError("canonical form limited to rank 8", n, 8);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::optional<std::vector<std::int64_t>> best_key;
  RealizationData best = r;
  RealizationData cand = r;
  do {
    for (const auto& a : autos) {
      for (std::size_t j = 0; j < n; ++j) {
        cand.g[j] = matvec(a.on_elements, r.g[sigma[j]], r.group);
        cand.chi[j] = matvec(a.on_characters, r.chi[sigma[j]], r.group);
      }
      auto key = flatten_key(cand);
      if (!best_key || key < *best_key) {
        best_key = std::move(key);
        best = cand;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace

BraidingMatrix braiding_of(const RealizationData& r) {
  r.validate();
  const std::size_t n = r.theta();
  std::vector<std::vector<RootOfUnity>> b(n, std::vector<RootOfUnity>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = r.group.pairing(r.chi[j], r.g[i]);
  return BraidingMatrix(std::move(b));
}

std::string to_string(Rank2Diagram d) {
  switch (d) {
    case Rank2Diagram::A2:
      return "A2";
    case Rank2Diagram::B2:
      return "B2";
    case Rank2Diagram::G2:
      return "G2";
  }
  return "?";
}

RealizationData ZpRank2Params::realization() const {
  return RealizationData{GroupData({p}), {{1}, {mod_pos(b, p)}}, {{mod_pos(q_exp, p)}, {mod_pos(q_exp * d, p)}}};
}

bool is_odd_prime(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t k = 3; k * k <= n; k += 2)
    if (n % k == 0) return false;
  return true;
}

namespace {

std::int64_t rank2_weight(Rank2Diagram d) {
  switch (d) {
    case Rank2Diagram::A2:
      return 1;
    case Rank2Diagram::B2:
      return 2;
    case Rank2Diagram::G2:
      return 3;
  }
  return 0;
}

}  // namespace

std::vector<std::int64_t> rank2_solutions(std::int64_t p, Rank2Diagram diagram) {
  require_small_prime(p);
  if (diagram == Rank2Diagram::G2 && p == 3) throw PreconditionError("G2 over Z/3 is excluded by the normalization of a_ij");
  const std::int64_t w = rank2_weight(diagram);
  std::vector<std::int64_t> out;
  for (std::int64_t b = 0; b < p; ++b)
    if ((w * b * b + w * b + 1) % p == 0) out.push_back(b);
  return out;
}

std::int64_t rank2_partner(std::int64_t p, Rank2Diagram diagram, std::int64_t b) {
  if (diagram == Rank2Diagram::A2) return mod_pos(-1 - b, p);
  return inverse_mod(rank2_weight(diagram) * b, p);
}

bool exists_diagram_over_zp(std::int64_t p, const std::string& diagram) {
  if (!is_odd_prime(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
  std::size_t rank = 0;
  std::size_t pos = 0;
  while (pos < diagram.size()) {
    const auto next = diagram.find('x', pos);
    const std::string part = diagram.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2 || std::string("ABCDEFG").find(part[0]) == std::string::npos)
      throw PreconditionError("unrecognized diagram name: " + diagram);
    try {
      rank += static_cast<std::size_t>(std::stoul(part.substr(1)));
    } catch (const std::exception&) {
      throw PreconditionError("unrecognized diagram name: " + diagram);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (diagram == "A1" || diagram == "A1xA1") return true;
  if (diagram == "A2") return p == 3 || p % 3 == 1;
  if (diagram == "B2" || diagram == "C2") return p % 4 == 1;
  if (diagram == "G2") return p % 3 == 1;
  if (rank >= 3) return p == 3 && (diagram == "A2xA1" || diagram == "A2xA2");
  return false;
}

std::vector<RealizationData> rank3_search(std::int64_t p) {
  require_small_prime(p);
  const auto inv = inverse_table(p);
  FiniteTypeMemo memo;
  const GroupData group({p});
  const auto autos = automorphism_pairs(group);
  std::map<std::vector<std::int64_t>, RealizationData> classes;
  IntMatrix a(3, IntVector(3));
  IntVector g(3), chi(3);
  g[0] = 1;
  chi[0] = 1;
  for (std::int64_t b = 1; b < p; ++b)
    for (std::int64_t d = 1; d < p; ++d)
      for (std::int64_t e = 1; e < p; ++e)
        for (std::int64_t f = 1; f < p; ++f) {
          g[1] = b;
          g[2] = e;
          chi[1] = d;
          chi[2] = f;
          if (!zp_cartan(p, inv, g, chi, a)) continue;
          if (!FiniteTypeMemo::plausible(a) || !memo.label(a)) continue;
          // scaling every character by a unit keeps the Cartan matrix
          for (std::int64_t s = 1; s < p; ++s) {
            RealizationData r{group, {{g[0]}, {g[1]}, {g[2]}}, {{chi[0] * s % p}, {chi[1] * s % p}, {chi[2] * s % p}}};
            auto c = canonical_with(r, autos);
            classes.emplace(flatten_key(c), std::move(c));
          }
        }
  std::vector<RealizationData> out;
  for (auto& [key, r] : classes) out.push_back(std::move(r));
  return out;
}

ExcludedSearch excluded_matrix_search(std::int64_t p, const GeneralizedCartanMatrix& gcm) {
  require_small_prime(p);
  const std::size_t n = gcm.size();
  if (n < 2) throw PreconditionError("excluded_matrix_search needs rank at least 2");
  ExcludedSearch out;
  out.p = p;
  out.gcm = gcm;
  // alpha_ij = g_i chi_j; the pair (i, j) requires
  // alpha_ij + alpha_ji = a_ij alpha_ii = a_ji alpha_jj (mod p).
  auto pair_ok = [&](std::size_t i, std::size_t j, const IntVector& g, const IntVector& chi) {
    const std::int64_t s = mod_pos(g[i] * chi[j] + g[j] * chi[i], p);
    return s == mod_pos(gcm(i, j) * g[i] * chi[i], p) && s == mod_pos(gcm(j, i) * g[j] * chi[j], p);
  };
  IntVector g(n, 0), chi(n, 0);
  g[0] = 1;
  chi[0] = 1;
  out.pair_solutions.resize(n - 1);
  for (std::size_t j = 1; j < n; ++j)
    for (std::int64_t x = 1; x < p; ++x)
      for (std::int64_t y = 1; y < p; ++y) {
        g[j] = x;
        chi[j] = y;
        if (pair_ok(0, j, g, chi)) out.pair_solutions[j - 1].emplace_back(x, y);
      }
  std::vector<std::size_t> pick(n - 1, 0);
  for (const auto& s : out.pair_solutions)
    if (s.empty()) return out;
  while (true) {
    for (std::size_t j = 1; j < n; ++j) {
      g[j] = out.pair_solutions[j - 1][pick[j - 1]].first;
      chi[j] = out.pair_solutions[j - 1][pick[j - 1]].second;
    }
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = pair_ok(i, j, g, chi);
    if (ok) {
      // the congruences pin a_ij only modulo p; keep the solution only if the
      // normalized Cartan matrix of the realization really is `gcm`
      RealizationData r{GroupData({p}), {}, {}};
      for (std::size_t j = 0; j < n; ++j) {
        r.g.push_back({g[j]});
        r.chi.push_back({chi[j]});
      }
      const auto ct = cartan_type(braiding_of(r));
      if (ct && ct->gcm == gcm) {
        IntVector sol;
        for (std::size_t j = 1; j < n; ++j) sol.push_back(g[j]);
        for (std::size_t j = 1; j < n; ++j) sol.push_back(chi[j]);
        out.solutions.push_back(std::move(sol));
      }
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == out.pair_solutions[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

std::vector<std::pair<std::int64_t, GeneralizedCartanMatrix>> excluded_matrices() {
  using G = GeneralizedCartanMatrix;
  return {
      {3, G({{2, -2, -1}, {-1, 2, -1}, {-2, -1, 2}})},
      {3, G({{2, -2, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {-1, 0, -1, 2}})},
      {5, G({{2, -3, -1}, {-1, 2, -1}, {-2, -1, 2}})},
      {5, G({{2, -3, -1}, {-1, 2, -2}, {-1, -1, 2}})},
      {7, G({{2, -3, -1}, {-1, 2, -1}, {-3, -2, 2}})},
      {7, G({{2, -2, -1}, {-1, 2, -2}, {-2, -1, 2}})},
      {11, G({{2, -3, -1}, {-1, 2, -2}, {-2, -1, 2}})},
      {13, G({{2, -3, -1}, {-1, 2, -3}, {-3, -1, 2}})},
      {17, G({{2, -3, -1}, {-1, 2, -2}, {-3, -1, 2}})},
  };
}

std::vector<IntMatrix> automorphisms(const GroupData& group) {
  const std::size_t s = group.rank();
  const std::int64_t n = group.factor(0);
  for (auto e : group.factors())
    if (e != n) throw PreconditionError("automorphisms are enumerated for cyclic or elementary abelian groups only");
  if (s > 1 && !(n == 2 || is_odd_prime(n)))
    throw PreconditionError("automorphisms are enumerated for cyclic or elementary abelian groups only");
  std::vector<IntMatrix> out;
  if (s == 1) {
    for (std::int64_t a = 1; a <= n; ++a)
      if (std::gcd(a, n) == 1) out.push_back({{a % n}});
    return out;
  }
  // |GL_s(F_n)| = prod (n^s - n^i)
  double gl = 1;
  double ns = 1;
  for (std::size_t i = 0; i < s; ++i) ns *= static_cast<double>(n);
  double ni = 1;
  for (std::size_t i = 0; i < s; ++i) {
    gl *= ns - ni;
    ni *= static_cast<double>(n);
  }
  double all = 1;
  for (std::size_t i = 0; i < s * s; ++i) all *= static_cast<double>(n);
  if (gl > static_cast<double>(kAutomorphismGuard) || all > 20.0 * kAutomorphismGuard)
    throw ResourceGuardError("automorphism group too large to enumerate", static_cast<std::size_t>(gl), kAutomorphismGuard);
  const auto total = static_cast<std::int64_t>(all);
  for (std::int64_t code = 0; code < total; ++code) {
    IntMatrix m(s, IntVector(s));
    std::int64_t c = code;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        m[i][j] = c % n;
        c /= n;
      }
    // rank check by elimination mod n
    IntMatrix a = m;
    bool invertible = true;
    for (std::size_t col = 0; col < s && invertible; ++col) {
      std::size_t piv = col;
      while (piv < s && a[piv][col] == 0) ++piv;
      if (piv == s) {
        invertible = false;
        break;
      }
      std::swap(a[piv], a[col]);
      const std::int64_t f = inverse_mod(a[col][col], n);
      for (std::size_t r = col + 1; r < s; ++r) {
        const std::int64_t t = a[r][col] * f % n;
        for (std::size_t k = col; k < s; ++k) a[r][k] = mod_pos(a[r][k] - t * a[col][k], n);
      }
    }
    if (invertible) out.push_back(std::move(m));
  }
  return out;
}

bool iso_equivalent(const RealizationData& r1, const RealizationData& r2) {
  r1.validate();
  r2.validate();
  if (!(r1.group == r2.group)) throw PreconditionError("iso_equivalent requires realizations over the same group");
  if (r1.theta() != r2.theta()) return false;
  const std::size_t n = r1.theta();
  if (n > 8) throw ResourceGuardError("iso_equivalent limited to rank 8", n, 8);
  const auto autos = automorphisms(r1.group);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  do {
    for (const auto& P : autos) {
      bool ok = true;
      const IntMatrix Pt = transpose(P);
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = matvec(P, r1.g[j], r1.group) == r2.group.reduce(r2.g[sigma[j]]) &&
             r1.group.reduce(r1.chi[j]) == matvec(Pt, r2.chi[sigma[j]], r1.group);
      if (ok) return true;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

RealizationData canonical_form(const RealizationData& r) {
  r.validate();
  return canonical_with(r, automorphism_pairs(r.group));
}

const ZpFamily* ZpClassification::find(const std::string& diagram) const {
  for (const auto& f : families)
    if (f.diagram == diagram) return &f;
  return nullptr;
}

std::size_t ZpClassification::count(const std::string& diagram) const {
  const auto* f = find(diagram);
  return f ? f->classes.size() : 0;
}

ZpClassification classify_zp(std::int64_t p) {
  require_small_prime(p);
  const auto inv = inverse_table(p);
  const GroupData group({p});
  const auto autos = automorphism_pairs(group);
  FiniteTypeMemo memo;
  struct Acc {
    std::size_t rank = 0;
    std::map<std::vector<std::int64_t>, ZpClass> classes;
  };
  std::map<std::string, Acc> acc;
  const std::size_t max_rank = p == 3 ? 4 : 2;
  for (std::size_t theta = 1; theta <= max_rank; ++theta) {
    IntMatrix a(theta, IntVector(theta));
    IntVector g(theta, 1), chi(theta, 1);
    // odometer over chi(1) and (g(j), chi(j)) for j >= 2, all in [1, p)
    std::vector<std::int64_t*> digits{&chi[0]};
    for (std::size_t j = 1; j < theta; ++j) {
      digits.push_back(&g[j]);
      digits.push_back(&chi[j]);
    }
    while (true) {
      if (zp_cartan(p, inv, g, chi, a) && FiniteTypeMemo::plausible(a)) {
        if (const auto& label = memo.label(a)) {
          RealizationData r{group, {}, {}};
          for (std::size_t j = 0; j < theta; ++j) {
            r.g.push_back({g[j]});
            r.chi.push_back({chi[j]});
          }
          auto c = canonical_with(r, autos);
          auto& fam = acc[*label];
          fam.rank = theta;
          auto [it, fresh] = fam.classes.try_emplace(flatten_key(c));
          if (fresh) it->second.representative = std::move(c);
          ++it->second.members;
        }
      }
      std::size_t k = 0;
      while (k < digits.size() && ++*digits[k] == p) *digits[k++] = 1;
      if (k == digits.size()) break;
    }
  }
  ZpClassification out;
  out.p = p;
  for (auto& [label, fam] : acc) {
    ZpFamily f;
    f.diagram = label;
    f.rank = fam.rank;
    for (auto& [key, cls] : fam.classes) f.classes.push_back(std::move(cls));
    const auto b = braiding_of(f.classes.front().representative);
    f.nichols_dimension = nichols_dimension(b, *cartan_type(b));
    f.bosonization_dimension = f.nichols_dimension * p;
    out.families.push_back(std::move(f));
  }
  std::sort(out.families.begin(), out.families.end(), [](const ZpFamily& x, const ZpFamily& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    return x.diagram < y.diagram;
  });
  return out;
}

}  // namespace nichols
