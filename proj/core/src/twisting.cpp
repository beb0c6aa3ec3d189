#include "nichols/twisting.hpp"

#include <random>
#include <utility>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::int64_t mod_pos(__int128 a, std::int64_t m) {
  auto r = static_cast<std::int64_t>(a % m);
  return r < 0 ? r + m : r;
}

}  // namespace

CocycleData CocycleData::trivial(const GroupData& group) {
  return {group, IntMatrix(group.rank(), IntVector(group.rank(), 0))};
}

void CocycleData::validate() const {
  const std::size_t m = group.rank();
  if (c.size() != m) throw PreconditionError("cocycle matrix size does not match the group rank");
  for (std::size_t i = 0; i < m; ++i) {
    if (c[i].size() != m) throw PreconditionError("cocycle matrix must be square");
    for (std::size_t j = 0; j < m; ++j) {
      if (j <= i && c[i][j] != 0) throw PreconditionError("cocycle matrix must be strictly upper triangular");
      if (j > i && (c[i][j] < 0 || c[i][j] >= group.factor(i)))
        throw PreconditionError("cocycle entry c_ij must lie in [0, E_i)");
    }
  }
}

ExponentMatrix exponent_matrix_of(const RealizationData& r) {
  r.validate();
  const std::size_t n = r.theta();
  ExponentMatrix m{r.group, IntMatrix(n, IntVector(n)), r.chi, r.g};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.alpha[i][j] = r.group.pairing_exponent(r.chi[j], r.g[i]);
  return m;
}

BraidingMatrix braiding_of_exponents(const ExponentMatrix& m) {
  const std::size_t n = m.theta();
  std::vector<std::vector<RootOfUnity>> b(n, std::vector<RootOfUnity>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = RootOfUnity(m.alpha[i][j], m.group.exponent());
  return BraidingMatrix(std::move(b));
}

std::int64_t omega_exponent(const CocycleData& c, const IntVector& tau, const IntVector& chi) {
  c.group.require_vector(tau);
  c.group.require_vector(chi);
  const std::size_t m = c.group.rank();
  __int128 s = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (c.c[i][j] == 0) continue;
      s += static_cast<__int128>(c.group.D(i)) * c.c[i][j] * tau[j] * chi[i];
      s %= c.group.exponent();
    }
  return mod_pos(s, c.group.exponent());
}

RootOfUnity omega(const CocycleData& c, const IntVector& tau, const IntVector& chi) {
  return RootOfUnity(omega_exponent(c, tau, chi), c.group.exponent());
}

namespace {

IntVector add(const GroupData& g, const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) r[h] = a[h] + b[h];
  return g.reduce(r);
}

bool triple_ok(const GroupData& group, const CocycleFunction& w, const IntVector& t, const IntVector& z,
               const IntVector& e) {
  const IntVector zero(group.rank(), 0);
  if (!w(t, zero).is_one() || !w(zero, t).is_one()) return false;
  // w(t,z) w(tz,e) = w(t,ze) w(z,e)
  if (w(t, z) * w(add(group, t, z), e) != w(t, add(group, z, e)) * w(z, e)) return false;
  // w(tz,e) w(e,tz)^-1 w(z,e)^-1 w(e,z) = w(t,e) w(e,t)^-1, with e in the role of the fixed character
  const IntVector tz = add(group, t, z);
  return w(tz, e) / w(e, tz) / w(z, e) * w(e, z) == w(t, e) / w(e, t);
}

}  // namespace

bool cocycle_identity_check(const GroupData& group, const CocycleFunction& w, std::optional<std::size_t> samples,
                            std::uint64_t seed) {
  const std::size_t m = group.rank();
  if (samples) {
    std::mt19937_64 rng(seed);
    auto draw = [&] {
      IntVector v(m);
      for (std::size_t h = 0; h < m; ++h)
        v[h] = std::uniform_int_distribution<std::int64_t>(0, group.factor(h) - 1)(rng);
      return v;
    };
    for (std::size_t s = 0; s < *samples; ++s) {
      const IntVector t = draw();
      const IntVector z = draw();
      const IntVector e = draw();
      if (!triple_ok(group, w, t, z, e)) return false;
    }
    return true;
  }
  const std::int64_t n = group.order();
  if (n > 60) throw ResourceGuardError("exhaustive cocycle check limited to groups of order 60", static_cast<std::size_t>(n), 60);
  std::vector<IntVector> all;
  for (std::int64_t k = 0; k < n; ++k) {
    IntVector v(m);
    std::int64_t r = k;
    for (std::size_t h = 0; h < m; ++h) {
      v[h] = r % group.factor(h);
      r /= group.factor(h);
    }
    all.push_back(std::move(v));
  }
  for (const auto& t : all)
    for (const auto& z : all)
      for (const auto& e : all)
        if (!triple_ok(group, w, t, z, e)) return false;
  return true;
}

bool cocycle_identity_check(const CocycleData& c, std::optional<std::size_t> samples, std::uint64_t seed) {
  c.validate();
  return cocycle_identity_check(
      c.group, [&c](const IntVector& t, const IntVector& x) { return omega(c, t, x); }, samples, seed);
}

IntVector twisted_group_element(const CocycleData& c, const IntVector& g, const IntVector& chi) {
  c.group.require_vector(g);
  c.group.require_vector(chi);
  const std::size_t m = c.group.rank();
  IntVector out(m);
  for (std::size_t j = 0; j < m; ++j) {
    __int128 s = g[j];
    for (std::size_t i = 0; i < j; ++i)
      s += static_cast<__int128>(c.group.factor(j) / c.group.factor(i)) * c.c[i][j] * chi[i];
    for (std::size_t h = j + 1; h < m; ++h) s -= static_cast<__int128>(c.c[j][h]) * chi[h];
    out[j] = mod_pos(s, c.group.factor(j));
  }
  return out;
}

ExponentMatrix twist_exponents(const ExponentMatrix& m, const CocycleData& c) {
  c.validate();
  if (!(c.group == m.group)) throw PreconditionError("cocycle and realization live on different groups");
  const std::size_t n = m.theta();
  const std::size_t M = m.group.rank();
  const std::int64_t E = m.group.exponent();
  ExponentMatrix out{m.group, IntMatrix(n, IntVector(n)), m.chi, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      __int128 s = m.alpha[i][j];
      for (std::size_t t = 0; t < M; ++t)
        for (std::size_t h = t + 1; h < M; ++h) {
          if (c.c[t][h] == 0) continue;
          s += static_cast<__int128>(m.group.D(t)) * c.c[t][h] *
               (static_cast<__int128>(m.chi[j][h]) * m.chi[i][t] - static_cast<__int128>(m.chi[j][t]) * m.chi[i][h]);
          s %= E;
        }
      out.alpha[i][j] = mod_pos(s, E);
    }
  for (std::size_t i = 0; i < n; ++i) out.g.push_back(twisted_group_element(c, m.g[i], m.chi[i]));
  // the exponent formula and the group-element formula describe the same braiding
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.group.pairing_exponent(out.chi[j], out.g[i]) != out.alpha[i][j])
        throw InternalFault("twisted exponents disagree with the twisted group elements");
  return out;
}

ExponentMatrix realize_over_group(const BraidingMatrix& b) {
  const std::size_t n = b.theta();
  IntVector E(n, 1);
  std::int64_t running = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) running = std::lcm(running, b(i, j).order());
    E[j] = running;
  }
  GroupData group(E);
  RealizationData r{group, std::vector<IntVector>(n, IntVector(n, 0)), std::vector<IntVector>(n, IntVector(n, 0))};
  for (std::size_t j = 0; j < n; ++j) r.chi[j][j] = 1;
  // b_ij = <gamma(j), g(i)> = q_j^{g(i)_j}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.g[i][j] = b(i, j).exponent_at(E[j]);
  ExponentMatrix m{group, IntMatrix(n, IntVector(n)), r.chi, r.g};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.alpha[i][j] = group.pairing_exponent(r.chi[j], r.g[i]);
  if (!(braiding_of_exponents(m) == b)) throw InternalFault("realization does not reproduce the braiding");
  return m;
}

Symmetrization symmetrize(const BraidingMatrix& b) {
  if (!b.has_odd_order()) throw PreconditionError("symmetrize requires entries of odd order");
  const auto ct = cartan_type(b);
  if (!ct) throw PreconditionError("symmetrize requires a braiding of Cartan type");
  ExponentMatrix m = realize_over_group(b);
  const std::size_t n = b.theta();
  const GroupData& group = m.group;
  const std::int64_t E = group.exponent();
  const std::int64_t half = (E + 1) / 2;  // inverse of 2 modulo the odd exponent
  CocycleData c = CocycleData::trivial(group);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const __int128 tilde = 2 * static_cast<__int128>(m.g[j][i]) - static_cast<__int128>(ct->gcm(i, j)) * m.g[i][i];
      c.c[i][j] = mod_pos(mod_pos(tilde, E) * static_cast<__int128>(half), group.factor(i));
    }
  ExponentMatrix twisted = twist_exponents(m, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (twisted.alpha[i][i] != m.alpha[i][i]) throw InternalFault("symmetrize changed a diagonal entry");
    for (std::size_t j = 0; j < n; ++j)
      if (twisted.alpha[i][j] != twisted.alpha[j][i]) throw InternalFault("symmetrize produced a non-symmetric braiding");
  }
  return {std::move(m), std::move(c), std::move(twisted)};
}

}  // namespace nichols
