#include "nichols/braiding.hpp"

#include <numeric>
#include <utility>

#include "nichols/errors.hpp"

namespace nichols {

BraidingMatrix::BraidingMatrix(std::vector<std::vector<RootOfUnity>> entries) : b_(std::move(entries)) {
  if (b_.empty()) throw PreconditionError("braiding matrix must have rank at least 1");
  for (const auto& row : b_)
    if (row.size() != b_.size()) throw PreconditionError("braiding matrix must be square");
}

bool BraidingMatrix::has_odd_order() const {
  for (const auto& row : b_)
    for (const auto& e : row)
      if (!e.has_odd_order()) return false;
  return true;
}

std::int64_t BraidingMatrix::level() const {
  std::int64_t l = 1;
  for (const auto& row : b_) l = std::lcm(l, lcm_of_orders(row));
  return l;
}

BraidingMatrix BraidingMatrix::restrict_to(const std::vector<std::size_t>& idx) const {
  std::vector<std::vector<RootOfUnity>> sub(idx.size(), std::vector<RootOfUnity>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = b_[idx[r]][idx[c]];
  return BraidingMatrix(std::move(sub));
}

std::optional<CartanTypeResult> cartan_type(const BraidingMatrix& b) {
  const std::size_t n = b.theta();
  IntMatrix a(n, IntVector(n, 0));
  IntVector orders(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i).is_one()) return std::nullopt;
    orders[i] = b(i, i).order();
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto k = discrete_log(b(i, i), b(i, j) * b(j, i), -orders[i], 0);
      if (!k) return std::nullopt;
      a[i][j] = *k;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw InternalFault("Cartan zero pattern is not symmetric");
  return CartanTypeResult{GeneralizedCartanMatrix(std::move(a)), std::move(orders)};
}

std::vector<std::vector<std::size_t>> connected_components(const BraidingMatrix& b) {
  const std::size_t n = b.theta();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(b(i, j) * b(j, i)).is_one()) {
        const auto ri = find(i);
        const auto rj = find(j);
        parent[std::max(ri, rj)] = std::min(ri, rj);
      }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

bool is_symmetric(const BraidingMatrix& b) {
  for (std::size_t i = 0; i < b.theta(); ++i)
    for (std::size_t j = i + 1; j < b.theta(); ++j)
      if (b(i, j) != b(j, i)) return false;
  return true;
}

namespace {

void require_odd(const BraidingMatrix& b, const char* what) {
  if (!b.has_odd_order()) throw PreconditionError(std::string(what) + " requires entries of odd order");
}

bool replays(const BraidingMatrix& b, const GeneralizedCartanMatrix& g, const IntVector& d, const RootOfUnity& q,
             const std::vector<std::size_t>& idx) {
  for (std::size_t i : idx)
    for (std::size_t j : idx)
      if (q.pow(d[i] * g(i, j)) != b(i, j)) return false;
  return true;
}

}  // namespace

FLSearch fl_witness(const BraidingMatrix& b, const CartanTypeResult& ct) {
  require_odd(b, "fl_witness");
  const auto& g = ct.gcm;
  const std::size_t n = b.theta();
  if (g.size() != n) throw PreconditionError("fl_witness: Cartan data does not match the braiding");
  const auto sym = symmetrizer(g);
  if (!sym) return {std::nullopt, FLAbsence::NonSymmetrizable};
  const auto comps = g.components();
  // entries between components must equal q^0 = 1
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t i : comps[c]) comp_of[i] = c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (comp_of[i] != comp_of[j] && !b(i, j).is_one()) return {std::nullopt, FLAbsence::NotFLType};

  // Per component the symmetrizer is unique up to a factor that can be absorbed into q,
  // so searching q over the L-th roots of unity with the normalized d is exhaustive.
  std::vector<RootOfUnity> qs;
  for (const auto& comp : comps) {
    std::int64_t L = 1;
    for (std::size_t i : comp) L = std::lcm(L, 2 * (*sym)[i] * ct.diagonal_orders[i]);
    std::optional<RootOfUnity> found;
    for (std::int64_t t = 1; t < L && !found; ++t) {
      const RootOfUnity q(t, L);
      if (replays(b, g, *sym, q, comp)) found = q;
    }
    if (!found) return {std::nullopt, FLAbsence::NotFLType};
    qs.push_back(*found);
  }
  // One q for all components: q_I = q^{m_I} with q a primitive M-th root, M = lcm of orders.
  const std::int64_t M = lcm_of_orders(qs);
  IntVector d(n);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::int64_t m = qs[c].exponent_at(M);
    for (std::size_t i : comps[c]) d[i] = (*sym)[i] * m;
  }
  std::int64_t common = 0;
  for (auto x : d) common = std::gcd(common, x);
  for (auto& x : d) x /= common;
  const RootOfUnity q = RootOfUnity(1, M).pow(common);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (!replays(b, g, d, q, all)) throw InternalFault("fl_witness: combined witness does not replay");
  return {FLWitness{std::move(d), q}, FLAbsence::NotFLType};
}

bool fl_rank2_criterion(const BraidingMatrix& b, const CartanTypeResult& ct) {
  if (b.theta() != 2) throw PreconditionError("fl_rank2_criterion requires rank 2");
  require_odd(b, "fl_rank2_criterion");
  if (!is_symmetric(b)) throw PreconditionError("fl_rank2_criterion requires a symmetric braiding");
  const std::int64_t a12 = ct.gcm(0, 1);
  const std::int64_t a21 = ct.gcm(1, 0);
  if (a12 == 0) throw PreconditionError("fl_rank2_criterion requires a connected braiding");
  const std::int64_t g = std::gcd(-a12, -a21);
  const std::int64_t d1 = -a21 / g;
  const std::int64_t d2 = -a12 / g;
  const std::int64_t N1 = ct.diagonal_orders[0];
  const std::int64_t N2 = ct.diagonal_orders[1];
  const std::int64_t r = std::lcm(d1 * N1, d2 * N2);
  const std::int64_t e1 = r / (d1 * N1);
  const std::int64_t e2 = r / (d2 * N2);
  const std::int64_t s = r / (d1 * d2);
  // xi = exp(2 pi i / r), so xi^{e_i d_i} = exp(2 pi i / N_i) and k_i is the numerator of b_ii.
  const std::int64_t k1 = b(0, 0).num();
  const std::int64_t k2 = b(1, 1).num();
  const std::int64_t diff = ((e1 * k1 - e2 * k2) % s + s) % s;
  return diff == 0;
}

BraidingMatrix symmetric_companion(const BraidingMatrix& b) {
  require_odd(b, "symmetric_companion");
  auto e = b.entries();
  for (std::size_t i = 0; i < b.theta(); ++i)
    for (std::size_t j = 0; j < b.theta(); ++j)
      if (i != j) e[i][j] = odd_square_root(b(i, j) * b(j, i));
  return BraidingMatrix(std::move(e));
}

bool is_locally_fl(const BraidingMatrix& b, const CartanTypeResult& ct) {
  require_odd(b, "is_locally_fl");
  const std::size_t n = b.theta();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const BraidingMatrix sub = symmetric_companion(b.restrict_to({i, j}));
      const CartanTypeResult sub_ct{ct.gcm.restrict_to({i, j}), {ct.diagonal_orders[i], ct.diagonal_orders[j]}};
      if (!fl_witness(sub, sub_ct)) return false;
    }
  return true;
}

}  // namespace nichols
