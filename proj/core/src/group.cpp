#include "nichols/group.hpp"

#include <utility>

#include "nichols/errors.hpp"

namespace nichols {

GroupData::GroupData(IntVector invariant_factors) : E_(std::move(invariant_factors)) {
  if (E_.empty()) throw PreconditionError("group needs at least one cyclic factor");
  for (std::size_t i = 0; i < E_.size(); ++i) {
    if (E_[i] < 1) throw PreconditionError("invariant factors must be positive");
    if (i + 1 < E_.size() && E_[i + 1] % E_[i] != 0)
      throw PreconditionError("invariant factors must form a divisibility chain");
  }
}

std::int64_t GroupData::order() const {
  std::int64_t n = 1;
  for (auto e : E_)
    if (__builtin_mul_overflow(n, e, &n)) throw ResourceGuardError("group order exceeds 64 bits", 64, 63);
  return n;
}

void GroupData::require_vector(const IntVector& v) const {
  if (v.size() != E_.size()) throw PreconditionError("exponent vector length does not match the group rank");
}

std::int64_t GroupData::pairing_exponent(const IntVector& chi, const IntVector& g) const {
  require_vector(chi);
  require_vector(g);
  const std::int64_t m = exponent();
  __int128 s = 0;
  for (std::size_t h = 0; h < E_.size(); ++h) {
    s += static_cast<__int128>(D(h)) * (chi[h] % E_[h]) * (g[h] % E_[h]);
    s %= m;
  }
  auto r = static_cast<std::int64_t>(s);
  return r < 0 ? r + m : r;
}

RootOfUnity GroupData::pairing(const IntVector& chi, const IntVector& g) const {
  return RootOfUnity(pairing_exponent(chi, g), exponent());
}

IntVector GroupData::reduce(const IntVector& v) const {
  require_vector(v);
  IntVector r(v.size());
  for (std::size_t h = 0; h < v.size(); ++h) {
    r[h] = v[h] % E_[h];
    if (r[h] < 0) r[h] += E_[h];
  }
  return r;
}

void RealizationData::validate() const {
  if (g.empty()) throw PreconditionError("realization needs at least one generator");
  if (g.size() != chi.size()) throw PreconditionError("realization needs as many characters as group elements");
  for (std::size_t i = 0; i < g.size(); ++i) {
    group.require_vector(g[i]);
    group.require_vector(chi[i]);
    if (group.pairing(chi[i], g[i]).is_one())
      throw PreconditionError("realization violates <chi(i), g(i)> != 1 at index " + std::to_string(i + 1));
  }
}

}  // namespace nichols
