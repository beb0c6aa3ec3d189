#include "nichols/root_of_unity.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::int64_t mod_floor(__int128 a, std::int64_t m) {
  auto r = static_cast<std::int64_t>(a % m);
  return r < 0 ? r + m : r;
}

}  // namespace

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
  num = mod_floor(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("root of unity must be written as \"num/den\": " + std::string(text));
  std::int64_t num = 0;
  std::int64_t den = 0;
  const auto lhs = text.substr(0, slash);
  const auto rhs = text.substr(slash + 1);
  auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), num);
  auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), den);
  if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc{} ||
      r2.ptr != rhs.data() + rhs.size() || den <= 0)
    throw std::invalid_argument("malformed root of unity: " + std::string(text));
  return {num, den};
}

RootOfUnity RootOfUnity::inverse() const { return {-num_, den_}; }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  return {mod_floor(static_cast<__int128>(num_) * k, den_), den_};
}

std::int64_t RootOfUnity::exponent_at(std::int64_t level) const {
  if (level <= 0 || level % den_ != 0)
    throw PreconditionError("root " + to_string() + " is not a power of zeta_" + std::to_string(level));
  return num_ * (level / den_);
}

std::string RootOfUnity::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  const __int128 n = static_cast<__int128>(a.num_) * (l / a.den_) + static_cast<__int128>(b.num_) * (l / b.den_);
  return {mod_floor(n, l), l};
}

std::optional<std::int64_t> discrete_log(const RootOfUnity& base, const RootOfUnity& target,
                                         std::int64_t lo, std::int64_t hi) {
  if (base.is_one()) throw PreconditionError("discrete_log: base must not be 1");
  if (lo >= hi) throw PreconditionError("discrete_log: empty interval");
  // target must lie in the cyclic group generated by base
  if (base.order() % target.order() != 0) return std::nullopt;
  const std::int64_t n = base.order();
  // base^k = target  <=>  k * base.num == target.num * (n / target.den)  (mod n)
  const std::int64_t t = target.num() * (n / target.den());
  // base.num is a unit mod n; find the residue class k0 by a direct scan.
  std::int64_t k0 = -1;
  for (std::int64_t k = 0; k < n; ++k) {
    if (mod_floor(static_cast<__int128>(k) * base.num(), n) == t) {
      k0 = k;
      break;
    }
  }
  if (k0 < 0) return std::nullopt;
  // smallest k > lo with k = k0 mod n
  std::int64_t first = lo + 1 + mod_floor(static_cast<__int128>(k0) - (lo + 1), n);
  if (first > hi) return std::nullopt;
  if (first + n <= hi)
    throw AmbiguityError("discrete_log: several exponents in (" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  return first;
}

RootOfUnity odd_square_root(const RootOfUnity& r) {
  if (!r.has_odd_order()) throw PreconditionError("odd_square_root: " + r.to_string() + " has even order");
  return r.pow((r.order() + 1) / 2);
}

std::int64_t lcm_of_orders(std::span<const RootOfUnity> roots) {
  std::int64_t l = 1;
  for (const auto& r : roots) l = std::lcm(l, r.order());
  return l;
}

}  // namespace nichols
