#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace nichols {

// A root of unity exp(2*pi*i*num/den), stored as its exponent in Q/Z.
// Always canonical: 0 <= num < den and gcd(num, den) = 1, so the order is den.
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  // Primitive root of order `den` raised to `k`.
  static RootOfUnity from_exponent(std::int64_t k, std::int64_t den) { return {k, den}; }
  // Parses "num/den"; throws std::invalid_argument on malformed text.
  static RootOfUnity parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  std::int64_t order() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == 0; }
  bool has_odd_order() const noexcept { return den_ % 2 == 1; }

  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t k) const;

  // Exponent e with this = zeta_level^e, 0 <= e < level. Requires order | level.
  std::int64_t exponent_at(std::int64_t level) const;

  std::string to_string() const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline RootOfUnity mul(const RootOfUnity& a, const RootOfUnity& b) { return a * b; }
inline RootOfUnity pow(const RootOfUnity& a, std::int64_t k) { return a.pow(k); }

// The unique k in (lo, hi] with base^k == target.
// Returns nullopt when no such k exists. When hi - lo exceeds order(base) and
// several k match, throws AmbiguityError. Requires base != 1 and lo < hi.
std::optional<std::int64_t> discrete_log(const RootOfUnity& base, const RootOfUnity& target,
                                         std::int64_t lo, std::int64_t hi);

// The unique square root of odd order of an odd-order root of unity.
RootOfUnity odd_square_root(const RootOfUnity& r);

// Least common multiple of orders; 1 for an empty range.
std::int64_t lcm_of_orders(std::span<const RootOfUnity> roots);

}  // namespace nichols
