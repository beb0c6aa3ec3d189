#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nichols/cyclotomic.hpp"
#include "nichols/root_of_unity.hpp"

namespace nichols {

// An integer combination sum_e m_e * zeta_L^e kept as a dense multiplicity vector,
// without reduction modulo the cyclotomic polynomial. Addition and multiplication by
// roots of unity are cheap index shuffles; zero tests and equality go through
// CyclotomicInt, because distinct multiplicity vectors can denote the same number.
class RootSum {
 public:
  RootSum() : RootSum(1) {}
  explicit RootSum(std::int64_t level);

  static RootSum zero(std::int64_t level) { return RootSum(level); }
  static RootSum integer(std::int64_t level, std::int64_t n);
  static RootSum monomial(std::int64_t level, std::int64_t exponent, std::int64_t mult = 1);
  static RootSum of_root(const RootOfUnity& r, std::int64_t level, std::int64_t mult = 1);

  std::int64_t level() const noexcept { return level_; }
  const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }
  // True when every multiplicity is zero (sufficient, not necessary, for the value to vanish).
  bool is_trivially_zero() const;
  bool is_zero() const { return to_cyclotomic().is_zero(); }

  void add_monomial(std::int64_t exponent, std::int64_t mult);
  RootSum& operator+=(const RootSum& o);
  RootSum& operator-=(const RootSum& o);
  RootSum operator-() const;
  friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
  friend RootSum operator-(RootSum a, const RootSum& b) { return a -= b; }
  friend RootSum operator*(const RootSum& a, const RootSum& b);
  RootSum scaled(std::int64_t k) const;

  // Multiplication by zeta_L^e.
  RootSum rotated(std::int64_t e) const;
  RootSum rotated(const RootOfUnity& r) const { return rotated(r.exponent_at(level_)); }

  CyclotomicInt to_cyclotomic() const;
  std::string to_string() const;

  friend bool same_value(const RootSum& a, const RootSum& b) { return (a - b).is_zero(); }

 private:
  std::int64_t level_;
  std::vector<std::int64_t> mult_;
};

}  // namespace nichols
