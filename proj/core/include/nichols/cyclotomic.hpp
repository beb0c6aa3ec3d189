#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nichols/root_of_unity.hpp"

namespace nichols {

std::int64_t euler_phi(std::int64_t n);

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

namespace detail {
struct LevelTable;
const LevelTable& level_table(std::int64_t level);
}  // namespace detail

// An element of Z[zeta_N] in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class CyclotomicInt {
 public:
  CyclotomicInt() : CyclotomicInt(1) {}
  explicit CyclotomicInt(std::int64_t level);

  static CyclotomicInt zero(std::int64_t level) { return CyclotomicInt(level); }
  static CyclotomicInt integer(std::int64_t level, const mpz_class& value);
  static CyclotomicInt one(std::int64_t level) { return integer(level, 1); }
  // zeta_N^e for any integer e.
  static CyclotomicInt zeta_power(std::int64_t level, std::int64_t e);
  // The root r embedded at `level`; requires order(r) | level.
  static CyclotomicInt from_root(const RootOfUnity& r, std::int64_t level);
  // Builds from arbitrary-length coordinates in 1, zeta, zeta^2, ... and reduces.
  static CyclotomicInt from_powers(std::int64_t level, const std::vector<mpz_class>& powers);

  std::int64_t level() const noexcept { return level_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  bool is_rational_integer() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o) { return *this = *this * o; }
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
  }

  // Multiplication by zeta_N^e.
  CyclotomicInt times_zeta(std::int64_t e) const;
  // The Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CyclotomicInt conjugate(std::int64_t k) const;
  // Product of all Galois conjugates except the identity one.
  CyclotomicInt conjugate_product() const;
  // Field norm down to Z.
  mpz_class norm() const;
  // The quotient this / d, which must exist in Z[zeta_N]; throws InternalFault otherwise.
  CyclotomicInt divide_exact(const CyclotomicInt& d) const;

  std::string to_string() const;

 private:
  std::int64_t level_;
  const detail::LevelTable* table_;
  std::vector<mpz_class> coeffs_;
};

using CyclotomicMatrix = std::vector<std::vector<CyclotomicInt>>;

// Rank over Q(zeta_N) by fraction-free elimination. All entries must share one level.
std::size_t cyc_rank(CyclotomicMatrix m);

}  // namespace nichols
