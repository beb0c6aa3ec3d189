#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nichols/cyclotomic.hpp"
#include "nichols/root_of_unity.hpp"

namespace nichols {

// Laurent polynomial in one formal variable q with integer coefficients.
// No zero coefficient is ever stored.
class QPoly {
 public:
  QPoly() = default;
  static QPoly constant(std::int64_t c) { return monomial(0, c); }
  static QPoly monomial(int exponent, std::int64_t c = 1);

  const std::map<int, std::int64_t>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  std::int64_t coeff(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const { return scaled(-1); }
  QPoly scaled(std::int64_t k) const;
  // Multiplication by q^k.
  QPoly shifted(int k) const;
  // Substitution q -> q^k.
  QPoly substitute_power(int k) const;
  // Exact quotient; throws InternalFault when the division leaves a remainder.
  QPoly divide_exact(const QPoly& d) const;

  // Value at q = r as an element of Z[zeta_level]; requires order(r) | level.
  CyclotomicInt evaluate(const RootOfUnity& r, std::int64_t level) const;

  std::string to_string() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void add_term(int exponent, std::int64_t c);
  std::map<int, std::int64_t> t_;
};

// (n)_q = 1 + q + ... + q^{n-1}.
QPoly qinteger(int n);
// (n)!_q.
QPoly qfactorial(int n);
// Gaussian binomial coefficient from the Pascal-type recurrence; 0 <= i <= n.
QPoly qbinom(int n, int i);
// Symmetric versions [n]_q = (q^n - q^-n)/(q - q^-1), [n]!_q and [n, i]_q.
QPoly sym_qinteger(int n);
QPoly sym_qbinom(int n, int i);

struct IdentityReport {
  bool ok = true;
  std::string failure;  // identity name and n of the first failure
};

// Checks the Pascal recurrences and the factorial form of the Gaussian binomials, the
// binomial formula in an algebra with xy = q yx, (r)+q^r(s) = (r+s), the alternating sums
// (symmetric and both asymmetric forms) and the q -> q^2 comparison, for 1 <= n <= n_max.
IdentityReport qbinom_identity_suite(int n_max);

}  // namespace nichols
