#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"

namespace nichols {

// Letters are 0-based indices into the braiding.
using Word = std::vector<std::size_t>;

// Expansions (products, coproducts) refuse to produce more terms than this.
inline constexpr std::size_t kTermGuard = 1'000'000;

// Element of the free algebra T(V) over Z[zeta_L], L = braiding level.
class BraidedPoly {
 public:
  explicit BraidedPoly(BraidingMatrix b);

  static BraidedPoly unit(const BraidingMatrix& b);
  static BraidedPoly letter(const BraidingMatrix& b, std::size_t i);
  static BraidedPoly monomial(const BraidingMatrix& b, Word w);

  const BraidingMatrix& braiding() const noexcept { return b_; }
  std::int64_t level() const noexcept { return level_; }
  const std::map<Word, CyclotomicInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  CyclotomicInt coeff(const Word& w) const;

  void add_term(const Word& w, const CyclotomicInt& c);

  // Common multidegree of all words; nullopt for zero or inhomogeneous elements.
  std::optional<std::vector<std::int64_t>> multidegree() const;

  BraidedPoly scaled(const CyclotomicInt& c) const;
  BraidedPoly scaled(const RootOfUnity& r) const;
  BraidedPoly& operator+=(const BraidedPoly& o);
  BraidedPoly& operator-=(const BraidedPoly& o);
  friend BraidedPoly operator+(BraidedPoly a, const BraidedPoly& b) { return a += b; }
  friend BraidedPoly operator-(BraidedPoly a, const BraidedPoly& b) { return a -= b; }

  // 1-based letters, e.g. "x1x2 - (zeta^2)*x2x1".
  std::string to_string() const;

  friend bool operator==(const BraidedPoly& a, const BraidedPoly& b) {
    return a.b_ == b.b_ && a.terms_ == b.terms_;
  }

 private:
  BraidingMatrix b_;
  std::int64_t level_;
  std::map<Word, CyclotomicInt> terms_;
};

BraidedPoly multiply(const BraidedPoly& a, const BraidedPoly& b);
inline BraidedPoly operator*(const BraidedPoly& a, const BraidedPoly& b) { return multiply(a, b); }

// Element of T(V) (x) T(V) with the braided product (u (x) v)(u' (x) v') = chi scalar * uu' (x) vv'.
class BraidedPolyTensor {
 public:
  explicit BraidedPolyTensor(BraidingMatrix b);

  const BraidingMatrix& braiding() const noexcept { return b_; }
  std::int64_t level() const noexcept { return level_; }
  const std::map<std::pair<Word, Word>, CyclotomicInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  CyclotomicInt coeff(const Word& left, const Word& right) const;

  void add_term(const Word& left, const Word& right, const CyclotomicInt& c);

  BraidedPolyTensor& operator+=(const BraidedPolyTensor& o);
  BraidedPolyTensor& operator-=(const BraidedPolyTensor& o);
  friend BraidedPolyTensor operator+(BraidedPolyTensor a, const BraidedPolyTensor& b) { return a += b; }
  friend BraidedPolyTensor operator-(BraidedPolyTensor a, const BraidedPolyTensor& b) { return a -= b; }
  friend BraidedPolyTensor operator*(const BraidedPolyTensor& a, const BraidedPolyTensor& b);

  friend bool operator==(const BraidedPolyTensor& a, const BraidedPolyTensor& b) {
    return a.b_ == b.b_ && a.terms_ == b.terms_;
  }

 private:
  BraidingMatrix b_;
  std::int64_t level_;
  std::map<std::pair<Word, Word>, CyclotomicInt> terms_;
};

// a (x) b as a plain tensor.
BraidedPolyTensor tensor(const BraidedPoly& a, const BraidedPoly& b);

// The algebra map with every letter primitive, as a product of letter coproducts.
BraidedPolyTensor coproduct(const BraidedPoly& a);
// Same map from the closed subset expansion of each word; used as a cross-check.
BraidedPolyTensor coproduct_by_subsets(const BraidedPoly& a);

// Braided adjoint of the letter x_i on a homogeneous v. Throws PreconditionError otherwise.
BraidedPoly ad_c(std::size_t i, const BraidedPoly& v);

// (ad_c x_i)^{1 - a_ij} x_j.
BraidedPoly serre_element(const BraidingMatrix& b, std::size_t i, std::size_t j, std::int64_t a_ij);
// Sum_k (-1)^k binom(r,k)_{b_ii} b_ii^{k(k-1)/2} b_ij^k x_i^{r-k} x_j x_i^k.
BraidedPoly serre_closed_form(const BraidingMatrix& b, std::size_t i, std::size_t j, std::int64_t r);

bool is_primitive(const BraidedPoly& z);

// b_ij b_ji b_ii^{r-1}; the Serre element with exponent r is primitive when this is 1.
RootOfUnity serre_condition_value(const BraidingMatrix& b, std::size_t i, std::size_t j, std::int64_t r);

// Normalized coefficients alpha_k of x_i^k x_j x_i^{r-k} in (ad_c x_i)^r x_j:
// alpha_k = (-1)^k binom(r,k)_{b_ii} b_ii^{(k^2+k)/2 - rk} b_ij^{-k}.
std::vector<CyclotomicInt> serre_normalized_coefficients(const BraidingMatrix& b, std::size_t i, std::size_t j,
                                                         std::int64_t r);

// Left-hand sides of the two linear systems whose vanishing makes
// sum_k alpha_k x_i^k x_j x_i^{r-k} primitive: first every (l, h) with l + h < r,
// then every (u, v) with u + v < r, each in lexicographic order.
std::vector<CyclotomicInt> serre_system_residuals(const BraidingMatrix& b, std::size_t i, std::size_t j,
                                                  std::int64_t r, const std::vector<CyclotomicInt>& alpha);

}  // namespace nichols
