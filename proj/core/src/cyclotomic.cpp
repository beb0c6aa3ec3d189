#include "nichols/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "nichols/errors.hpp"

namespace nichols {

namespace detail {

struct LevelTable {
  std::int64_t level = 1;
  std::int64_t phi = 1;
  std::vector<std::int64_t> poly;                 // Phi_N, constant term first, monic
  std::vector<std::vector<std::int64_t>> coords;  // coords[m] = zeta^m in the power basis, 0 <= m < N
  std::vector<std::int64_t> units;                // k in [1, N] with gcd(k, N) = 1, identity first
};

}  // namespace detail

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ResourceGuardError("cyclotomic table entry exceeds 64 bits", 64, 63);
  return static_cast<std::int64_t>(v);
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the numerator factors, then
// divide by the denominator factors (exact division by monic polynomials).
std::vector<std::int64_t> compute_cyclotomic(std::int64_t n) {
  std::vector<std::int64_t> num{1};
  std::vector<std::int64_t> dens;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> next(num.size() + static_cast<std::size_t>(d), 0);
      for (std::size_t k = 0; k < num.size(); ++k) {
        next[k] = checked(static_cast<__int128>(next[k]) - num[k]);
        next[k + static_cast<std::size_t>(d)] = checked(static_cast<__int128>(next[k + static_cast<std::size_t>(d)]) + num[k]);
      }
      num = std::move(next);
    } else if (mu == -1) {
      dens.push_back(d);
    }
  }
  for (std::int64_t d : dens) {
    // divide by x^d - 1: q_k = q_{k+d} + ... processed from the top
    const auto deg = static_cast<std::int64_t>(num.size()) - 1;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(deg - d + 1), 0);
    std::vector<std::int64_t> rem = num;
    for (std::int64_t k = deg; k >= d; --k) {
      const std::int64_t c = rem[static_cast<std::size_t>(k)];
      quot[static_cast<std::size_t>(k - d)] = c;
      rem[static_cast<std::size_t>(k)] = 0;
      rem[static_cast<std::size_t>(k - d)] = checked(static_cast<__int128>(rem[static_cast<std::size_t>(k - d)]) + c);
    }
    for (std::int64_t k = 0; k < d; ++k)
      if (rem[static_cast<std::size_t>(k)] != 0) throw InternalFault("cyclotomic polynomial division not exact");
    num = std::move(quot);
  }
  return num;
}

std::unique_ptr<detail::LevelTable> build_table(std::int64_t n) {
  auto t = std::make_unique<detail::LevelTable>();
  t->level = n;
  t->poly = compute_cyclotomic(n);
  t->phi = static_cast<std::int64_t>(t->poly.size()) - 1;
  const auto phi = static_cast<std::size_t>(t->phi);
  t->coords.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(phi, 0));
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::int64_t m = 0; m < n; ++m) {
    t->coords[static_cast<std::size_t>(m)] = cur;
    // multiply by x and reduce the overflow coefficient with the monic relation
    const std::int64_t top = cur[phi - 1];
    for (std::size_t k = phi - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    for (std::size_t k = 0; k < phi; ++k)
      cur[k] = checked(static_cast<__int128>(cur[k]) - static_cast<__int128>(top) * t->poly[k]);
  }
  for (std::int64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) t->units.push_back(k % n == 0 ? n : k);
  if (n == 1) t->units = {1};
  return t;
}

void addmul(mpz_class& acc, const mpz_class& v, std::int64_t s) {
  if (s > 0)
    mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(s));
  else if (s < 0)
    mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-s));
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const detail::LevelTable& detail::level_table(std::int64_t level) {
  if (level <= 0) throw PreconditionError("cyclotomic level must be positive");
  static std::mutex mu;
  // Tables are never erased, so references handed out stay valid forever.
  static auto* cache = new std::map<std::int64_t, std::unique_ptr<LevelTable>>();
  {
    std::lock_guard lock(mu);
    auto it = cache->find(level);
    if (it != cache->end()) return *it->second;
  }
  auto built = build_table(level);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache->try_emplace(level, std::move(built));
  return *it->second;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n <= 0) throw PreconditionError("euler_phi: argument must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) { return detail::level_table(n).poly; }

CyclotomicInt::CyclotomicInt(std::int64_t level)
    : level_(level), table_(&detail::level_table(level)), coeffs_(static_cast<std::size_t>(table_->phi)) {}

CyclotomicInt CyclotomicInt::integer(std::int64_t level, const mpz_class& value) {
  CyclotomicInt r(level);
  r.coeffs_[0] = value;
  return r;
}

CyclotomicInt CyclotomicInt::zeta_power(std::int64_t level, std::int64_t e) {
  CyclotomicInt r(level);
  const auto& c = r.table_->coords[static_cast<std::size_t>(mod_pos(e, level))];
  for (std::size_t k = 0; k < c.size(); ++k) r.coeffs_[k] = c[k];
  return r;
}

CyclotomicInt CyclotomicInt::from_root(const RootOfUnity& r, std::int64_t level) {
  return zeta_power(level, r.exponent_at(level));
}

CyclotomicInt CyclotomicInt::from_powers(std::int64_t level, const std::vector<mpz_class>& powers) {
  CyclotomicInt r(level);
  const auto n = static_cast<std::size_t>(level);
  for (std::size_t m = 0; m < powers.size(); ++m) {
    if (powers[m] == 0) continue;
    const auto& c = r.table_->coords[m % n];
    for (std::size_t k = 0; k < c.size(); ++k) addmul(r.coeffs_[k], powers[m], c[k]);
  }
  return r;
}

bool CyclotomicInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CyclotomicInt::is_rational_integer() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return false;
  return true;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (o.level_ != level_) throw PreconditionError("cyclotomic level mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  if (o.level_ != level_) throw PreconditionError("cyclotomic level mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.level_ != b.level_) throw PreconditionError("cyclotomic level mismatch");
  const std::size_t phi = a.coeffs_.size();
  if (a.is_rational_integer()) {
    CyclotomicInt r(b);
    for (auto& c : r.coeffs_) c *= a.coeffs_[0];
    return r;
  }
  if (b.is_rational_integer()) {
    CyclotomicInt r(a);
    for (auto& c : r.coeffs_) c *= b.coeffs_[0];
    return r;
  }
  std::vector<mpz_class> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (sgn(b.coeffs_[j]) != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  CyclotomicInt r(a.level_);
  for (std::size_t k = 0; k < phi; ++k) r.coeffs_[k] = std::move(prod[k]);
  const auto n = static_cast<std::size_t>(a.level_);
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& c = a.table_->coords[k % n];
    for (std::size_t t = 0; t < phi; ++t) addmul(r.coeffs_[t], prod[k], c[t]);
  }
  return r;
}

CyclotomicInt CyclotomicInt::times_zeta(std::int64_t e) const {
  const std::size_t phi = coeffs_.size();
  const auto n = level_;
  CyclotomicInt r(level_);
  const std::int64_t s = mod_pos(e, n);
  for (std::size_t k = 0; k < phi; ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const auto& c = table_->coords[static_cast<std::size_t>((static_cast<std::int64_t>(k) + s) % n)];
    for (std::size_t t = 0; t < phi; ++t) addmul(r.coeffs_[t], coeffs_[k], c[t]);
  }
  return r;
}

CyclotomicInt CyclotomicInt::conjugate(std::int64_t k) const {
  if (std::gcd(mod_pos(k, level_), level_) != 1 && level_ != 1)
    throw PreconditionError("conjugate: exponent must be a unit modulo the level");
  const std::size_t phi = coeffs_.size();
  CyclotomicInt r(level_);
  for (std::size_t m = 0; m < phi; ++m) {
    if (sgn(coeffs_[m]) == 0) continue;
    const auto idx = static_cast<std::size_t>(mod_pos(static_cast<std::int64_t>(
                                                          (static_cast<__int128>(k) * static_cast<std::int64_t>(m)) % level_),
                                                      level_));
    const auto& c = table_->coords[idx];
    for (std::size_t t = 0; t < phi; ++t) addmul(r.coeffs_[t], coeffs_[m], c[t]);
  }
  return r;
}

CyclotomicInt CyclotomicInt::conjugate_product() const {
  CyclotomicInt r = one(level_);
  for (std::size_t i = 1; i < table_->units.size(); ++i) r = r * conjugate(table_->units[i]);
  return r;
}

mpz_class CyclotomicInt::norm() const {
  const CyclotomicInt full = *this * conjugate_product();
  if (!full.is_rational_integer()) throw InternalFault("cyclotomic norm is not a rational integer");
  return full.coeffs_[0];
}

CyclotomicInt CyclotomicInt::divide_exact(const CyclotomicInt& d) const {
  if (d.level_ != level_) throw PreconditionError("cyclotomic level mismatch");
  if (d.is_zero()) throw PreconditionError("division by zero cyclotomic integer");
  CyclotomicInt num = *this;
  mpz_class den = d.coeffs_[0];
  if (!d.is_rational_integer()) {
    const CyclotomicInt cp = d.conjugate_product();
    num = num * cp;
    const CyclotomicInt full = d * cp;
    if (!full.is_rational_integer()) throw InternalFault("cyclotomic norm is not a rational integer");
    den = full.coeffs_[0];
  }
  for (auto& c : num.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), den.get_mpz_t())) throw InternalFault("inexact cyclotomic division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
  }
  return num;
}

std::string CyclotomicInt::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ", ";
    s += coeffs_[k].get_str();
  }
  return s + "]@" + std::to_string(level_);
}

namespace {

// Divides by a fixed nonzero pivot repeatedly; the conjugate product is computed once.
class ExactDivisor {
 public:
  explicit ExactDivisor(const CyclotomicInt& d) : level_(d.level()) {
    if (d.is_rational_integer()) {
      den_ = d.coeffs()[0];
      integral_ = true;
    } else {
      cp_ = d.conjugate_product();
      const CyclotomicInt full = d * cp_;
      if (!full.is_rational_integer()) throw InternalFault("cyclotomic norm is not a rational integer");
      den_ = full.coeffs()[0];
    }
  }

  bool is_one() const { return integral_ && den_ == 1; }

  CyclotomicInt apply(const CyclotomicInt& a) const {
    std::vector<mpz_class> c = integral_ ? a.coeffs() : (a * cp_).coeffs();
    for (auto& x : c) {
      if (!mpz_divisible_p(x.get_mpz_t(), den_.get_mpz_t())) throw InternalFault("fraction-free elimination lost exactness");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den_.get_mpz_t());
    }
    return CyclotomicInt::from_powers(level_, c);
  }

 private:
  std::int64_t level_;
  bool integral_ = false;
  CyclotomicInt cp_;
  mpz_class den_;
};

}  // namespace

std::size_t cyc_rank(CyclotomicMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::int64_t level = 0;
  for (const auto& row : m) {
    if (row.size() != cols) throw PreconditionError("cyc_rank: ragged matrix");
    for (const auto& e : row) {
      if (level == 0) level = e.level();
      if (e.level() != level) throw PreconditionError("cyc_rank: entries at different levels");
    }
  }
  if (cols == 0) return 0;

  std::size_t rank = 0;
  ExactDivisor prev(CyclotomicInt::one(level));
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const CyclotomicInt pivot = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const CyclotomicInt lead = m[i][c];
      const bool lead_zero = lead.is_zero();
      for (std::size_t j = c + 1; j < cols; ++j) {
        auto& a = m[i][j];
        const auto& r = m[rank][j];
        const bool r_zero = r.is_zero();
        if (a.is_zero() && (lead_zero || r_zero)) continue;
        CyclotomicInt v = pivot * a;
        if (!lead_zero && !r_zero) v -= lead * r;
        a = prev.is_one() ? std::move(v) : prev.apply(v);
      }
      m[i][c] = CyclotomicInt::zero(level);
    }
    prev = ExactDivisor(pivot);
    ++rank;
  }
  return rank;
}

}  // namespace nichols
