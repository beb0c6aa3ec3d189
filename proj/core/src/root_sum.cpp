#include "nichols/root_sum.hpp"

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceGuardError("root-sum multiplicity overflow", 64, 63);
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceGuardError("root-sum multiplicity overflow", 64, 63);
  return r;
}

void require_same_level(const RootSum& a, const RootSum& b) {
  if (a.level() != b.level()) throw PreconditionError("root-sum level mismatch");
}

}  // namespace

RootSum::RootSum(std::int64_t level) : level_(level) {
  if (level <= 0) throw PreconditionError("root-sum level must be positive");
  mult_.assign(static_cast<std::size_t>(level), 0);
}

RootSum RootSum::integer(std::int64_t level, std::int64_t n) { return monomial(level, 0, n); }

RootSum RootSum::monomial(std::int64_t level, std::int64_t exponent, std::int64_t mult) {
  RootSum r(level);
  r.mult_[static_cast<std::size_t>(mod_pos(exponent, level))] = mult;
  return r;
}

RootSum RootSum::of_root(const RootOfUnity& root, std::int64_t level, std::int64_t mult) {
  return monomial(level, root.exponent_at(level), mult);
}

bool RootSum::is_trivially_zero() const {
  for (auto m : mult_)
    if (m != 0) return false;
  return true;
}

void RootSum::add_monomial(std::int64_t exponent, std::int64_t mult) {
  auto& slot = mult_[static_cast<std::size_t>(mod_pos(exponent, level_))];
  slot = add_checked(slot, mult);
}

RootSum& RootSum::operator+=(const RootSum& o) {
  require_same_level(*this, o);
  for (std::size_t k = 0; k < mult_.size(); ++k) mult_[k] = add_checked(mult_[k], o.mult_[k]);
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& o) {
  require_same_level(*this, o);
  for (std::size_t k = 0; k < mult_.size(); ++k) mult_[k] = add_checked(mult_[k], mul_checked(-1, o.mult_[k]));
  return *this;
}

RootSum RootSum::operator-() const { return scaled(-1); }

RootSum operator*(const RootSum& a, const RootSum& b) {
  require_same_level(a, b);
  RootSum r(a.level_);
  const auto n = a.mult_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.mult_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.mult_[j] == 0) continue;
      auto& slot = r.mult_[(i + j) % n];
      slot = add_checked(slot, mul_checked(a.mult_[i], b.mult_[j]));
    }
  }
  return r;
}

RootSum RootSum::scaled(std::int64_t k) const {
  RootSum r(*this);
  for (auto& m : r.mult_) m = mul_checked(m, k);
  return r;
}

RootSum RootSum::rotated(std::int64_t e) const {
  RootSum r(level_);
  const auto n = mult_.size();
  const auto s = static_cast<std::size_t>(mod_pos(e, level_));
  for (std::size_t k = 0; k < n; ++k) r.mult_[(k + s) % n] = mult_[k];
  return r;
}

CyclotomicInt RootSum::to_cyclotomic() const {
  std::vector<mpz_class> powers(mult_.size());
  for (std::size_t k = 0; k < mult_.size(); ++k) powers[k] = static_cast<long>(mult_[k]);
  return CyclotomicInt::from_powers(level_, powers);
}

std::string RootSum::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < mult_.size(); ++k) {
    if (mult_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(mult_[k]);
    if (k != 0) s += "*z^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace nichols
