#include "nichols/qpoly.hpp"

#include <mutex>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceGuardError("q-polynomial coefficient overflow", 64, 63);
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceGuardError("q-polynomial coefficient overflow", 64, 63);
  return r;
}

}  // namespace

QPoly QPoly::monomial(int exponent, std::int64_t c) {
  QPoly p;
  p.add_term(exponent, c);
  return p;
}

void QPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(exponent, c);
  if (fresh) return;
  it->second = add_checked(it->second, c);
  if (it->second == 0) t_.erase(it);
}

std::int64_t QPoly::coeff(int exponent) const {
  auto it = t_.find(exponent);
  return it == t_.end() ? 0 : it->second;
}

int QPoly::min_degree() const {
  if (t_.empty()) throw PreconditionError("degree of the zero polynomial");
  return t_.begin()->first;
}

int QPoly::max_degree() const {
  if (t_.empty()) throw PreconditionError("degree of the zero polynomial");
  return t_.rbegin()->first;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, mul_checked(-1, c));
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, mul_checked(ca, cb));
  return r;
}

QPoly QPoly::scaled(std::int64_t k) const {
  QPoly r;
  for (const auto& [e, c] : t_) r.add_term(e, mul_checked(c, k));
  return r;
}

QPoly QPoly::shifted(int k) const {
  QPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
  return r;
}

QPoly QPoly::substitute_power(int k) const {
  QPoly r;
  for (const auto& [e, c] : t_) r.add_term(e * k, c);
  return r;
}

QPoly QPoly::divide_exact(const QPoly& d) const {
  if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
  QPoly rem = *this;
  QPoly quot;
  const int dlo = d.min_degree();
  const int dhi = d.max_degree();
  const std::int64_t lead = d.t_.rbegin()->second;
  while (!rem.is_zero() && rem.max_degree() - dhi >= rem.min_degree() - dlo) {
    const int e = rem.max_degree() - dhi;
    const std::int64_t c = rem.t_.rbegin()->second;
    if (c % lead != 0) throw InternalFault("inexact q-polynomial division");
    const QPoly step = QPoly::monomial(e, c / lead);
    quot += step;
    rem -= step * d;
  }
  if (!rem.is_zero()) throw InternalFault("inexact q-polynomial division");
  return quot;
}

CyclotomicInt QPoly::evaluate(const RootOfUnity& r, std::int64_t level) const {
  const std::int64_t base = r.exponent_at(level);
  std::vector<mpz_class> powers(static_cast<std::size_t>(level));
  for (const auto& [e, c] : t_) {
    std::int64_t k = (base * e) % level;
    if (k < 0) k += level;
    powers[static_cast<std::size_t>(k)] += static_cast<long>(c);
  }
  return CyclotomicInt::from_powers(level, powers);
}

std::string QPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : t_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += e == 1 ? "q" : "q^" + std::to_string(e);
  }
  return s;
}

QPoly qinteger(int n) {
  QPoly p;
  for (int k = 0; k < n; ++k) p += QPoly::monomial(k);
  return p;
}

QPoly qfactorial(int n) {
  QPoly p = QPoly::constant(1);
  for (int k = 2; k <= n; ++k) p = p * qinteger(k);
  return p;
}

QPoly qbinom(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw PreconditionError("qbinom: need 0 <= i <= n");
  static std::mutex mu;
  static std::vector<std::vector<QPoly>> rows{{QPoly::constant(1)}};
  std::lock_guard lock(mu);
  // row n+1 from row n: (n+1, h) = (n, h) + q^{n+1-h} (n, h-1)
  while (static_cast<int>(rows.size()) <= n) {
    const int m = static_cast<int>(rows.size()) - 1;
    const auto& prev = rows.back();
    std::vector<QPoly> next(static_cast<std::size_t>(m + 2));
    next[0] = QPoly::constant(1);
    next[static_cast<std::size_t>(m + 1)] = QPoly::constant(1);
    for (int h = 1; h <= m; ++h)
      next[static_cast<std::size_t>(h)] =
          prev[static_cast<std::size_t>(h)] + prev[static_cast<std::size_t>(h - 1)].shifted(m + 1 - h);
    rows.push_back(std::move(next));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

QPoly sym_qinteger(int n) {
  const QPoly num = QPoly::monomial(n) - QPoly::monomial(-n);
  const QPoly den = QPoly::monomial(1) - QPoly::monomial(-1);
  return num.divide_exact(den);
}

QPoly sym_qbinom(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw PreconditionError("sym_qbinom: need 0 <= i <= n");
  auto fact = [](int m) {
    QPoly p = QPoly::constant(1);
    for (int k = 2; k <= m; ++k) p = p * sym_qinteger(k);
    return p;
  };
  return fact(n).divide_exact(fact(n - i) * fact(i));
}

IdentityReport qbinom_identity_suite(int n_max) {
  if (n_max < 1) throw PreconditionError("qbinom_identity_suite: n_max must be at least 1");
  auto fail = [](const std::string& what, int n) { return IdentityReport{false, what + " fails at n = " + std::to_string(n)}; };
  for (int n = 1; n <= n_max; ++n) {
    // Pascal recurrences, both forms
    for (int h = 1; h <= n; ++h) {
      const QPoly up = qbinom(n + 1, h);
      if (qbinom(n, h).shifted(h) + qbinom(n, h - 1) != up) return fail("left Pascal recurrence", n);
      if (qbinom(n, h) + qbinom(n, h - 1).shifted(n + 1 - h) != up) return fail("right Pascal recurrence", n);
    }
    // factorial form without division
    for (int i = 0; i <= n; ++i)
      if (qbinom(n, i) * qfactorial(n - i) * qfactorial(i) != qfactorial(n)) return fail("factorial form", n);
    // (x + y)^n in the algebra with xy = q yx, normal form y^i x^{n-i}
    {
      std::vector<QPoly> coeff{QPoly::constant(1)};
      for (int m = 0; m < n; ++m) {
        std::vector<QPoly> next(coeff.size() + 1);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
          next[i] += coeff[i];                                                        // times x on the right
          next[i + 1] += coeff[i].shifted(m - static_cast<int>(i));                   // y moved past x^{m-i}
        }
        coeff = std::move(next);
      }
      for (int i = 0; i <= n; ++i)
        if (coeff[static_cast<std::size_t>(i)] != qbinom(n, i)) return fail("binomial formula", n);
    }
    for (int r = 0; r <= n; ++r)
      if (qinteger(r) + qinteger(n - r).shifted(r) != qinteger(n)) return fail("(r) + q^r (s) = (r + s)", n);
    // symmetric form and the q -> q^2 comparison
    if (qinteger(n).substitute_power(2) != sym_qinteger(n).shifted(n - 1)) return fail("(n)_{q^2} = q^{n-1} [n]_q", n);
    QPoly sym_sum, asym_sum, shifted_sum;
    for (int i = 0; i <= n; ++i) {
      const QPoly sb = sym_qbinom(n, i);
      if (qbinom(n, i).substitute_power(2) != sb.shifted(i * (n - i))) return fail("binomial at q^2", n);
      const std::int64_t sign = i % 2 == 0 ? 1 : -1;
      sym_sum += sb.shifted(i * (1 - n)).scaled(sign);
      asym_sum += qbinom(n, i).shifted((i * i + i) / 2 - n * i).scaled(sign);
      shifted_sum += qbinom(n, i).shifted((i * i - i) / 2).scaled(sign);
    }
    if (!sym_sum.is_zero()) return fail("symmetric alternating sum", n);
    if (!asym_sum.is_zero()) return fail("alternating sum with q^{(i^2+i)/2 - ni}", n);
    if (!shifted_sum.is_zero()) return fail("alternating sum with q^{(h^2-h)/2}", n);
  }
  return {};
}

}  // namespace nichols
