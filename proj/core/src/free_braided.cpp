#include "nichols/free_braided.hpp"

#include "nichols/errors.hpp"
#include "nichols/qpoly.hpp"

namespace nichols {

namespace {

// Product of b_{u_k, v_l} over all letters: the scalar picked up when v moves left past u.
RootOfUnity crossing_scalar(const BraidingMatrix& b, const Word& u, const Word& v) {
  RootOfUnity s;
  for (std::size_t x : u)
    for (std::size_t y : v) s *= b(x, y);
  return s;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

void require_letter(const BraidingMatrix& b, std::size_t i) {
  if (i >= b.theta()) throw PreconditionError("letter index out of range");
}

void require_same_context(const BraidingMatrix& a, const BraidingMatrix& b) {
  if (!(a == b)) throw PreconditionError("elements live over different braidings");
}

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const CyclotomicInt& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.try_emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

BraidedPoly::BraidedPoly(BraidingMatrix b) : b_(std::move(b)), level_(b_.level()) {}

BraidedPoly BraidedPoly::unit(const BraidingMatrix& b) { return monomial(b, {}); }

BraidedPoly BraidedPoly::letter(const BraidingMatrix& b, std::size_t i) {
  require_letter(b, i);
  return monomial(b, {i});
}

BraidedPoly BraidedPoly::monomial(const BraidingMatrix& b, Word w) {
  for (std::size_t x : w) require_letter(b, x);
  BraidedPoly p(b);
  p.terms_.emplace(std::move(w), CyclotomicInt::one(p.level_));
  return p;
}

CyclotomicInt BraidedPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CyclotomicInt::zero(level_) : it->second;
}

void BraidedPoly::add_term(const Word& w, const CyclotomicInt& c) {
  if (c.level() != level_) throw PreconditionError("coefficient level does not match the braiding");
  for (std::size_t x : w) require_letter(b_, x);
  accumulate(terms_, w, c);
}

std::optional<std::vector<std::int64_t>> BraidedPoly::multidegree() const {
  std::optional<std::vector<std::int64_t>> deg;
  for (const auto& [w, c] : terms_) {
    std::vector<std::int64_t> d(b_.theta(), 0);
    for (std::size_t x : w) ++d[x];
    if (deg && *deg != d) return std::nullopt;
    deg = std::move(d);
  }
  return deg;
}

BraidedPoly BraidedPoly::scaled(const CyclotomicInt& c) const {
  BraidedPoly r(b_);
  for (const auto& [w, v] : terms_) accumulate(r.terms_, w, v * c);
  return r;
}

BraidedPoly BraidedPoly::scaled(const RootOfUnity& s) const {
  BraidedPoly r(b_);
  const std::int64_t e = s.exponent_at(level_);
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v.times_zeta(e));
  return r;
}

BraidedPoly& BraidedPoly::operator+=(const BraidedPoly& o) {
  require_same_context(b_, o.b_);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

BraidedPoly& BraidedPoly::operator-=(const BraidedPoly& o) {
  require_same_context(b_, o.b_);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
  return *this;
}

std::string BraidedPoly::to_string() const {
  if (terms_.empty()) return "0";
  const CyclotomicInt one = CyclotomicInt::one(level_);
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string word;
    for (std::size_t x : w) word += "x" + std::to_string(x + 1);
    if (word.empty()) word = "1";
    s += c == one ? word : "(" + c.to_string() + ")*" + word;
  }
  return s;
}

BraidedPoly multiply(const BraidedPoly& a, const BraidedPoly& b) {
  require_same_context(a.braiding(), b.braiding());
  if (a.terms().size() * b.terms().size() > kTermGuard)
    throw ResourceGuardError("product terms", a.terms().size() * b.terms().size(), kTermGuard);
  BraidedPoly r(a.braiding());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r.add_term(concat(u, v), cu * cv);
  return r;
}

BraidedPolyTensor::BraidedPolyTensor(BraidingMatrix b) : b_(std::move(b)), level_(b_.level()) {}

CyclotomicInt BraidedPolyTensor::coeff(const Word& left, const Word& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? CyclotomicInt::zero(level_) : it->second;
}

void BraidedPolyTensor::add_term(const Word& left, const Word& right, const CyclotomicInt& c) {
  if (c.level() != level_) throw PreconditionError("coefficient level does not match the braiding");
  for (std::size_t x : left) require_letter(b_, x);
  for (std::size_t x : right) require_letter(b_, x);
  accumulate(terms_, std::pair{left, right}, c);
}

BraidedPolyTensor& BraidedPolyTensor::operator+=(const BraidedPolyTensor& o) {
  require_same_context(b_, o.b_);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

BraidedPolyTensor& BraidedPolyTensor::operator-=(const BraidedPolyTensor& o) {
  require_same_context(b_, o.b_);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
  return *this;
}

BraidedPolyTensor operator*(const BraidedPolyTensor& a, const BraidedPolyTensor& b) {
  require_same_context(a.b_, b.b_);
  if (a.terms_.size() * b.terms_.size() > kTermGuard)
    throw ResourceGuardError("tensor product terms", a.terms_.size() * b.terms_.size(), kTermGuard);
  BraidedPolyTensor r(a.b_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      // the left factor of b moves past the right factor of a
      const std::int64_t e = crossing_scalar(a.b_, ka.second, kb.first).exponent_at(r.level_);
      accumulate(r.terms_, std::pair{concat(ka.first, kb.first), concat(ka.second, kb.second)},
                 (ca * cb).times_zeta(e));
    }
  return r;
}

BraidedPolyTensor tensor(const BraidedPoly& a, const BraidedPoly& b) {
  require_same_context(a.braiding(), b.braiding());
  BraidedPolyTensor r(a.braiding());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r.add_term(u, v, cu * cv);
  return r;
}

namespace {

void guard_coproduct(const BraidedPoly& a) {
  std::size_t total = 0;
  for (const auto& [w, c] : a.terms()) {
    if (w.size() >= 20) throw ResourceGuardError("coproduct terms", std::size_t{1} << 20, kTermGuard);
    total += std::size_t{1} << w.size();
    if (total > kTermGuard) throw ResourceGuardError("coproduct terms", total, kTermGuard);
  }
}

}  // namespace

BraidedPolyTensor coproduct(const BraidedPoly& a) {
  guard_coproduct(a);
  const BraidingMatrix& b = a.braiding();
  const BraidedPoly one = BraidedPoly::unit(b);
  std::vector<BraidedPolyTensor> delta;
  for (std::size_t i = 0; i < b.theta(); ++i) {
    const BraidedPoly x = BraidedPoly::letter(b, i);
    delta.push_back(tensor(x, one) + tensor(one, x));
  }
  BraidedPolyTensor r(b);
  for (const auto& [w, c] : a.terms()) {
    BraidedPolyTensor t = tensor(one.scaled(c), one);
    for (std::size_t x : w) t = t * delta[x];
    r += t;
  }
  return r;
}

BraidedPolyTensor coproduct_by_subsets(const BraidedPoly& a) {
  guard_coproduct(a);
  const BraidingMatrix& b = a.braiding();
  BraidedPolyTensor r(b);
  for (const auto& [w, c] : a.terms()) {
    const std::size_t n = w.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Word left, right;
      RootOfUnity s;
      for (std::size_t p = 0; p < n; ++p) {
        if (mask >> p & 1) {
          left.push_back(w[p]);
          // every earlier letter on the right has to move past this one
          for (std::size_t q = 0; q < p; ++q)
            if (!(mask >> q & 1)) s *= b(w[q], w[p]);
        } else {
          right.push_back(w[p]);
        }
      }
      r.add_term(left, right, c.times_zeta(s.exponent_at(r.level())));
    }
  }
  return r;
}

BraidedPoly ad_c(std::size_t i, const BraidedPoly& v) {
  const BraidingMatrix& b = v.braiding();
  require_letter(b, i);
  if (v.is_zero()) return v;
  const auto deg = v.multidegree();
  if (!deg) throw PreconditionError("ad_c: argument is not homogeneous");
  RootOfUnity chi;
  for (std::size_t k = 0; k < b.theta(); ++k) chi *= b(i, k).pow((*deg)[k]);
  const BraidedPoly x = BraidedPoly::letter(b, i);
  return x * v - (v * x).scaled(chi);
}

BraidedPoly serre_element(const BraidingMatrix& b, std::size_t i, std::size_t j, std::int64_t a_ij) {
  require_letter(b, i);
  require_letter(b, j);
  if (i == j || a_ij > 0) throw PreconditionError("serre_element: need i != j and a_ij <= 0");
  BraidedPoly z = BraidedPoly::letter(b, j);
  for (std::int64_t k = 0; k < 1 - a_ij; ++k) z = ad_c(i, z);
  return z;
}

BraidedPoly serre_closed_form(const BraidingMatrix& b, std::size_t i, std::size_t j, std::int64_t r) {
  require_letter(b, i);
  require_letter(b, j);
  if (i == j || r < 0) throw PreconditionError("serre_closed_form: need i != j and r >= 0");
  const std::int64_t level = b.level();
  const RootOfUnity q = b(i, i);
  BraidedPoly z(b);
  for (std::int64_t k = 0; k <= r; ++k) {
    Word w(static_cast<std::size_t>(r - k), i);
    w.push_back(j);
    w.insert(w.end(), static_cast<std::size_t>(k), i);
    const RootOfUnity s = q.pow(k * (k - 1) / 2) * b(i, j).pow(k);
    CyclotomicInt c = qbinom(static_cast<int>(r), static_cast<int>(k)).evaluate(q, level).times_zeta(s.exponent_at(level));
    z.add_term(w, k % 2 == 0 ? c : -c);
  }
  return z;
}

bool is_primitive(const BraidedPoly& z) {
  const BraidedPoly one = BraidedPoly::unit(z.braiding());
  return (coproduct(z) - tensor(z, one) - tensor(one, z)).is_zero();
}

RootOfUnity serre_condition_value(const BraidingMatrix& b, std::size_t i, std::size_t j, std::int64_t r) {
  require_letter(b, i);
  require_letter(b, j);
  return b(i, j) * b(j, i) * b(i, i).pow(r - 1);
}

std::vector<CyclotomicInt> serre_normalized_coefficients(const BraidingMatrix& b, std::size_t i, std::size_t j,
                                                         std::int64_t r) {
  require_letter(b, i);
  require_letter(b, j);
  if (r < 0) throw PreconditionError("serre_normalized_coefficients: need r >= 0");
  const std::int64_t level = b.level();
  const RootOfUnity q = b(i, i);
  std::vector<CyclotomicInt> alpha;
  for (std::int64_t k = 0; k <= r; ++k) {
    const RootOfUnity s = q.pow((k * k + k) / 2 - r * k) * b(i, j).pow(-k);
    CyclotomicInt c = qbinom(static_cast<int>(r), static_cast<int>(k)).evaluate(q, level).times_zeta(s.exponent_at(level));
    alpha.push_back(k % 2 == 0 ? c : -c);
  }
  return alpha;
}

std::vector<CyclotomicInt> serre_system_residuals(const BraidingMatrix& b, std::size_t i, std::size_t j,
                                                  std::int64_t r, const std::vector<CyclotomicInt>& alpha) {
  require_letter(b, i);
  require_letter(b, j);
  if (r < 0 || alpha.size() != static_cast<std::size_t>(r + 1))
    throw PreconditionError("serre_system_residuals: need r + 1 coefficients");
  const std::int64_t level = b.level();
  const RootOfUnity q = b(i, i);
  const RootOfUnity eta_g = b(i, j);
  const RootOfUnity chi_t = b(j, i);
  auto binom = [&](std::int64_t n, std::int64_t k) {
    return qbinom(static_cast<int>(n), static_cast<int>(k)).evaluate(q, level);
  };
  std::vector<CyclotomicInt> out;
  for (std::int64_t l = 0; l < r; ++l)
    for (std::int64_t h = 0; l + h < r; ++h) {
      CyclotomicInt sum = CyclotomicInt::zero(level);
      for (std::int64_t k = l; k <= r - h; ++k) {
        const RootOfUnity s = eta_g.pow(k - l) * q.pow(h * (k - l));
        sum += (alpha[static_cast<std::size_t>(k)] * binom(k, l) * binom(r - k, h)).times_zeta(s.exponent_at(level));
      }
      out.push_back(std::move(sum));
    }
  for (std::int64_t u = 0; u < r; ++u)
    for (std::int64_t v = 0; u + v < r; ++v) {
      CyclotomicInt sum = CyclotomicInt::zero(level);
      for (std::int64_t k = u; k <= r - v; ++k) {
        const RootOfUnity s = chi_t.pow(r - k - v) * q.pow(u * (r - k - v));
        sum += (alpha[static_cast<std::size_t>(k)] * binom(k, u) * binom(r - k, v)).times_zeta(s.exponent_at(level));
      }
      out.push_back(std::move(sum));
    }
  return out;
}

}  // namespace nichols
