#include "nichols/antisym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "nichols/dimension.hpp"
#include "nichols/errors.hpp"

namespace nichols {

namespace {

constexpr std::size_t kDenseEntryGuard = std::size_t{1} << 28;

void require_permutation(const std::vector<std::size_t>& w) {
  std::vector<bool> seen(w.size(), false);
  for (std::size_t x : w) {
    if (x >= w.size() || seen[x]) throw PreconditionError("not a permutation in one-line form");
    seen[x] = true;
  }
}

std::size_t multinomial_or_guard(const std::vector<std::int64_t>& letters) {
  // exact up to the guard, saturating beyond it
  std::size_t n = 0;
  mpz_class count = 1;
  for (std::int64_t m : letters) {
    for (std::int64_t k = 1; k <= m; ++k) {
      ++n;
      count *= static_cast<unsigned long>(n);
      count /= static_cast<unsigned long>(k);
    }
  }
  if (count > kBlockWordGuard) throw ResourceGuardError("antisymmetrizer block words", count.fits_ulong_p() ? count.get_ui() : SIZE_MAX, kBlockWordGuard);
  return count.get_ui();
}

std::vector<Word> arrangements(const std::vector<std::int64_t>& letters) {
  Word w;
  for (std::size_t x = 0; x < letters.size(); ++x) {
    if (letters[x] < 0) throw PreconditionError("negative letter multiplicity");
    w.insert(w.end(), static_cast<std::size_t>(letters[x]), x);
  }
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceGuardError("antisymmetrizer multiplicity overflow", 64, 63);
  return r;
}

// Dense block: entry (u, w) is a multiplicity vector over the powers of zeta_L.
struct DenseBlock {
  std::vector<Word> basis;
  std::map<Word, std::size_t> index;
  std::vector<std::int64_t> data;  // [(w * B + u) * L + e]
};

class Builder {
 public:
  explicit Builder(const BraidingMatrix& b) : b_(b), level_(b.level()) {
    const std::size_t t = b.theta();
    expo_.assign(t, std::vector<std::int64_t>(t));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) expo_[i][j] = b(i, j).exponent_at(level_);
  }

  std::int64_t level() const { return level_; }

  const DenseBlock& block(const std::vector<std::int64_t>& letters) {
    if (letters.size() != b_.theta()) throw PreconditionError("multidegree length must equal theta");
    auto it = cache_.find(letters);
    if (it != cache_.end()) return it->second;
    DenseBlock blk = build(letters);
    return cache_.emplace(letters, std::move(blk)).first->second;
  }

  CyclotomicMatrix to_matrix(const DenseBlock& blk) const {
    const std::size_t B = blk.basis.size();
    const auto L = static_cast<std::size_t>(level_);
    CyclotomicMatrix m(B, std::vector<CyclotomicInt>(B, CyclotomicInt::zero(level_)));
    std::vector<mpz_class> powers(L);
    for (std::size_t w = 0; w < B; ++w)
      for (std::size_t u = 0; u < B; ++u) {
        const std::int64_t* e = &blk.data[(w * B + u) * L];
        if (std::all_of(e, e + L, [](std::int64_t x) { return x == 0; })) continue;
        for (std::size_t k = 0; k < L; ++k) powers[k] = static_cast<long>(e[k]);
        m[u][w] = CyclotomicInt::from_powers(level_, powers);
      }
    return m;
  }

 private:
  DenseBlock build(const std::vector<std::int64_t>& letters) {
    const std::size_t B = multinomial_or_guard(letters);
    const auto L = static_cast<std::size_t>(level_);
    if (B * B * L > kDenseEntryGuard) throw ResourceGuardError("antisymmetrizer dense entries", B * B * L, kDenseEntryGuard);
    DenseBlock blk;
    blk.basis = arrangements(letters);
    for (std::size_t k = 0; k < B; ++k) blk.index.emplace(blk.basis[k], k);
    blk.data.assign(B * B * L, 0);
    const std::size_t n = blk.basis.front().size();
    if (n == 0) {
      blk.data[0] = 1;
      return blk;
    }
    for (std::size_t w = 0; w < B; ++w) {
      const Word& word = blk.basis[w];
      const std::size_t a = word.front();
      std::vector<std::int64_t> tail_letters = letters;
      --tail_letters[a];
      const DenseBlock& tail = block(tail_letters);
      const std::size_t TB = tail.basis.size();
      const std::size_t t = tail.index.at(Word(word.begin() + 1, word.end()));
      for (std::size_t v = 0; v < TB; ++v) {
        const std::int64_t* c = &tail.data[(t * TB + v) * L];
        if (std::all_of(c, c + L, [](std::int64_t x) { return x == 0; })) continue;
        const Word& vw = tail.basis[v];
        // move a from the front to position k, passing vw[0..k)
        std::int64_t shift = 0;
        Word target;
        target.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
          target.assign(vw.begin(), vw.begin() + static_cast<std::ptrdiff_t>(k));
          target.push_back(a);
          target.insert(target.end(), vw.begin() + static_cast<std::ptrdiff_t>(k), vw.end());
          const std::size_t u = blk.index.at(target);
          std::int64_t* dst = &blk.data[(w * B + u) * L];
          for (std::size_t e = 0; e < L; ++e)
            if (c[e] != 0) {
              const std::size_t to = (e + static_cast<std::size_t>(shift)) % L;
              dst[to] = add_checked(dst[to], c[e]);
            }
          if (k < vw.size()) shift = (shift + expo_[a][vw[k]]) % level_;
        }
      }
    }
    return blk;
  }

  const BraidingMatrix& b_;
  std::int64_t level_;
  std::vector<std::vector<std::int64_t>> expo_;
  std::map<std::vector<std::int64_t>, DenseBlock> cache_;
};

void compositions(std::size_t n, std::size_t parts, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(static_cast<std::int64_t>(n));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    cur.push_back(static_cast<std::int64_t>(k));
    compositions(n - k, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::int64_t>> multidegrees(std::size_t n, std::size_t theta) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  compositions(n, theta, cur, out);
  return out;
}

std::size_t rank_in_degree(Builder& builder, const BraidingMatrix& b, std::size_t n) {
  std::size_t r = 0;
  for (const auto& m : multidegrees(n, b.theta())) r += cyc_rank(builder.to_matrix(builder.block(m)));
  return r;
}

void for_each_permutation(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), std::size_t{0});
  do f(w);
  while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace

BraidStep braid_generator_action(const BraidingMatrix& b, const Word& word, std::size_t k) {
  if (k < 1 || k >= word.size()) throw PreconditionError("braid generator position out of range");
  for (std::size_t x : word)
    if (x >= b.theta()) throw PreconditionError("letter index out of range");
  BraidStep s{word, b(word[k - 1], word[k])};
  std::swap(s.word[k - 1], s.word[k]);
  return s;
}

BraidStep apply_braid_word(const BraidingMatrix& b, const std::vector<std::size_t>& generators, const Word& word) {
  BraidStep s{word, RootOfUnity::one()};
  for (std::size_t k : generators) {
    BraidStep t = braid_generator_action(b, s.word, k);
    s.word = std::move(t.word);
    s.scalar *= t.scalar;
  }
  return s;
}

std::vector<std::size_t> reduced_word(const std::vector<std::size_t>& w) {
  require_permutation(w);
  std::vector<std::size_t> target = w;
  std::vector<std::size_t> gens;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t k = 0; k + 1 < target.size(); ++k)
      if (target[k] > target[k + 1]) {
        std::swap(target[k], target[k + 1]);
        gens.push_back(k + 1);
        moved = true;
      }
  }
  return gens;
}

std::vector<std::vector<std::size_t>> all_reduced_words(const std::vector<std::size_t>& w) {
  require_permutation(w);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> target = w;
  std::function<void()> rec = [&] {
    bool sorted = true;
    for (std::size_t k = 0; k + 1 < target.size(); ++k) {
      if (target[k] < target[k + 1]) continue;
      sorted = false;
      std::swap(target[k], target[k + 1]);
      prefix.push_back(k + 1);
      rec();
      prefix.pop_back();
      std::swap(target[k], target[k + 1]);
    }
    if (sorted) out.push_back(prefix);
  };
  rec();
  return out;
}

BraidStep lift_permutation(const BraidingMatrix& b, const std::vector<std::size_t>& w, const Word& word) {
  if (w.size() != word.size()) throw PreconditionError("permutation and word lengths differ");
  return apply_braid_word(b, reduced_word(w), word);
}

MultidegreeBlock antisymmetrizer_block(const BraidingMatrix& b, const std::vector<std::int64_t>& letters) {
  Builder builder(b);
  const DenseBlock& blk = builder.block(letters);
  return {letters, blk.basis, builder.to_matrix(blk)};
}

MultidegreeBlock antisymmetrizer_block_by_permutations(const BraidingMatrix& b,
                                                       const std::vector<std::int64_t>& letters) {
  if (letters.size() != b.theta()) throw PreconditionError("multidegree length must equal theta");
  multinomial_or_guard(letters);
  MultidegreeBlock out{letters, arrangements(letters), {}};
  const std::size_t n = out.basis.front().size();
  if (n > 8) throw ResourceGuardError("permutation lifts degree", n, 8);
  const std::int64_t level = b.level();
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < out.basis.size(); ++k) index.emplace(out.basis[k], k);
  out.matrix.assign(out.basis.size(), std::vector<CyclotomicInt>(out.basis.size(), CyclotomicInt::zero(level)));
  for (std::size_t w = 0; w < out.basis.size(); ++w)
    for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
      const BraidStep s = lift_permutation(b, perm, out.basis[w]);
      out.matrix[index.at(s.word)][w] += CyclotomicInt::from_root(s.scalar, level);
    });
  return out;
}

CyclotomicMatrix antisymmetrizer_full_matrix(const BraidingMatrix& b, std::size_t n) {
  if (n > 8) throw ResourceGuardError("permutation lifts degree", n, 8);
  std::size_t words = 1;
  for (std::size_t k = 0; k < n; ++k) {
    words *= b.theta();
    if (words > 256) throw ResourceGuardError("full antisymmetrizer words", words, 256);
  }
  const std::int64_t level = b.level();
  std::vector<Word> basis;
  std::map<Word, std::size_t> index;
  for (std::size_t code = 0; code < words; ++code) {
    Word w(n);
    std::size_t c = code;
    for (std::size_t p = n; p-- > 0;) {
      w[p] = c % b.theta();
      c /= b.theta();
    }
    index.emplace(w, basis.size());
    basis.push_back(std::move(w));
  }
  CyclotomicMatrix m(words, std::vector<CyclotomicInt>(words, CyclotomicInt::zero(level)));
  for (std::size_t w = 0; w < words; ++w)
    for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
      const BraidStep s = lift_permutation(b, perm, basis[w]);
      m[index.at(s.word)][w] += CyclotomicInt::from_root(s.scalar, level);
    });
  return m;
}

std::size_t antisymmetrizer_rank(const BraidingMatrix& b, std::size_t n) {
  Builder builder(b);
  return rank_in_degree(builder, b, n);
}

TotalDimension total_dimension(const BraidingMatrix& b, const CartanTypeResult& ct, int degree_cap) {
  if (degree_cap < 0) throw PreconditionError("degree cap must be nonnegative");
  TotalDimension out;
  out.top_degree = top_degree(b, ct);
  const std::int64_t last = out.top_degree + 2;
  Builder builder(b);
  for (std::int64_t n = 0; n <= last; ++n) {
    if (n > degree_cap) {
      out.capped = true;
      return out;
    }
    try {
      out.ranks.push_back(rank_in_degree(builder, b, static_cast<std::size_t>(n)));
    } catch (const ResourceGuardError&) {
      out.capped = true;
      return out;
    }
  }
  if (out.ranks[static_cast<std::size_t>(last)] != 0 || out.ranks[static_cast<std::size_t>(last - 1)] != 0)
    throw InternalFault("antisymmetrizer ranks do not vanish above the predicted top degree");
  mpz_class total = 0;
  for (std::size_t r : out.ranks) total += static_cast<unsigned long>(r);
  out.total = total;
  return out;
}

}  // namespace nichols
