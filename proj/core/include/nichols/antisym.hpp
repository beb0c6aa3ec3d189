#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/free_braided.hpp"

namespace nichols {

// Blocks with more arrangements than this are refused.
inline constexpr std::size_t kBlockWordGuard = 20'000;
inline constexpr int kDefaultDegreeCap = 12;

struct BraidStep {
  Word word;
  RootOfUnity scalar;
  friend bool operator==(const BraidStep&, const BraidStep&) = default;
};

// c acting on positions k, k+1 (1-based): swaps the letters and returns b_{w_k, w_{k+1}}.
BraidStep braid_generator_action(const BraidingMatrix& b, const Word& word, std::size_t k);

// Applies the generators in the order given (1-based positions), multiplying the scalars.
BraidStep apply_braid_word(const BraidingMatrix& b, const std::vector<std::size_t>& generators, const Word& word);

// Permutations are in one-line form: the letter at position p moves to position w[p] (0-based).
// A reduced word for w, in application order.
std::vector<std::size_t> reduced_word(const std::vector<std::size_t>& w);
// Every reduced word for w, in application order.
std::vector<std::vector<std::size_t>> all_reduced_words(const std::vector<std::size_t>& w);

// The positive braid lift of w applied to the word.
BraidStep lift_permutation(const BraidingMatrix& b, const std::vector<std::size_t>& w, const Word& word);

struct MultidegreeBlock {
  std::vector<std::int64_t> letters;  // multiplicity of each letter
  std::vector<Word> basis;            // distinct arrangements in lexicographic order
  CyclotomicMatrix matrix;            // matrix[u][w]: coefficient of basis[u] in S_n(basis[w])
};

// The antisymmetrizer on one multidegree, assembled recursively from the shuffle of the first
// letter through the antisymmetrizer of the remaining letters.
MultidegreeBlock antisymmetrizer_block(const BraidingMatrix& b, const std::vector<std::int64_t>& letters);
// The same block as the sum of all n! permutation lifts. Refuses n > 8.
MultidegreeBlock antisymmetrizer_block_by_permutations(const BraidingMatrix& b,
                                                       const std::vector<std::int64_t>& letters);
// The antisymmetrizer on all theta^n words (lexicographic order) from permutation lifts.
// Refuses more than 256 words or n > 8.
CyclotomicMatrix antisymmetrizer_full_matrix(const BraidingMatrix& b, std::size_t n);

// Sum over multidegree blocks of the block ranks: the dimension of the degree-n component.
std::size_t antisymmetrizer_rank(const BraidingMatrix& b, std::size_t n);

struct TotalDimension {
  std::vector<std::size_t> ranks;   // degrees 0, 1, ... that were computed
  std::optional<mpz_class> total;   // present when the computation reached the vanishing check
  bool capped = false;
  std::int64_t top_degree = 0;      // predicted degree of the top component
};

// Graded ranks up to the predicted top degree D, plus the check that D+1 and D+2 vanish.
// Stops with capped = true at degree_cap or when a block exceeds the guard.
// Throws InternalFault when the ranks at D+1 or D+2 do not vanish.
TotalDimension total_dimension(const BraidingMatrix& b, const CartanTypeResult& ct,
                               int degree_cap = kDefaultDegreeCap);

}  // namespace nichols
