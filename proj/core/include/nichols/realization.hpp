#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/group.hpp"

namespace nichols {

// b_ij = <chi(j), g(i)>.
BraidingMatrix braiding_of(const RealizationData& r);

enum class Rank2Diagram { A2, B2, G2 };

std::string to_string(Rank2Diagram d);

// Rank-two data over Z/p: g(1) = u, g(2) = u^b, <chi(1), u> = q, <chi(2), u> = q^d,
// with q = exp(2 pi i q_exp / p).
struct ZpRank2Params {
  std::int64_t p = 3;
  std::int64_t q_exp = 1;
  std::int64_t b = 1;
  std::int64_t d = 1;

  RealizationData realization() const;
};

bool is_odd_prime(std::int64_t n);

// All b in Z/p solving the quadratic of the diagram (b^2+b+1, 2b^2+2b+1, 3b^2+3b+1), ascending.
// Requires an odd prime p <= 100, and p > 3 for G2.
std::vector<std::int64_t> rank2_solutions(std::int64_t p, Rank2Diagram diagram);

// The partner d of a solution b: d = -1-b (A2), 2bd = 1 (B2), 3bd = 1 (G2).
std::int64_t rank2_partner(std::int64_t p, Rank2Diagram diagram, std::int64_t b);

// Existence of a realization over Z/p of the named finite diagram ("A2", "B2", "G2",
// "A1", "A1xA1", "A3", "A2xA1", "A2xA2", ...) by the congruence criteria.
bool exists_diagram_over_zp(std::int64_t p, const std::string& diagram);

// Finite Cartan type rank-three realizations over Z/p, one canonical representative per
// isomorphism class. Exhaustive over g = (1, b, e), chi = (1, d, f) and scaled by every q.
std::vector<RealizationData> rank3_search(std::int64_t p);

struct ExcludedSearch {
  std::int64_t p = 0;
  GeneralizedCartanMatrix gcm;
  // For j = 2..theta: all (g(j), chi(j)) compatible with the pair (1, j) when g(1) = chi(1) = 1.
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> pair_solutions;
  // Complete solutions: g(2..theta) followed by chi(2..theta).
  std::vector<IntVector> solutions;
};

// Realizations over Z/p whose Cartan matrix is exactly `gcm`. The pairing equations
// a_ij alpha_ii = alpha_ij + alpha_ji = a_ji alpha_jj (mod p) are generated from the matrix.
ExcludedSearch excluded_matrix_search(std::int64_t p, const GeneralizedCartanMatrix& gcm);

// The nine (p, matrix) pairs that small primes have to rule out.
std::vector<std::pair<std::int64_t, GeneralizedCartanMatrix>> excluded_matrices();

inline constexpr std::size_t kAutomorphismGuard = 200'000;

// Aut(group) as matrices acting on element exponent vectors. Supports cyclic groups and
// elementary abelian p-groups; throws ResourceGuardError above kAutomorphismGuard elements.
std::vector<IntMatrix> automorphisms(const GroupData& group);

// True iff some automorphism phi and permutation sigma satisfy
// g(j) = phi^{-1}(h(sigma j)) and chi(j) = eta(sigma j) o phi for all j.
bool iso_equivalent(const RealizationData& r1, const RealizationData& r2);

// Lexicographically least (g(1), chi(1), g(2), chi(2), ...) over the isomorphism class.
RealizationData canonical_form(const RealizationData& r);

struct ZpClass {
  RealizationData representative;
  std::size_t members = 0;  // raw realizations with g(1) = u in this class
};

struct ZpFamily {
  std::string diagram;
  std::size_t rank = 0;
  std::vector<ZpClass> classes;  // sorted by canonical representative
  mpz_class nichols_dimension;
  mpz_class bosonization_dimension;  // p * nichols_dimension
};

struct ZpClassification {
  std::int64_t p = 0;
  std::vector<ZpFamily> families;  // ordered by rank, then diagram name

  const ZpFamily* find(const std::string& diagram) const;
  std::size_t count(const std::string& diagram) const;
};

// Finite-type Nichols algebras over Z/p, p an odd prime <= 100: quantum lines and planes,
// A2, B2, G2, and for p = 3 also the rank three and four families.
ZpClassification classify_zp(std::int64_t p);

}  // namespace nichols
