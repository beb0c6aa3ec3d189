#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;

// Integer matrix with a_ii = 2, a_ij <= 0 off the diagonal and a_ij = 0 iff a_ji = 0.
class GeneralizedCartanMatrix {
 public:
  GeneralizedCartanMatrix() = default;
  // Throws PreconditionError when the matrix is not a generalized Cartan matrix.
  explicit GeneralizedCartanMatrix(IntMatrix a);

  std::size_t size() const noexcept { return a_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const IntMatrix& rows() const noexcept { return a_; }

  // Principal submatrix on the given (sorted) indices.
  GeneralizedCartanMatrix restrict_to(const std::vector<std::size_t>& indices) const;
  // Blocks of the finest partition with a_ij = 0 between blocks, each sorted, ordered by first element.
  std::vector<std::vector<std::size_t>> components() const;

  friend bool operator==(const GeneralizedCartanMatrix&, const GeneralizedCartanMatrix&) = default;

 private:
  IntMatrix a_;
};

// Coprime positive d with d_i a_ij = d_j a_ji, normalized to gcd 1 on every component.
std::optional<IntVector> symmetrizer(const GeneralizedCartanMatrix& g);

// Finite-type recognizer based on principal minors (all of them must be positive).
bool finite_type_by_minors(const GeneralizedCartanMatrix& g);

struct ReflectionClosure {
  bool terminated = false;           // false when the cap was reached
  std::vector<IntVector> roots;      // everything generated so far
};

// Largest coefficient of a positive root in any finite root system (reached in E8).
inline constexpr std::int64_t kMaxFiniteRootCoefficient = 6;

// Closes the simple roots under simple reflections, keeping nonnegative vectors.
// Gives up (terminated = false) at the cap or as soon as a coefficient exceeds
// kMaxFiniteRootCoefficient.
ReflectionClosure reflection_closure(const GeneralizedCartanMatrix& g, std::size_t cap);

// Upper bound on the number of positive roots of a finite-type matrix of this rank.
std::size_t finite_root_bound(std::size_t rank);

// Finite-type recognizer based on termination of the reflection closure.
bool finite_type_by_reflections(const GeneralizedCartanMatrix& g);

// Runs both recognizers; a disagreement throws InternalFault.
bool is_finite_type(const GeneralizedCartanMatrix& g);

struct RootSystemData {
  std::vector<IntVector> positive_roots;  // sorted by height, then lexicographically descending
  IntVector heights;
};

inline constexpr std::size_t kReflectionClosureCap = 1'000'000;

// Requires finite type (PreconditionError otherwise).
RootSystemData positive_roots(const GeneralizedCartanMatrix& g);

// Convenience name such as "A2", "B2", "G2" or "A2xA1". Returns "indefinite" for
// matrices that are not of finite type.
std::string diagram_label(const GeneralizedCartanMatrix& g);

}  // namespace nichols
