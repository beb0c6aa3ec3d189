#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nichols/cartan_matrix.hpp"
#include "nichols/root_of_unity.hpp"

namespace nichols {

// Square matrix (b_ij) of roots of unity: c(x_i (x) x_j) = b_ij x_j (x) x_i.
class BraidingMatrix {
 public:
  BraidingMatrix() = default;
  // Throws PreconditionError unless the matrix is square and nonempty.
  explicit BraidingMatrix(std::vector<std::vector<RootOfUnity>> entries);

  std::size_t theta() const noexcept { return b_.size(); }
  const RootOfUnity& operator()(std::size_t i, std::size_t j) const { return b_[i][j]; }
  const std::vector<std::vector<RootOfUnity>>& entries() const noexcept { return b_; }

  bool has_odd_order() const;
  // lcm of the orders of all entries.
  std::int64_t level() const;

  BraidingMatrix restrict_to(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const BraidingMatrix&, const BraidingMatrix&) = default;

 private:
  std::vector<std::vector<RootOfUnity>> b_;
};

struct CartanTypeResult {
  GeneralizedCartanMatrix gcm;
  IntVector diagonal_orders;  // N_i = order(b_ii)
};

// The generalized Cartan matrix with b_ij b_ji = b_ii^{a_ij} and -N_i < a_ij <= 0, or
// nothing when some b_ii = 1 or some product is not a power of b_ii.
std::optional<CartanTypeResult> cartan_type(const BraidingMatrix& b);

// Blocks of indices (0-based, each sorted, ordered by first element) linked by b_ij b_ji != 1.
std::vector<std::vector<std::size_t>> connected_components(const BraidingMatrix& b);

bool is_symmetric(const BraidingMatrix& b);

struct FLWitness {
  IntVector d;
  RootOfUnity q;
};

enum class FLAbsence { NotFLType, NonSymmetrizable };

struct FLSearch {
  std::optional<FLWitness> witness;
  FLAbsence reason = FLAbsence::NotFLType;  // meaningful only without a witness

  explicit operator bool() const noexcept { return witness.has_value(); }
};

// Exhaustive search for d and q with d_i a_ij = d_j a_ji and b_ij = q^{d_i a_ij}.
// Requires every entry to have odd order.
FLSearch fl_witness(const BraidingMatrix& b, const CartanTypeResult& ct);

// The arithmetic rank-two test on coprime d and the residues k_i.
// Requires a connected symmetric 2x2 braiding with entries of odd order.
bool fl_rank2_criterion(const BraidingMatrix& b, const CartanTypeResult& ct);

// Same diagonal, off-diagonal entries replaced by the odd-order square root of b_ij b_ji.
// This is the symmetric braiding reached by twisting. Requires odd order.
BraidingMatrix symmetric_companion(const BraidingMatrix& b);

// Every principal 2x2 submatrix, symmetrized when necessary, admits an FL witness.
bool is_locally_fl(const BraidingMatrix& b, const CartanTypeResult& ct);

}  // namespace nichols
