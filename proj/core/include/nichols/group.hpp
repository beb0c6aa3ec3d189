#pragma once

#include <cstdint>
#include <vector>

#include "nichols/cartan_matrix.hpp"
#include "nichols/root_of_unity.hpp"

namespace nichols {

// Finite abelian group Z/E_1 + ... + Z/E_M with E_1 | E_2 | ... | E_M.
// Elements and characters are exponent vectors in the basis y(h) and its dual basis gamma(h),
// with <gamma(i), y(j)> = q^{D_i delta_ij}, q = exp(2 pi i / E_M), D_i = E_M / E_i.
class GroupData {
 public:
  GroupData() : GroupData(IntVector{1}) {}
  // Factors equal to 1 are allowed (trivial summands). Throws PreconditionError on a broken chain.
  explicit GroupData(IntVector invariant_factors);

  std::size_t rank() const noexcept { return E_.size(); }
  const IntVector& factors() const noexcept { return E_; }
  std::int64_t factor(std::size_t i) const { return E_[i]; }
  std::int64_t exponent() const noexcept { return E_.back(); }
  std::int64_t D(std::size_t i) const { return E_.back() / E_[i]; }
  RootOfUnity q() const { return RootOfUnity(1, E_.back()); }
  std::int64_t order() const;

  // sum_h D_h chi_h g_h reduced modulo E_M.
  std::int64_t pairing_exponent(const IntVector& chi, const IntVector& g) const;
  RootOfUnity pairing(const IntVector& chi, const IntVector& g) const;

  // Reduces coordinate h modulo E_h into [0, E_h).
  IntVector reduce(const IntVector& v) const;
  void require_vector(const IntVector& v) const;

  friend bool operator==(const GroupData&, const GroupData&) = default;

 private:
  IntVector E_;
};

// Yetter-Drinfeld data: x_i has degree g(i) and weight chi(i).
struct RealizationData {
  GroupData group;
  std::vector<IntVector> g;
  std::vector<IntVector> chi;

  std::size_t theta() const noexcept { return g.size(); }
  // Shape checks plus <chi(i), g(i)> != 1.
  void validate() const;
};

}  // namespace nichols
