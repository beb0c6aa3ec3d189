#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/group.hpp"

namespace nichols {

// Strictly upper-triangular c with 0 <= c_ij < E_i, defining
// omega(tau, chi) = q^{sum_{i<j} D_i c_ij tau_j chi_i}.
struct CocycleData {
  GroupData group;
  IntMatrix c;  // M x M, zero on and below the diagonal

  static CocycleData trivial(const GroupData& group);
  void validate() const;
};

// A realization together with its exponent matrix: b_ij = q^{alpha_ij} = <chi(j), g(i)>,
// alpha_ij = sum_h D_h chi(j)_h g(i)_h mod E_M.
struct ExponentMatrix {
  GroupData group;
  IntMatrix alpha;
  std::vector<IntVector> chi;
  std::vector<IntVector> g;

  std::size_t theta() const noexcept { return alpha.size(); }
};

ExponentMatrix exponent_matrix_of(const RealizationData& r);
BraidingMatrix braiding_of_exponents(const ExponentMatrix& m);

std::int64_t omega_exponent(const CocycleData& c, const IntVector& tau, const IntVector& chi);
RootOfUnity omega(const CocycleData& c, const IntVector& tau, const IntVector& chi);

using CocycleFunction = std::function<RootOfUnity(const IntVector&, const IntVector&)>;

// Checks normalization, the cocycle identity and its commutator consequence on all
// triples of characters, or on `samples` random triples when given.
bool cocycle_identity_check(const GroupData& group, const CocycleFunction& w,
                            std::optional<std::size_t> samples = std::nullopt, std::uint64_t seed = 1);
bool cocycle_identity_check(const CocycleData& c, std::optional<std::size_t> samples = std::nullopt,
                            std::uint64_t seed = 1);

// The twisted group element attached to a homogeneous vector of degree g and weight chi:
// g'_j = sum_{i<j} (D_i/D_j) c_ij chi_i + g_j - sum_{h>j} c_jh chi_h.
IntVector twisted_group_element(const CocycleData& c, const IntVector& g, const IntVector& chi);

// Twisted exponent matrix with updated group elements; characters are unchanged.
ExponentMatrix twist_exponents(const ExponentMatrix& m, const CocycleData& c);

// Realization over Z/E_1 + ... + Z/E_theta with chi(j) = gamma(j) reproducing b exactly.
ExponentMatrix realize_over_group(const BraidingMatrix& b);

struct Symmetrization {
  ExponentMatrix realization;
  CocycleData cocycle;
  ExponentMatrix twisted;
};

// A realization of b and a cocycle whose twist is symmetric with the same diagonal.
// Requires Cartan type and entries of odd order.
Symmetrization symmetrize(const BraidingMatrix& b);

}  // namespace nichols
