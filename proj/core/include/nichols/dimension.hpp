#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "nichols/braiding.hpp"

namespace nichols {

struct ComponentData {
  std::vector<std::size_t> indices;
  std::int64_t order = 1;  // N_I = lcm of the diagonal orders
  RootSystemData roots;
};

// Per-component data of a finite-type Cartan braiding with entries of odd order.
// Throws PreconditionError otherwise.
std::vector<ComponentData> component_data(const BraidingMatrix& b, const CartanTypeResult& ct);

// prod_I N_I^{|R+(I)|}.
mpz_class nichols_dimension(const BraidingMatrix& b, const CartanTypeResult& ct);

// Largest degree with a nonzero graded piece: sum_I sum_beta (N_I - 1) ht(beta).
std::int64_t top_degree(const BraidingMatrix& b, const CartanTypeResult& ct);

// Coefficients of t^0..t^cap in prod_I prod_beta (1 + t^h + ... + t^{(N_I-1)h}), h = ht(beta).
// Additionally requires equal diagonal orders inside each component.
std::vector<mpz_class> graded_hilbert(const BraidingMatrix& b, const CartanTypeResult& ct, std::int64_t cap);

}  // namespace nichols
