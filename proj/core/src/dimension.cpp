#include "nichols/dimension.hpp"

#include <numeric>

#include "nichols/errors.hpp"

namespace nichols {

std::vector<ComponentData> component_data(const BraidingMatrix& b, const CartanTypeResult& ct) {
  if (!b.has_odd_order()) throw PreconditionError("dimension formula requires entries of odd order");
  if (!is_finite_type(ct.gcm)) throw PreconditionError("dimension formula requires a finite-type Cartan matrix");
  std::vector<ComponentData> out;
  for (auto& comp : connected_components(b)) {
    ComponentData c;
    for (std::size_t i : comp) c.order = std::lcm(c.order, ct.diagonal_orders[i]);
    c.roots = positive_roots(ct.gcm.restrict_to(comp));
    c.indices = std::move(comp);
    out.push_back(std::move(c));
  }
  return out;
}

mpz_class nichols_dimension(const BraidingMatrix& b, const CartanTypeResult& ct) {
  mpz_class dim = 1;
  for (const auto& c : component_data(b, ct)) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(c.order), c.roots.positive_roots.size());
    dim *= f;
  }
  return dim;
}

std::int64_t top_degree(const BraidingMatrix& b, const CartanTypeResult& ct) {
  std::int64_t top = 0;
  for (const auto& c : component_data(b, ct))
    for (auto h : c.roots.heights) top += (c.order - 1) * h;
  return top;
}

std::vector<mpz_class> graded_hilbert(const BraidingMatrix& b, const CartanTypeResult& ct, std::int64_t cap) {
  if (cap < 0) throw PreconditionError("graded_hilbert: negative degree cap");
  const auto comps = component_data(b, ct);
  for (const auto& c : comps)
    for (std::size_t i : c.indices)
      if (ct.diagonal_orders[i] != c.order)
        throw PreconditionError("graded_hilbert requires equal diagonal orders inside each component");
  const auto len = static_cast<std::size_t>(cap) + 1;
  std::vector<mpz_class> series(len);
  series[0] = 1;
  for (const auto& c : comps) {
    for (auto h : c.roots.heights) {
      std::vector<mpz_class> next(len);
      for (std::size_t k = 0; k < len; ++k) {
        if (series[k] == 0) continue;
        for (std::int64_t m = 0; m < c.order; ++m) {
          const auto deg = k + static_cast<std::size_t>(m * h);
          if (deg >= len) break;
          next[deg] += series[k];
        }
      }
      series = std::move(next);
    }
  }
  return series;
}

}  // namespace nichols
