#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "nichols/braiding.hpp"
#include "nichols/free_braided.hpp"
#include "nichols/group.hpp"
#include "nichols/realization.hpp"
#include "nichols/twisting.hpp"

namespace nichols::cli {

using Json = nlohmann::ordered_json;

// Structurally invalid input (bad JSON, wrong shapes, unparsable roots, rank 0).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

// {"theta": 2, "entries": [["1/3", "1/3"], ["1/3", "1/3"]]}; "theta" is optional on input.
BraidingMatrix braiding_from_json(const Json& j);
Json braiding_to_json(const BraidingMatrix& b);
Json input_echo(const BraidingMatrix& b);

Json int_matrix_to_json(const IntMatrix& m);
Json int_vector_to_json(const IntVector& v);
// 0-based index lists become 1-based.
Json index_blocks_to_json(const std::vector<std::vector<std::size_t>>& blocks);

// {"group": [E_1, ...], "g": [[...]], "chi": [[...]]}
Json realization_to_json(const RealizationData& r);
Json exponent_matrix_to_json(const ExponentMatrix& m);

// {"level": L, "coords": ["c0", "c1", ...]} in the power basis of Z[zeta_L].
Json cyclotomic_to_json(const CyclotomicInt& c);
Json braided_poly_to_json(const BraidedPoly& p);

}  // namespace nichols::cli
