#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "codec.hpp"

namespace nichols::cli {

Json cmd_cartan_type(const BraidingMatrix& b);
Json cmd_dim(const BraidingMatrix& b);
Json cmd_twist_symmetrize(const BraidingMatrix& b);
// Writes <golden_dir>/zp_classify_p<p>.json as well when a directory is given.
Json cmd_zp(std::int64_t p, const std::optional<std::string>& golden_dir);
// i and j are 1-based.
Json cmd_serre_check(const BraidingMatrix& b, std::size_t i, std::size_t j);
Json cmd_antisym_dim(const BraidingMatrix& b, int degree_cap);
Json cmd_analyze(const BraidingMatrix& b, bool oracle, int degree_cap);

}  // namespace nichols::cli
