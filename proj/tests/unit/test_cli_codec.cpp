#include "codec.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace nichols;
using nichols::cli::Json;
using nichols::cli::MalformedInput;

TEST_SUITE("cli_codec") {

TEST_CASE("braidings round-trip through JSON") {
  const auto b = testing::braiding({{"1/7", "4/7"}, {"2/7", "1/7"}});
  const Json j = cli::input_echo(b);
  CHECK(j.at("theta") == 2);
  CHECK(j.at("entries")[0][1] == "4/7");
  CHECK(j.at("entries") == cli::braiding_to_json(b));
  CHECK(cli::braiding_from_json(j) == b);
  // theta may be omitted; roots are canonicalized
  const auto k = cli::braiding_from_json(cli::parse_json_text(R"({"entries": [["2/6"]]})"));
  CHECK(k(0, 0) == RootOfUnity(1, 3));
  CHECK(cli::braiding_to_json(k)[0][0] == "1/3");
}

TEST_CASE("malformed braidings") {
  for (const char* text : {R"({"theta": 0, "entries": []})", R"({"entries": [["1/3", "1/3"], ["1/3"]]})",
                           R"({"entries": [["1/0"]]})", R"({"entries": [["x"]]})", R"({"entries": [[3]]})",
                           R"({"theta": 2, "entries": [["1/3"]]})", R"({"entries": "1/3"})", R"([1, 2])"}) {
    CHECK_THROWS_AS(cli::braiding_from_json(cli::parse_json_text(text)), MalformedInput);
  }
  CHECK_THROWS_AS(cli::parse_json_text(R"({"entries": [["1/3")"), MalformedInput);
  CHECK_THROWS_AS(cli::read_json_file("/nonexistent/input.json"), MalformedInput);
}

TEST_CASE("helper encodings") {
  CHECK(cli::index_blocks_to_json({{0, 1}, {2}}).dump() == "[[1,2],[3]]");
  CHECK(cli::int_matrix_to_json({{2, -1}, {-1, 2}}).dump() == "[[2,-1],[-1,2]]");
  const auto c = CyclotomicInt::zeta_power(3, 1) + CyclotomicInt::one(3);
  const Json cj = cli::cyclotomic_to_json(c);
  CHECK(cj.at("level") == 3);
  CHECK(cj.at("coords").is_array());
  const auto b = testing::braiding({{"1/3", "1/3"}, {"1/3", "1/3"}});
  const auto p = BraidedPoly::letter(b, 0) * BraidedPoly::letter(b, 1);
  const Json pj = cli::braided_poly_to_json(p);
  REQUIRE(pj.size() == 1);
  CHECK(pj[0].at("word").dump() == "[1,2]");
}

}
