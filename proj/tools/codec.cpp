#include "codec.hpp"

#include <fstream>
#include <sstream>

namespace nichols::cli {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

BraidingMatrix braiding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw MalformedInput("input must be an object with an \"entries\" field");
  const Json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw MalformedInput("\"entries\" must be a nonempty array of rows");
  if (j.contains("theta")) {
    const Json& t = j.at("theta");
    if (!t.is_number_integer() || t.get<std::int64_t>() != static_cast<std::int64_t>(rows.size()))
      throw MalformedInput("\"theta\" must equal the number of rows");
  }
  std::vector<std::vector<RootOfUnity>> entries;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) throw MalformedInput("\"entries\" must be a square matrix");
    std::vector<RootOfUnity> r;
    for (const Json& e : row) {
      if (!e.is_string()) throw MalformedInput("braiding entries must be strings \"num/den\"");
      try {
        r.push_back(RootOfUnity::parse(e.get<std::string>()));
      } catch (const std::invalid_argument& ex) {
        throw MalformedInput(ex.what());
      }
    }
    entries.push_back(std::move(r));
  }
  return BraidingMatrix(std::move(entries));
}

Json braiding_to_json(const BraidingMatrix& b) {
  Json rows = Json::array();
  for (const auto& row : b.entries()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

Json input_echo(const BraidingMatrix& b) { return Json{{"theta", b.theta()}, {"entries", braiding_to_json(b)}}; }

Json int_vector_to_json(const IntVector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(int_vector_to_json(row));
  return a;
}

Json index_blocks_to_json(const std::vector<std::vector<std::size_t>>& blocks) {
  Json a = Json::array();
  for (const auto& blk : blocks) {
    Json r = Json::array();
    for (auto i : blk) r.push_back(i + 1);
    a.push_back(std::move(r));
  }
  return a;
}

Json realization_to_json(const RealizationData& r) {
  Json g = Json::array();
  Json chi = Json::array();
  for (const auto& v : r.g) g.push_back(int_vector_to_json(v));
  for (const auto& v : r.chi) chi.push_back(int_vector_to_json(v));
  return Json{{"group", int_vector_to_json(r.group.factors())}, {"g", std::move(g)}, {"chi", std::move(chi)}};
}

Json exponent_matrix_to_json(const ExponentMatrix& m) {
  Json j = realization_to_json(RealizationData{m.group, m.g, m.chi});
  j["alpha"] = int_matrix_to_json(m.alpha);
  return j;
}

Json cyclotomic_to_json(const CyclotomicInt& c) {
  Json coords = Json::array();
  for (const auto& x : c.coeffs()) coords.push_back(x.get_str());
  return Json{{"level", c.level()}, {"coords", std::move(coords)}};
}

Json braided_poly_to_json(const BraidedPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json word = Json::array();
    for (auto x : w) word.push_back(x + 1);
    terms.push_back(Json{{"word", std::move(word)}, {"coeff", cyclotomic_to_json(c)}});
  }
  return terms;
}

}  // namespace nichols::cli
