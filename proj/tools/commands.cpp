#include "commands.hpp"

#include <filesystem>
#include <fstream>

#include "nichols/antisym.hpp"
#include "nichols/dimension.hpp"
#include "nichols/errors.hpp"

namespace nichols::cli {

namespace {

CartanTypeResult require_cartan(const BraidingMatrix& b) {
  auto ct = cartan_type(b);
  if (!ct) throw PreconditionError("the braiding is not of Cartan type");
  return *ct;
}

bool equal_orders_per_component(const BraidingMatrix& b) {
  for (const auto& comp : connected_components(b))
    for (std::size_t i : comp)
      if (b(i, i).order() != b(comp.front(), comp.front()).order()) return false;
  return true;
}

IntVector diagonal_orders(const BraidingMatrix& b) {
  IntVector v;
  for (std::size_t i = 0; i < b.theta(); ++i) v.push_back(b(i, i).order());
  return v;
}

// Fills "finite_type", "components", "dimension", "top_degree" and "hilbert".
void dimension_fields(Json& out, const BraidingMatrix& b, const CartanTypeResult& ct) {
  const bool finite = is_finite_type(ct.gcm);
  out["finite_type"] = finite;
  if (!finite) {
    out["components"] = index_blocks_to_json(connected_components(b));
    out["dimension"] = nullptr;
    out["top_degree"] = nullptr;
    out["hilbert"] = nullptr;
    return;
  }
  Json comps = Json::array();
  for (const auto& c : component_data(b, ct)) {
    Json idx = Json::array();
    for (auto i : c.indices) idx.push_back(i + 1);
    comps.push_back(Json{{"indices", std::move(idx)},
                         {"order", c.order},
                         {"diagram", diagram_label(ct.gcm.restrict_to(c.indices))},
                         {"positive_roots", c.roots.positive_roots.size()}});
  }
  out["components"] = std::move(comps);
  out["dimension"] = nichols_dimension(b, ct).get_str();
  const std::int64_t top = top_degree(b, ct);
  out["top_degree"] = top;
  if (equal_orders_per_component(b)) {
    Json h = Json::array();
    for (const auto& x : graded_hilbert(b, ct, top)) {
      if (!x.fits_slong_p()) throw ResourceGuardError("Hilbert coefficient size", 128, 64);
      h.push_back(x.get_si());
    }
    out["hilbert"] = std::move(h);
  } else {
    out["hilbert"] = nullptr;
  }
}

Json total_dimension_json(const TotalDimension& td) {
  Json ranks = Json::array();
  for (auto r : td.ranks) ranks.push_back(r);
  return Json{{"ranks", std::move(ranks)},
              {"total", td.total ? Json(td.total->get_str()) : Json(nullptr)},
              {"capped", td.capped}};
}

Json fl_json(const FLSearch& s) {
  if (s.witness)
    return Json{{"fl_type", true},
                {"witness", Json{{"d", int_vector_to_json(s.witness->d)}, {"q", s.witness->q.to_string()}}},
                {"reason", nullptr}};
  return Json{{"fl_type", false},
              {"witness", nullptr},
              {"reason", s.reason == FLAbsence::NonSymmetrizable ? "non_symmetrizable" : "not_fl_type"}};
}

Json twist_json(const BraidingMatrix& b) {
  const Symmetrization s = symmetrize(b);
  const BraidingMatrix twisted = braiding_of_exponents(s.twisted);
  Json g = Json::array();
  for (const auto& v : s.twisted.g) g.push_back(int_vector_to_json(v));
  Json out = realization_to_json(RealizationData{s.realization.group, s.realization.g, s.realization.chi});
  out["alpha"] = int_matrix_to_json(s.realization.alpha);
  out["cocycle"] = int_matrix_to_json(s.cocycle.c);
  out["alpha_twisted"] = int_matrix_to_json(s.twisted.alpha);
  out["g_twisted"] = std::move(g);
  out["twisted_braiding"] = braiding_to_json(twisted);
  out["symmetric"] = is_symmetric(twisted);
  return out;
}

}  // namespace

Json cmd_cartan_type(const BraidingMatrix& b) {
  const auto ct = cartan_type(b);
  Json out{{"input", input_echo(b)},
           {"gcm", ct ? int_matrix_to_json(ct->gcm.rows()) : Json(nullptr)},
           {"orders", int_vector_to_json(diagonal_orders(b))},
           {"components", index_blocks_to_json(connected_components(b))},
           {"symmetric", is_symmetric(b)}};
  if (ct) {
    const bool finite = is_finite_type(ct->gcm);
    out["finite_type"] = finite;
    out["diagram"] = finite ? Json(diagram_label(ct->gcm)) : Json(nullptr);
  } else {
    out["finite_type"] = nullptr;
    out["diagram"] = nullptr;
  }
  return out;
}

Json cmd_dim(const BraidingMatrix& b) {
  const CartanTypeResult ct = require_cartan(b);
  if (!b.has_odd_order()) throw PreconditionError("the dimension formula requires entries of odd order");
  Json out{{"input", input_echo(b)}};
  dimension_fields(out, b, ct);
  return out;
}

Json cmd_twist_symmetrize(const BraidingMatrix& b) {
  Json out{{"input", input_echo(b)}};
  out.update(twist_json(b));
  return out;
}

Json cmd_zp(std::int64_t p, const std::optional<std::string>& golden_dir) {
  if (p > 100 || !is_odd_prime(p)) throw PreconditionError("--p must be an odd prime at most 100");
  const ZpClassification cls = classify_zp(p);
  Json families = Json::array();
  for (const auto& f : cls.families) {
    Json classes = Json::array();
    for (const auto& c : f.classes)
      classes.push_back(Json{{"representative", realization_to_json(c.representative)},
                             {"braiding", braiding_to_json(braiding_of(c.representative))},
                             {"members", c.members}});
    families.push_back(Json{{"diagram", f.diagram},
                            {"rank", f.rank},
                            {"count", f.classes.size()},
                            {"nichols_dimension", f.nichols_dimension.get_str()},
                            {"bosonization_dimension", f.bosonization_dimension.get_str()},
                            {"classes", std::move(classes)}});
  }
  Json out{{"p", p}, {"families", std::move(families)}};
  if (golden_dir) {
    std::filesystem::create_directories(*golden_dir);
    const auto path = std::filesystem::path(*golden_dir) / ("zp_classify_p" + std::to_string(p) + ".json");
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << out.dump(2) << "\n";
  }
  return out;
}

Json cmd_serre_check(const BraidingMatrix& b, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > b.theta() || j > b.theta() || i == j)
    throw PreconditionError("--i and --j must be distinct indices in 1..theta");
  const CartanTypeResult ct = require_cartan(b);
  const std::size_t i0 = i - 1, j0 = j - 1;
  const std::int64_t a = ct.gcm(i0, j0);
  const std::int64_t r = 1 - a;
  const BraidedPoly z = serre_element(b, i0, j0, a);
  const RootOfUnity value = serre_condition_value(b, i0, j0, r);
  return Json{{"input", input_echo(b)},
              {"i", i},
              {"j", j},
              {"a_ij", a},
              {"r", r},
              {"serre_element", z.to_string()},
              {"terms", braided_poly_to_json(z)},
              {"closed_form_match", z == serre_closed_form(b, i0, j0, r)},
              {"condition_value", value.to_string()},
              {"condition_holds", value.is_one()},
              {"primitive", is_primitive(z)}};
}

Json cmd_antisym_dim(const BraidingMatrix& b, int degree_cap) {
  const CartanTypeResult ct = require_cartan(b);
  return total_dimension_json(total_dimension(b, ct, degree_cap));
}

Json cmd_analyze(const BraidingMatrix& b, bool oracle, int degree_cap) {
  const Json null = nullptr;
  Json out{{"input", input_echo(b)}, {"odd_order", b.has_odd_order()}};
  const auto ct = cartan_type(b);
  out["cartan"] = ct ? Json{{"gcm", int_matrix_to_json(ct->gcm.rows())},
                            {"orders", int_vector_to_json(ct->diagonal_orders)}}
                     : null;
  out["components"] = index_blocks_to_json(connected_components(b));
  for (const char* key : {"finite_type", "diagram", "symmetrizable", "symmetrizer", "fl", "locally_fl", "twist", "dimension"})
    out[key] = null;
  if (!ct) return out;

  const bool finite = is_finite_type(ct->gcm);
  out["finite_type"] = finite;
  if (finite) out["diagram"] = diagram_label(ct->gcm);
  const auto sym = symmetrizer(ct->gcm);
  out["symmetrizable"] = sym.has_value();
  if (sym) out["symmetrizer"] = int_vector_to_json(*sym);
  if (!b.has_odd_order()) return out;

  out["fl"] = fl_json(fl_witness(b, *ct));
  out["locally_fl"] = is_locally_fl(b, *ct);
  out["twist"] = twist_json(b);
  if (!finite) return out;

  Json dim;
  dimension_fields(dim, b, *ct);
  out["dimension"] = dim;
  if (oracle) {
    const TotalDimension td = total_dimension(b, *ct, degree_cap);
    out["oracle"] = total_dimension_json(td);
    // degree-by-degree agreement where both sides exist, plus the total once it is reached
    bool match = true;
    if (dim["hilbert"].is_array()) {
      const Json& h = dim["hilbert"];
      for (std::size_t n = 0; n < td.ranks.size(); ++n) {
        const std::int64_t expected = n < h.size() ? h[n].get<std::int64_t>() : 0;
        match = match && expected == static_cast<std::int64_t>(td.ranks[n]);
      }
    }
    if (td.total) match = match && td.total->get_str() == dim["dimension"].get<std::string>();
    out["oracle_match"] = match;
  }
  return out;
}

}  // namespace nichols::cli
