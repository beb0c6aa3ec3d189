#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "nichols/antisym.hpp"
#include "nichols/errors.hpp"

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitRefused = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace nichols;
  using namespace nichols::cli;

  CLI::App app{"Nichols algebras of diagonal type: Cartan data, dimensions, twisting and classification"};
  app.require_subcommand(1);

  std::string input;
  int degree_cap = kDefaultDegreeCap;
  bool oracle = false;
  std::int64_t p = 0;
  std::string golden;
  std::size_t si = 0, sj = 0;

  auto* cartan = app.add_subcommand("cartan-type", "Cartan matrix, components and finite-type verdict");
  auto* dim = app.add_subcommand("dim", "Dimension and Hilbert series from the root system");
  auto* twist = app.add_subcommand("twist-symmetrize", "Realize over a group and twist to a symmetric braiding");
  auto* zp = app.add_subcommand("zp-classify", "Classify realizations over Z/(p)");
  auto* serre = app.add_subcommand("serre-check", "Serre element, its condition value and primitivity");
  auto* antisym = app.add_subcommand("antisym-dim", "Graded dimensions from quantum antisymmetrizers");
  auto* analyze = app.add_subcommand("analyze", "Full pipeline report");

  for (auto* sub : {cartan, dim, twist, serre, antisym, analyze})
    sub->add_option("--input", input, "braiding JSON file")->required();
  for (auto* sub : {antisym, analyze})
    sub->add_option("--degree-cap", degree_cap, "largest degree for the antisymmetrizer")->check(CLI::NonNegativeNumber);
  analyze->add_flag("--oracle", oracle, "cross-check dimensions with antisymmetrizer ranks");
  zp->add_option("--p", p, "odd prime at most 100")->required();
  zp->add_option("--golden", golden, "also write the report into this directory");
  serre->add_option("--i", si, "first index (1-based)")->required();
  serre->add_option("--j", sj, "second index (1-based)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    Json out;
    if (zp->parsed()) {
      out = cmd_zp(p, golden.empty() ? std::nullopt : std::optional<std::string>(golden));
    } else {
      const BraidingMatrix b = braiding_from_json(read_json_file(input));
      if (cartan->parsed()) out = cmd_cartan_type(b);
      else if (dim->parsed()) out = cmd_dim(b);
      else if (twist->parsed()) out = cmd_twist_symmetrize(b);
      else if (serre->parsed()) out = cmd_serre_check(b, si, sj);
      else if (antisym->parsed()) out = cmd_antisym_dim(b, degree_cap);
      else out = cmd_analyze(b, oracle, degree_cap);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const PreconditionError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const ResourceGuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const AmbiguityError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
