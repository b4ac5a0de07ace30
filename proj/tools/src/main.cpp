#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "serreq/error.hpp"
#include "serreq/grmod.hpp"
#include "serreq/session.hpp"
#include "serreq/testkit.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw serreq::UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_check() {
  using namespace serreq;
  const std::uint64_t seed = test_seed();
  std::cout << "seed " << seed << "\n";
  bool all_ok = true;
  auto report = [&](const std::string& label, const AxiomSuiteResult& r) {
    std::cout << label << ": " << r.checks << " checks, "
              << r.failures.size() << " failures\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    all_ok = all_ok && r.ok();
  };

  auto z = ZModCategory::create();
  Sampler zs = zmod_sampler(z);
  report("zmod", run_axiom_suite(zs, 120, seed));

  auto zq = SerreQuotientCategory::create(torsion_subcategory(z));
  report("zmod/torsion", run_axiom_suite(quotient_sampler(zq, zs), 80, seed));

  auto gr = GrmodCategory::create(standard_ring({"x", "y"}));
  Sampler gs = grmod_sampler(gr);
  report("grmod[x,y]", run_axiom_suite(gs, 60, seed));

  auto sheaves =
      coherent_sheaf_category(quasi_zero_proj_subcategory(gr));
  report("coh(P^1)", run_axiom_suite(quotient_sampler(sheaves, gs), 40, seed));

  if (!all_ok) throw serreq::InternalError("property suite reported failures");
  std::cout << "all suites passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre quotient and coherent sheaf calculator"};
  app.require_subcommand(1);

  std::string session_path;
  std::string output = "json";
  std::string category;
  CLI::App* run = app.add_subcommand("run", "Execute a JSON session file");
  run->add_option("session", session_path, "Path to the session document")
      ->required();
  run->add_option("--output", output, "Output format: json or text");
  run->add_option("--category", category,
                  "Override the session category (zmod, proj:n, toric)");

  std::string demo_name;
  std::string demo_output = "json";
  CLI::App* demo = app.add_subcommand("demo", "Run a bundled demo session");
  demo->add_option("name", demo_name, "z-lift, p1-iso or p1xp1-zero")
      ->required();
  demo->add_option("--output", demo_output, "Output format: json or text");

  app.add_subcommand("check", "Run the embedded property-test suites");

  try {
    app.parse(argc, argv);
    if (run->parsed()) {
      std::cout << serreq::run_session(read_file(session_path), category,
                                       serreq::parse_output_format(output));
      return 0;
    }
    if (demo->parsed()) {
      std::cout << serreq::run_session(
          serreq::demo_session(demo_name), "",
          serreq::parse_output_format(demo_output));
      return 0;
    }
    return run_check();
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const serreq::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const serreq::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
