// Command-line workbench: classify a module's submodule lattice, run the
// verification suites over the exhaustive instance family, search for
// separating examples, and export the lattice as Graphviz DOT.
//
// Exit codes: 0 success (suites passed / witness found); 1 suite assertion
// failures; 2 usage or input errors; 3 search exhausted without a witness.
// Progress goes to stderr; reports go to stdout or --out.

#include <iomanip>
#include <iostream>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modlat/classify.hpp"
#include "modlat/error.hpp"
#include "modlat/export.hpp"
#include "modlat/harness.hpp"
#include "modlat/json_io.hpp"

namespace {

// Writes to the given path, or stdout when the path is empty.
bool emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return false;
  }
  out << text;
  return !out.fail();
}

// Family bounds shared by `verify` and `search`.
struct FamilyFlags {
  modlat::InstanceFamily family;
  bool no_triple = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-modulus", family.max_modulus,
                    "largest single-coordinate modulus (rings Z2..Zmax)");
    cmd->add_option("--max-pair-modulus", family.max_pair_modulus,
                    "largest modulus in two-coordinate rings ZaxZb");
    cmd->add_option("--max-module-size", family.max_module_size,
                    "largest module carrier size");
    cmd->add_option("--max-components", family.max_components,
                    "most cyclic components per module");
    cmd->add_flag("--no-triple", no_triple, "omit Z30 and Z2xZ3xZ5 from the family");
  }
  modlat::InstanceFamily resolved() const {
    modlat::InstanceFamily f = family;
    f.include_triple = !no_triple;
    return f;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "workbench for finite commutative rings and their modules: submodule "
      "classification, verification suites, separation search, lattice export"};
  app.require_subcommand(1);

  std::string cl_ring, cl_module, cl_format = "json", cl_out;
  int cl_nabs_max = 4;
  CLI::App* classify =
      app.add_subcommand("classify", "classify every proper submodule of one module");
  classify->add_option("--ring", cl_ring, "ring spec, e.g. Z8 or Z2xZ3")->required();
  classify
      ->add_option("--module", cl_module,
                   "module spec: cyclic orders like 8 or 2,3, or a JSON object")
      ->required();
  classify->add_option("--format", cl_format, "json, dot, or text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  classify->add_option("--out", cl_out, "write the report to a file");
  classify->add_option("--nabs-max", cl_nabs_max, "largest n-absorbing arity to evaluate");

  std::string vf_suite = "all", vf_out;
  FamilyFlags vf_flags;
  CLI::App* verify = app.add_subcommand(
      "verify", "run one verification suite (or all) over the instance family");
  verify->add_option("--suite", vf_suite, "suite id or 'all'");
  vf_flags.attach(verify);
  verify->add_option("--out", vf_out, "write the JSON report to a file");

  std::string se_left, se_right, se_out;
  FamilyFlags se_flags;
  CLI::App* search = app.add_subcommand(
      "search", "first proper submodule satisfying --left but not --right");
  search->add_option("--left", se_left, "predicate expected true")->required();
  search->add_option("--right", se_right, "predicate expected false")->required();
  se_flags.attach(search);
  search->add_option("--out", se_out, "write the JSON outcome to a file");

  std::string ex_ring, ex_module, ex_out;
  CLI::App* exp =
      app.add_subcommand("export", "write the submodule lattice as Graphviz DOT");
  exp->add_option("--ring", ex_ring, "ring spec")->required();
  exp->add_option("--module", ex_module, "module spec")->required();
  exp->add_option("--out", ex_out, "output DOT file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) {
      const modlat::Ring ring = modlat::parse_ring_spec(cl_ring);
      const modlat::Module mod = modlat::parse_module_spec(ring, cl_module);
      modlat::ClassifyOptions opts;
      opts.nabs_max = cl_nabs_max;
      const modlat::Classification c = modlat::classify_all(mod, opts);
      std::string text;
      if (cl_format == "json")
        text = modlat::dump_report(modlat::to_json(c));
      else if (cl_format == "dot")
        text = modlat::lattice_dot(c);
      else
        text = modlat::classification_text(c);
      return emit(text, cl_out) ? 0 : 2;
    }

    if (verify->parsed()) {
      const modlat::InstanceFamily fam = vf_flags.resolved();
      std::vector<modlat::SuiteReport> reports;
      if (vf_suite == "all")
        reports = modlat::run_all_suites(fam);
      else
        reports.push_back(modlat::run_suite(vf_suite, fam));
      bool all_passed = true;
      for (const modlat::SuiteReport& rep : reports) {
        all_passed = all_passed && rep.passed();
        std::cerr << rep.suite << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
                  << rep.instances << " instances, " << rep.checks << " checks, "
                  << rep.failures.size() << " failures, " << rep.findings.size()
                  << " findings, " << std::fixed << std::setprecision(2)
                  << rep.wall_seconds << "s)\n";
      }
      nlohmann::json doc;
      if (reports.size() == 1) {
        doc = modlat::to_json(reports.front());
      } else {
        doc = nlohmann::json::array();
        for (const modlat::SuiteReport& rep : reports) doc.push_back(modlat::to_json(rep));
      }
      if (!emit(modlat::dump_report(doc), vf_out)) return 2;
      return all_passed ? 0 : 1;
    }

    if (search->parsed()) {
      const modlat::SearchOutcome s =
          modlat::search_separating(se_left, se_right, se_flags.resolved());
      std::cerr << "search " << se_left << " vs " << se_right << ": "
                << (s.found ? "witness found" : "exhausted") << " after "
                << s.submodules_checked << " submodules\n";
      if (!emit(modlat::dump_report(modlat::to_json(s)), se_out)) return 2;
      return s.found ? 0 : 3;
    }

    if (exp->parsed()) {
      const modlat::Ring ring = modlat::parse_ring_spec(ex_ring);
      const modlat::Module mod = modlat::parse_module_spec(ring, ex_module);
      const modlat::Classification c = modlat::classify_all(mod);
      return emit(modlat::lattice_dot(c), ex_out) ? 0 : 2;
    }
  } catch (const modlat::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
