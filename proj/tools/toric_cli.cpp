// Command-line interface: analyze fans, enumerate Demazure roots, decide
// nefness, dualize polytopes, run the theorem sweep, export catalog fans.
//
// Exit codes: 0 success; 1 input/parse error; 2 precondition violation
// (invalid, non-smooth or non-complete fan, origin not interior);
// 3 internal theorem inconsistency.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "toric/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInconsistent = 3;

void write_output(const toric::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw toric::ToricError("cannot write file '" + path + "'");
  out << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact toric fan analysis: Fano, nef divisors, Demazure roots"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "full pairwise cone-intersection validation");

  std::string analyze_fan_path, analyze_report_path;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "run every check on a fan and emit a report");
  cmd_analyze->add_option("fan", analyze_fan_path, "fan JSON file")->required();
  cmd_analyze->add_option("--report", analyze_report_path,
                          "also write the report JSON to this file");

  std::string roots_fan_path;
  CLI::App* cmd_roots =
      app.add_subcommand("roots", "Demazure root system of a fan");
  cmd_roots->add_option("fan", roots_fan_path, "fan JSON file")->required();

  std::string nef_fan_path, nef_divisor_path;
  int nef_ray = -1;
  CLI::App* cmd_nef = app.add_subcommand("nef", "nef/ample certificate for a divisor");
  cmd_nef->add_option("fan", nef_fan_path, "fan JSON file")->required();
  CLI::Option* opt_div =
      cmd_nef->add_option("--divisor", nef_divisor_path, "divisor JSON file");
  CLI::Option* opt_ray = cmd_nef->add_option(
      "--ray", nef_ray, "use the invariant divisor of this ray index");
  opt_div->excludes(opt_ray);

  std::string dual_path;
  CLI::App* cmd_dual = app.add_subcommand("dual", "dual polytope P*");
  cmd_dual->add_option("polytope", dual_path, "polytope JSON file")->required();

  std::string theorem_selection = "all";
  CLI::App* cmd_theorem = app.add_subcommand(
      "theorem", "verify the product-of-projective-spaces biconditional on a catalog");
  cmd_theorem->add_option("--catalog", theorem_selection, "dim2 | products | all")
      ->check(CLI::IsMember({"dim2", "products", "all"}));

  CLI::App* cmd_catalog = app.add_subcommand("catalog", "built-in fans");
  CLI::App* cmd_list = cmd_catalog->add_subcommand("list", "list entry names");
  std::string export_name, export_out;
  CLI::App* cmd_export =
      cmd_catalog->add_subcommand("export", "write a catalog fan as JSON");
  cmd_export->add_option("--name", export_name, "entry name")->required();
  cmd_export->add_option("--out", export_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (cmd_analyze->parsed()) {
      toric::Fan fan = toric::parse_fan(toric::load_json_file(analyze_fan_path));
      toric::AnalysisReport report = toric::analyze(fan, strict);
      toric::json j = toric::report_to_json(report);
      write_output(j, "");
      if (!analyze_report_path.empty()) write_output(j, analyze_report_path);
      return report.theorem_consistent ? kExitOk : kExitInconsistent;
    }
    if (cmd_roots->parsed()) {
      toric::Fan fan = toric::parse_fan(toric::load_json_file(roots_fan_path));
      write_output(toric::root_system_to_json(toric::demazure_roots(fan)), "");
      return kExitOk;
    }
    if (cmd_nef->parsed()) {
      toric::Fan fan = toric::parse_fan(toric::load_json_file(nef_fan_path));
      toric::ToricDivisor d;
      if (!nef_divisor_path.empty()) {
        d = toric::parse_divisor(toric::load_json_file(nef_divisor_path), fan);
      } else if (nef_ray >= 0) {
        d = toric::divisor_for_ray(fan, nef_ray);
      } else {
        std::cerr << "nef: need --divisor or --ray\n";
        return kExitParse;
      }
      toric::NefCertificate cert = toric::is_nef(fan, d);
      toric::json j = toric::nef_certificate_to_json(fan, d, cert);
      j["ample"] = toric::is_ample(fan, d).ample;
      write_output(j, "");
      return kExitOk;
    }
    if (cmd_dual->parsed()) {
      toric::VPolytope p = toric::parse_polytope(toric::load_json_file(dual_path));
      write_output(toric::polytope_to_json(toric::dual_polytope(p)), "");
      return kExitOk;
    }
    if (cmd_theorem->parsed()) {
      std::vector<toric::CatalogEntry> entries;
      if (theorem_selection == "dim2") {
        entries = toric::smooth_fano_surfaces();
      } else if (theorem_selection == "products") {
        for (const char* name : {"p3", "p1xp2", "p1xp1xp1"})
          entries.push_back(*toric::find_entry(name));
      } else {
        entries = toric::catalog_entries();
      }
      toric::SweepSummary s = toric::theorem_sweep(entries);
      for (const auto& [name, r] : s.results) {
        std::cout << name << ": fano=" << (r.fano ? "yes" : "no")
                  << " all_nef=" << (r.all_nef ? "yes" : "no") << " product=";
        if (r.product) {
          std::cout << "[";
          for (std::size_t i = 0; i < r.product->dims.size(); ++i)
            std::cout << (i ? "," : "") << r.product->dims[i];
          std::cout << "]";
        } else {
          std::cout << "none";
        }
        std::cout << " consistent=" << (r.theorem_consistent ? "yes" : "NO") << "\n";
      }
      std::cout << "fans=" << s.results.size() << " fano=" << s.fano_count
                << " all_nef=" << s.all_nef_count << " products=" << s.product_count
                << "\n";
      return s.all_consistent ? kExitOk : kExitInconsistent;
    }
    if (cmd_catalog->parsed()) {
      if (cmd_list->parsed()) {
        for (const toric::CatalogEntry& e : toric::catalog_entries())
          std::cout << e.name << ": " << e.description << "\n";
        return kExitOk;
      }
      if (cmd_export->parsed()) {
        std::optional<toric::CatalogEntry> e = toric::find_entry(export_name);
        if (!e) {
          std::cerr << "unknown catalog entry '" << export_name << "'\n";
          return kExitParse;
        }
        write_output(toric::fan_to_json(e->fan), export_out);
        return kExitOk;
      }
      std::cerr << "catalog: need a subcommand (list or export)\n";
      return kExitParse;
    }
  } catch (const toric::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const toric::UnboundedError& e) {
    std::cerr << "error: " << e.what()
              << " (certificate direction " << toric::to_string(e.direction) << ")\n";
    return kExitPrecondition;
  } catch (const toric::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const toric::ToricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
