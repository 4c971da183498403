// Command-line front end: construct, verify, bound and report on joint
// measurement configurations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jointmeas/catalog.hpp"
#include "jointmeas/io.hpp"
#include "jointmeas/operators.hpp"
#include "jointmeas/steering.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitTightnessGap = 3;
constexpr int kExitUsage = 64;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string report_json(const jointmeas::PovmReport& report) {
  std::string out = "{\"min_eigenvalues\":[";
  for (std::size_t i = 0; i < report.min_eigenvalues.size(); ++i) {
    if (i > 0) out += ',';
    out += jointmeas::format_double_json(report.min_eigenvalues[i]);
  }
  out += "],\"normalization_residual\":" +
         jointmeas::format_double_json(report.normalization_residual);
  out += std::string(",\"normalized\":") + (report.normalized ? "true" : "false");
  out += std::string(",\"positive\":") + (report.positive ? "true" : "false");
  out += "}\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace jointmeas;

  CLI::App app{"Joint measurements for noisy quantum observables"};
  app.require_subcommand(1);

  ToleranceConfig tol;

  auto* cmd_catalog = app.add_subcommand("catalog", "List known config ids");

  std::string config_id, out_path, in_path, format = "json";
  auto* cmd_construct =
      app.add_subcommand("construct", "Build the joint POVM of a config");
  cmd_construct->add_option("--config", config_id, "Config id")->required();
  cmd_construct->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_verify =
      app.add_subcommand("verify", "Validate a POVM file (exit 2 on failure)");
  cmd_verify->add_option("file", in_path, "POVM JSON file")->required();
  cmd_verify->add_option("--psd-tol", tol.psd_tol, "Positivity tolerance");
  cmd_verify->add_option("--eq-tol", tol.eq_tol, "Normalization tolerance");

  auto* cmd_marginals =
      app.add_subcommand("marginals", "Extract the marginals of a joint POVM");
  cmd_marginals->add_option("--config", config_id, "Config id");
  cmd_marginals->add_option("--in", in_path, "POVM JSON file");
  cmd_marginals->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> config_ids;
  auto* cmd_threshold = app.add_subcommand(
      "threshold", "Construction/witness threshold table for config ids");
  cmd_threshold->add_option("--config", config_ids, "Config ids")->required();
  cmd_threshold->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_threshold->add_option("--out", out_path, "Output file (default stdout)");

  auto* cmd_bound = app.add_subcommand(
      "steering-bound", "Steering upper bound on the noise parameter");
  cmd_bound->add_option("--config", config_id, "Config id")->required();

  auto* cmd_tightness = app.add_subcommand(
      "tightness", "Compare construction and witness bounds (exit 3 on gap)");
  cmd_tightness->add_option("--config", config_id, "Config id")->required();
  cmd_tightness->add_option("--gap-tol", tol.eq_tol, "Tightness tolerance");
  cmd_tightness->add_option("--out", out_path, "Output file (default stdout)");

  double lambda = 0.0;
  auto* cmd_specker = app.add_subcommand(
      "specker", "Classify a noise level against the 4-Specker window");
  cmd_specker->add_option("--lambda", lambda, "Noise parameter in [0, 1]")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_catalog->parsed()) {
      for (const std::string& id : catalog_ids()) std::cout << id << '\n';
      return kExitOk;
    }
    if (cmd_construct->parsed()) {
      const ConfigRef config = parse_config_id(config_id);
      emit(povm_to_json(construct_config(config)), out_path);
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      const JointObservable g = povm_from_json(slurp(in_path));
      const PovmReport report = validate_povm(g, tol);
      std::cout << report_json(report);
      return report.ok() ? kExitOk : kExitValidation;
    }
    if (cmd_marginals->parsed()) {
      if (config_id.empty() == in_path.empty()) {
        std::cerr << "marginals: give exactly one of --config or --in\n";
        return kExitUsage;
      }
      const JointObservable g = config_id.empty()
                                    ? povm_from_json(slurp(in_path))
                                    : construct_config(parse_config_id(config_id));
      std::string out = "[";
      for (std::size_t slot = 0; slot < g.num_slots(); ++slot) {
        if (slot > 0) out += ',';
        std::string body = povm_to_json(as_joint(marginal(g, slot)));
        body.pop_back();  // trailing newline
        out += body;
      }
      out += "]\n";
      emit(out, out_path);
      return kExitOk;
    }
    if (cmd_threshold->parsed()) {
      const std::string table = format == "csv"
                                    ? threshold_table_csv(config_ids)
                                    : threshold_table_json(config_ids);
      emit(table, out_path);
      return kExitOk;
    }
    if (cmd_bound->parsed()) {
      const ConfigRef config = parse_config_id(config_id);
      std::cout << format_double_json(witness_bound(config)) << '\n';
      return kExitOk;
    }
    if (cmd_tightness->parsed()) {
      ToleranceConfig report_tol;
      report_tol.eq_tol = tol.eq_tol;
      const WitnessReport report = tightness_report(config_id, report_tol);
      emit(witness_report_to_json(report), out_path);
      return report.tight ? kExitOk : kExitTightnessGap;
    }
    if (cmd_specker->parsed()) {
      std::cout << to_string(specker_classify(lambda)) << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
