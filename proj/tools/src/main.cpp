#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tilecoin/cli/corpus.hpp"
#include "tilecoin/cli/report.hpp"
#include "tilecoin/version.hpp"

namespace {

using namespace tilecoin;
using namespace tilecoin::cli;

SpecFile load_input(const std::string& input) {
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str(), std::filesystem::path(input).stem().string());
  }
  return corpus_spec(input);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::not_found, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincidence and pure discreteness checks for substitution tilings of the line"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string input, output;
  AnalysisOptions opts;
  int Lmax = 0, window = 0, kmax = 0;
  std::size_t node_cap = 0, pair_cap = 0;

  auto* analyze = app.add_subcommand("analyze", "Run every check and print a JSON report");
  analyze->add_option("input", input, "Spec file or corpus id")->required();
  auto* o_L = analyze->add_option("--Lmax", Lmax, "Bound on inflation steps for coincidence searches");
  auto* o_w = analyze->add_option("--window", window, "Point-set window in tile lengths");
  auto* o_k = analyze->add_option("--kmax", kmax, "Bound on the exponent in eventual membership");
  auto* o_n = analyze->add_option("--node-cap", node_cap, "Cap on overlap classes");
  auto* o_p = analyze->add_option("--pair-cap", pair_cap, "Cap on balanced pairs");
  analyze->add_flag("--verify", opts.verify, "Replay every witness and certificate");
  analyze->add_flag("--timing", opts.timing, "Include per-check timings (reports are no longer byte-stable)");
  analyze->add_option("-o,--output", output, "Write the report to a file");

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in examples");
  auto* list = corpus_cmd->add_subcommand("list", "List corpus ids");
  corpus_cmd->require_subcommand(1);

  int n = 1;
  std::string letter;
  auto* patch = app.add_subcommand("patch", "Dump the tiles of Omega^n of a seed");
  patch->add_option("input", input, "Spec file or corpus id")->required();
  patch->add_option("--n", n, "Number of inflation steps")->required()->check(CLI::NonNegativeNumber);
  auto* o_letter = patch->add_option("--letter", letter, "One-sided seed letter (default: fixed-point pair)");

  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Replay the witnesses of a saved report");
  verify->add_option("report", report_path, "Report JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (*o_L) opts.Lmax = Lmax;
      if (*o_w) opts.window = window;
      if (*o_k) opts.kmax = kmax;
      if (*o_n) opts.node_cap = node_cap;
      if (*o_p) opts.pair_cap = pair_cap;
      const Json report = run_analysis(load_input(input), opts);
      write_output(report.dump(2) + "\n", output);
      if (opts.verify && !report["verification"]["ok"].get<bool>()) return 1;
      return all_decided(report) ? 0 : 2;
    }
    if (list->parsed()) {
      for (const auto& e : corpus()) std::cout << e.id << '\t' << e.description << '\n';
      return 0;
    }
    if (patch->parsed()) {
      std::optional<std::string> seed;
      if (*o_letter) seed = letter;
      std::cout << patch_dump(load_input(input), n, seed);
      return 0;
    }
    if (verify->parsed()) {
      std::ifstream in(report_path);
      const auto report = nlohmann::json::parse(in);
      const Json result = verify_report(report);
      std::cout << result.dump(2) << '\n';
      return result["ok"].get<bool>() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
