#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "tilecoin/cli/spec_file.hpp"
#include "tilecoin/coincidence.hpp"
#include "tilecoin/lattice.hpp"
#include "tilecoin/spectrum.hpp"

namespace tilecoin::cli {

using Json = nlohmann::ordered_json;

/// Command-line overrides; unset values fall back to the spec file's bounds, then
/// to the library defaults.
struct AnalysisOptions {
  std::optional<int> Lmax;
  std::optional<int> window;
  std::optional<int> kmax;
  std::optional<std::size_t> node_cap;
  std::optional<std::size_t> pair_cap;
  int iter_cap = kDefaultIterCap;
  std::size_t return_words = kDefaultReturnWords;
  bool verify = false;
  bool timing = false;
};

/// Runs every check on a parsed spec file and returns the report. Failures of single
/// checks are embedded in the report; they never abort the others.
Json run_analysis(const SpecFile& spec, const AnalysisOptions& opts = {});

/// True when every check in the report reached a decided verdict.
bool all_decided(const Json& report);

/// Replays every witness and certificate in a report against a fresh
/// computation from its echoed input.
Json verify_report(const nlohmann::json& report);

/// One line per tile: "<token> [c0,c1,...]", exact coordinates.
std::string patch_dump(const SpecFile& spec, int n, const std::optional<std::string>& letter);

// JSON encoding of exact values, shared with the tests.
Json to_json(const FieldElem& x);
FieldElem field_elem_from_json(const NumberField& field, const nlohmann::json& j);
Json to_json(const ZModule& m);

}  // namespace tilecoin::cli
