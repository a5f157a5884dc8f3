#pragma once

#include <string>
#include <vector>

#include "tilecoin/cli/spec_file.hpp"

namespace tilecoin::cli {

struct CorpusEntry {
  std::string id;
  std::string description;
  std::string text;
};

const std::vector<CorpusEntry>& corpus();

/// Parsed corpus entry; throws Error(NotFound) for unknown ids.
SpecFile corpus_spec(const std::string& id);

}  // namespace tilecoin::cli
