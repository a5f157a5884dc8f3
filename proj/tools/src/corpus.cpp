#include "tilecoin/cli/corpus.hpp"

#include <algorithm>

namespace tilecoin::cli {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"thue-morse", "Thue-Morse 0 -> 01, 1 -> 10",
       "letters 0 1\n"
       "rule 0 = 0 1\n"
       "rule 1 = 1 0\n"},
      {"fibonacci", "Fibonacci a -> ab, b -> a",
       "letters a b\n"
       "rule a = a b\n"
       "rule b = a\n"},
      {"aba-left", "a -> aba, b -> bab with left endpoints",
       "letters a b\n"
       "rule a = a b a\n"
       "rule b = b a b\n"},
      {"aba-gamma", "a -> aba, b -> bab with control points (1/3, 0)",
       "letters a b\n"
       "rule a = a b a\n"
       "rule b = b a b\n"
       "tilemap a -> 2\n"
       "tilemap b -> 1\n"},
      {"fib2", "two Fibonacci copies exchanged by capitalization",
       "letters a b A B\n"
       "rule a = a B\n"
       "rule b = a\n"
       "rule A = A b\n"
       "rule B = A\n"},
      {"rauzy", "Tribonacci a -> ab, b -> ac, c -> a",
       "letters a b c\n"
       "rule a = a b\n"
       "rule b = a c\n"
       "rule c = a\n"},
      {"rauzy2-left", "two Tribonacci copies exchanged by capitalization, left endpoints",
       "letters a b c A B C\n"
       "rule a = a B\n"
       "rule b = a C\n"
       "rule c = a\n"
       "rule A = A b\n"
       "rule B = A c\n"
       "rule C = A\n"},
      {"rauzy2-gamma", "two Tribonacci copies with an admissible tile map",
       "letters a b c A B C\n"
       "rule a = a B\n"
       "rule b = a C\n"
       "rule c = a\n"
       "rule A = A b\n"
       "rule B = A c\n"
       "rule C = A\n"
       "# a -> B, b -> C, c -> a, A -> A, B -> A, C -> A\n"
       "# The last entry is sometimes written as a second c -> A, which would\n"
       "# leave C unmapped; C -> A is the reading that makes the map total.\n"
       "tilemap a -> 2\n"
       "tilemap b -> 2\n"
       "tilemap c -> 1\n"
       "tilemap A -> 1\n"
       "tilemap B -> 1\n"
       "tilemap C -> 1\n"},
  };
  return entries;
}

SpecFile corpus_spec(const std::string& id) {
  const auto& all = corpus();
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.id == id; });
  if (it == all.end()) throw Error(ErrorCode::not_found, "no corpus entry '" + id + "'");
  return parse_spec(it->text, it->id);
}

}  // namespace tilecoin::cli
