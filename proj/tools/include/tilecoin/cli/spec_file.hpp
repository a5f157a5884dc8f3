#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilecoin/geometry.hpp"

namespace tilecoin::cli {

struct Bounds {
  std::optional<int> L;
  std::optional<int> window;
  std::optional<int> k;
};

/// A parsed substitution spec.
///
///   letters a b          (optional; defaults to rule heads in order)
///   rule a = a b         (single-character letters may be written "ab")
///   rule b = a
///   tilemap a -> 2       (1-based index into the rule word; default leftmost)
///   bound L 12           (also: bound window N, bound k N)
///   # comment
struct SpecFile {
  std::string name;
  std::string text;
  std::vector<std::string> letters;
  std::vector<Word> rules;
  std::optional<TileMap> tilemap;
  Bounds bounds;

  Substitution substitution() const;
  TileMap tile_map() const { return tilemap ? *tilemap : TileMap::leftmost(static_cast<int>(letters.size())); }
  std::optional<Letter> letter(std::string_view token) const;
  std::string token(Letter a) const { return letters[static_cast<std::size_t>(a)]; }
  std::string word_string(const Word& w) const;
  /// Inverse of word_string; throws Error(ParseError) on unknown letters.
  Word parse_word(std::string_view text) const;
};

/// Throws Error(ParseError) with the offending line number.
SpecFile parse_spec(std::string_view text, std::string name = "");

}  // namespace tilecoin::cli
