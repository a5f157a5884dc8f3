#pragma once

#include <string>
#include <vector>

#include "tilecoin/geometry.hpp"

namespace fixtures {

using tilecoin::Substitution;
using tilecoin::TileMap;

inline Substitution thue_morse() { return Substitution({{0, 1}, {1, 0}}, "thue-morse"); }
inline Substitution fibonacci() { return Substitution({{0, 1}, {0}}, "fibonacci"); }
inline Substitution aba() { return Substitution({{0, 1, 0}, {1, 0, 1}}, "aba"); }
// a b A B
inline Substitution fib2() { return Substitution({{0, 3}, {0}, {2, 1}, {2}}, "fib2"); }
inline Substitution rauzy() { return Substitution({{0, 1}, {0, 2}, {0}}, "rauzy"); }
// a b c A B C
inline Substitution rauzy2() { return Substitution({{0, 4}, {0, 5}, {0}, {3, 1}, {3, 2}, {3}}, "rauzy2"); }

// aba: the b of sigma(a), the leftmost tile of sigma(b).
inline TileMap aba_gamma() { return TileMap{{1, 0}}; }
// a -> B, b -> C, c -> a, A -> A, B -> A, C -> A.
inline TileMap rauzy2_gamma() { return TileMap{{1, 1, 0, 0, 0, 0}}; }

struct Entry {
  Substitution sigma;
  bool irreducible;
};

inline std::vector<Entry> all() {
  return {{thue_morse(), false}, {fibonacci(), true}, {aba(), false},
          {fib2(), false},       {rauzy(), true},     {rauzy2(), false}};
}

}  // namespace fixtures
