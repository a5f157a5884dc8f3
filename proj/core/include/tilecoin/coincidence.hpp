#pragma once

#include <optional>
#include <vector>

#include "tilecoin/geometry.hpp"
#include "tilecoin/verdict.hpp"

namespace tilecoin {

inline constexpr int kDefaultLmax = 12;

struct CoincidenceWitness {
  int L = 0;
  Letter color = 0;
  /// Geometric witnesses: the shared tile is T_color - c_color + eta.
  std::optional<FieldElem> eta;
  /// Prefix witnesses: index of the common letter in each iterated word.
  std::size_t pos_i = 0;
  std::size_t pos_j = 0;
  /// Prefix-simultaneous witnesses: common prefix length M.
  std::size_t prefix_length = 0;
  /// Letters the witness covers (a pair, or every letter).
  std::vector<Letter> scope;
};

struct BoundedVerdict {
  Status status = Status::unknown;
  int bound = 0;
  std::optional<CoincidenceWitness> witness;
  /// FAILS certificate: a fixed-point-free letter involution commuting with sigma.
  std::optional<std::vector<Letter>> involution;
};

struct PairVerdict {
  Letter i = 0;
  Letter j = 0;
  BoundedVerdict verdict;
};

/// HOLDS if every pair holds, FAILS if some pair fails, UNKNOWN otherwise.
Status combine(const std::vector<PairVerdict>& pairs);

/// sigma^L(i) = p a s and sigma^L(j) = p' a s' with equal prefix
/// abelianizations, for every unordered pair i <= j. With suffix = true the
/// rule words are reversed first.
std::vector<PairVerdict> prefix_strong(const Substitution& sigma, int Lmax = kDefaultLmax, bool suffix = false,
                                       std::size_t length_cap = kDefaultLengthCap);

/// Omega^L(T_i - c_i) and Omega^L(T_j - c_j) share a tile, tested exactly.
std::vector<PairVerdict> geometric_strong(const SuspensionSystem& sys, const RefPoints& c, int Lmax = kDefaultLmax,
                                          std::size_t length_cap = kDefaultLengthCap);

/// All Omega^L(T_i - c_i) share one tile.
BoundedVerdict simultaneous(const SuspensionSystem& sys, const RefPoints& c, int Lmax = kDefaultLmax,
                            std::size_t length_cap = kDefaultLengthCap);

/// Smallest (L, M), lexicographically, such that the length-M prefixes of all
/// sigma^L(i) have equal abelianization and the same last letter.
BoundedVerdict prefix_simultaneous(const Substitution& sigma, int Lmax = kDefaultLmax,
                                   std::size_t length_cap = kDefaultLengthCap);

/// Replays a geometric witness: beta^L x + eta lies in Lambda_k of
/// Omega^L(T) for every x of the scoped colors inside the window.
bool verify_witness(const SuspensionSystem& sys, const RefPoints& c, const CoincidenceWitness& w,
                    const Window& window, std::size_t length_cap = kDefaultLengthCap);

}  // namespace tilecoin
