#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilecoin/geometry.hpp"
#include "tilecoin/verdict.hpp"

namespace tilecoin {

inline constexpr std::size_t kDefaultNodeCap = 100'000;
inline constexpr std::size_t kDefaultPairCap = 50'000;
inline constexpr int kDefaultIterCap = 200;
inline constexpr std::size_t kDefaultReturnWords = 10;

/// Translation class of an overlap: the i-support sits at [x, x + l_i), the
/// j-support at [0, l_j).
struct OverlapClass {
  Letter i = 0;
  Letter j = 0;
  FieldElem x;

  bool is_coincidence() const { return i == j && x.is_zero(); }
  bool operator==(const OverlapClass& o) const { return i == o.i && j == o.j && x == o.x; }
};

struct OverlapClassHash {
  std::size_t operator()(const OverlapClass& o) const;
};

/// Deterministic order: (i, j, canonical order of x).
bool overlap_less(const OverlapClass& a, const OverlapClass& b);

/// -l_i < x < l_j, exactly.
bool satisfies_overlap_bound(const SuspensionSystem& sys, const OverlapClass& o);

/// Classes of all tile pairs (u - y, v) with overlapping interiors, for every
/// nonzero y in some Lambda_i - Lambda_i on the window. Throws EmptyWindow
/// when the window yields no nonzero return vector.
std::vector<OverlapClass> initial_overlaps(const SuspensionSystem& sys, const RefPoints& c, const Window& window,
                                           std::size_t length_cap = kDefaultLengthCap);

/// One inflation step: subtile pairs of the inflated overlap that still overlap.
std::vector<OverlapClass> inflate_overlap(const SuspensionSystem& sys, const OverlapClass& o);

struct OverlapGraph {
  std::vector<OverlapClass> nodes;
  std::vector<std::vector<std::size_t>> successors;
};

struct OverlapResult {
  Status status = Status::unknown;
  std::size_t initial_count = 0;
  /// HOLDS: every overlap contains a coincidence after this many inflations.
  int max_steps = 0;
  /// FAILS: nonempty set closed under inflation with no coincidence.
  std::vector<OverlapClass> certificate;
  std::size_t node_cap = 0;
  Window window;
  int window_tile_lengths = 0;
  OverlapGraph graph;
};

OverlapResult overlap_coincidence(const SuspensionSystem& sys, const RefPoints& c, int window_tile_lengths = 64,
                                  std::size_t node_cap = kDefaultNodeCap,
                                  std::size_t length_cap = kDefaultLengthCap);

/// One inflation pass: the set is closed and contains no coincidence.
bool verify_closed_set(const SuspensionSystem& sys, const std::vector<OverlapClass>& set);

struct BalancedPair {
  Word u;
  Word v;

  bool is_coincidence() const { return u.size() == 1 && u == v; }
  bool operator==(const BalancedPair&) const = default;
};

struct BalancedPairHash {
  std::size_t operator()(const BalancedPair& p) const;
};

/// Splits a balanced pair at every proper prefix pair with equal
/// abelianizations.
std::vector<BalancedPair> split_irreducible(const Word& u, const Word& v, int m);

struct BalancedPairResult {
  Status status = Status::unknown;
  bool pisot = false;  // verdicts on non-Pisot inputs are advisory
  std::vector<BalancedPair> seeds;
  std::vector<Word> return_words;
  std::size_t pair_count = 0;
  int iterations = 0;
  std::vector<BalancedPair> certificate;  // FAILS: closed coincidence-free pairs
  std::size_t pair_cap = 0;
  int iter_cap = 0;
};

/// Seeds come from the fixed point u = sigma^inf(a): for each of the first
/// `return_words` distinct return words r of a, occurring at position p, the
/// aligned pair (u[p..], u[p + |r|..]) split into irreducible balanced pairs.
BalancedPairResult balanced_pairs(const Substitution& sigma, std::size_t pair_cap = kDefaultPairCap,
                                  int iter_cap = kDefaultIterCap, std::size_t return_words = kDefaultReturnWords,
                                  std::size_t length_cap = kDefaultLengthCap);

bool verify_closed_pairs(const Substitution& sigma, const std::vector<BalancedPair>& set);

enum class Spectrum { pure_discrete, not_pure_discrete, unknown };

std::string_view to_string(Spectrum s);

struct SpectralVerdict {
  Spectrum status = Spectrum::unknown;
  /// Set only when both halves decided.
  std::optional<bool> agreement;
  /// DisagreementDetected diagnostic, empty otherwise.
  std::string diagnostic;
};

SpectralVerdict spectral_verdict(Status overlap, Status balanced);

}  // namespace tilecoin
