#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilecoin/error.hpp"

namespace tilecoin {

using Letter = int;
using Word = std::vector<Letter>;
using AbVector = std::vector<std::int64_t>;

inline constexpr std::size_t kDefaultLengthCap = 10'000'000;

/// Dense integer matrix, row-major storage.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  AbVector operator*(const AbVector& v) const;
  bool operator==(const IntMatrix&) const = default;

  std::int64_t column_sum(int c) const;
  bool all_positive() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// A substitution over the letters 0..m-1. Every image is a nonempty word.
class Substitution {
 public:
  Substitution(std::vector<Word> rules, std::string name = {});

  int size() const { return static_cast<int>(rules_.size()); }
  const Word& image(Letter a) const { return rules_.at(static_cast<std::size_t>(a)); }
  const std::vector<Word>& rules() const { return rules_; }
  const std::string& name() const { return name_; }

  Word apply(const Word& w) const;
  /// Mirror image: every rule word reversed. Used for suffix variants.
  Substitution reversed() const;

  bool operator==(const Substitution& other) const { return rules_ == other.rules_; }

 private:
  std::vector<Word> rules_;
  std::string name_;
};

/// Letter counts of w; throws InvalidWord for letters outside 0..m-1.
AbVector abelianization(const Word& w, int m);

/// S(i, j) = occurrences of letter i in the image of j.
IntMatrix substitution_matrix(const Substitution& sigma);

/// Wielandt bound: a primitive m x m matrix has S^k > 0 for some k <= m^2 - 2m + 2.
bool is_primitive(const IntMatrix& s);

/// Memoized iterates sigma^n(a). Not thread-safe; one per analysis session.
class WordIterator {
 public:
  explicit WordIterator(const Substitution& sigma, std::size_t length_cap = kDefaultLengthCap);

  const Word& power(Letter a, int n);
  /// |sigma^n(a)| without materializing the word (saturates at SIZE_MAX).
  std::size_t length(Letter a, int n) const;
  std::size_t length_cap() const { return cap_; }
  const Substitution& substitution() const { return sigma_; }

 private:
  Substitution sigma_;
  std::size_t cap_;
  IntMatrix matrix_;
  std::vector<std::vector<Word>> cache_;  // cache_[a][n]
};

struct FixedPointSeed {
  int period = 0;
  Letter left = 0;
  Letter right = 0;

  bool operator==(const FixedPointSeed&) const = default;
};

/// Two-letter words occurring in some sigma^n(c).
std::vector<std::pair<Letter, Letter>> legal_pairs(const Substitution& sigma);

/// Smallest period k and lexicographically least legal (left, right) with
/// sigma^k(right) starting with right and sigma^k(left) ending with left.
FixedPointSeed fixed_point_seed(const Substitution& sigma);

/// All fixed-point-free letter involutions t with sigma(t(x)) = t(sigma(x)).
/// Brute force over perfect matchings; returns nothing for m > 8 or odd m.
std::vector<std::vector<Letter>> commuting_involutions(const Substitution& sigma);

}  // namespace tilecoin
