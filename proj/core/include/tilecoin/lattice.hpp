#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilecoin/geometry.hpp"
#include "tilecoin/verdict.hpp"

namespace tilecoin {

inline constexpr int kDefaultKmax = 16;

/// Finitely generated subgroup of Q^n, stored as (1/denom) * B with B an
/// integer matrix in row Hermite normal form (positive pivots, entries above
/// each pivot reduced into [0, pivot)). denom is minimal, so the
/// representation is canonical.
class ZModule {
 public:
  explicit ZModule(int dim = 0) : dim_(dim) {}

  static ZModule span(const std::vector<std::vector<Rational>>& generators, int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const BigInt& denom() const { return denom_; }
  const std::vector<std::vector<BigInt>>& basis() const { return basis_; }
  std::vector<std::vector<Rational>> rational_basis() const;

  /// Integer coefficients of v in the basis, if v lies in the module.
  std::optional<std::vector<BigInt>> coordinates(const std::vector<Rational>& v) const;
  bool contains(const std::vector<Rational>& v) const { return coordinates(v).has_value(); }
  bool contains(const FieldElem& v) const { return contains(v.coords()); }

  bool operator==(const ZModule&) const = default;
  std::string to_string() const;

 private:
  int dim_;
  BigInt denom_ = 1;
  std::vector<std::vector<BigInt>> basis_;
};

ZModule module_from(const std::vector<FieldElem>& elems, int dim);

/// Hermite normal form of the row lattice of an integer matrix (zero rows dropped).
std::vector<std::vector<BigInt>> hermite_normal_form(std::vector<std::vector<BigInt>> rows, std::size_t cols);

/// Elementary divisors of an integer matrix (nonzero diagonal of its Smith form).
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a);

struct AbelianGroup {
  std::vector<BigInt> invariant_factors;  // each >= 2 and dividing the next
  int free_rank = 0;

  bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
  bool infinite() const { return free_rank > 0; }
  /// Order of a finite group; 0 when infinite.
  BigInt order() const;
  std::string to_string() const;  // e.g. "Z/2Z", "Z/2Z x Z", "trivial"
  bool operator==(const AbelianGroup&) const = default;
};

/// sup / sub; throws NotASubmodule unless sub is contained in sup.
AbelianGroup quotient(const ZModule& sup, const ZModule& sub);

inline const std::vector<int> kDefaultHeightSchedule = {16, 32, 64, 128};

struct HeightGroup {
  AbelianGroup group;
  bool stable = false;
  int window = 0;  // tile-lengths of the window the result was read from
  ZModule sup;     // <Lambda - Lambda>
  ZModule sub;     // <Lambda_i - Lambda_i | i>
};

/// <Lambda - Lambda> / <Lambda_i - Lambda_i | i> read from the first window
/// whose two lattices agree with those of the next window in the schedule.
HeightGroup height_group(const SuspensionSystem& sys, const RefPoints& c,
                         const std::vector<int>& schedule = kDefaultHeightSchedule,
                         std::size_t length_cap = kDefaultLengthCap);

/// Smallest k <= kmax with beta^k v in L0.
std::optional<int> eventual_membership(const FieldElem& v, const ZModule& l0, const FieldElem& beta,
                                       int kmax = kDefaultKmax);

struct GroupMembership {
  Status status = Status::unknown;  // HOLDS or UNKNOWN, never FAILS
  int k = 0;                        // max witness exponent over the generators
  Letter color = 0;                 // color whose Lambda_i - Lambda_i was used
  int kmax = 0;
  int window = 0;
};

/// Every generator of <Lambda - Lambda> is an eventual return vector. Each
/// color is tried as the base; the color with the smallest k is reported.
GroupMembership lambda_diff_in_G(const SuspensionSystem& sys, const RefPoints& c, int kmax = kDefaultKmax,
                                 int window_tile_lengths = 64, std::size_t length_cap = kDefaultLengthCap);

/// Generators x - x0 of the Z-span of Lambda - Lambda for each color and for
/// the union, from a window.
struct DifferenceGenerators {
  std::vector<std::vector<FieldElem>> by_color;
  std::vector<FieldElem> all;
};
DifferenceGenerators difference_generators(const PointSets& ps);

}  // namespace tilecoin
