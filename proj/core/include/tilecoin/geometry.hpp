#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tilecoin/algnum.hpp"
#include "tilecoin/symbolic.hpp"

namespace tilecoin {

/// Closed interval of the real line with rational endpoints.
struct Window {
  Rational lo;
  Rational hi;

  static Window centered(const Rational& half_width) { return {-half_width, half_width}; }
  Rational width() const { return hi - lo; }
};

/// The suspension tiling of R by a primitive substitution: prototile
/// T_j = [0, l_j) with the left Perron-Frobenius eigenvector as lengths.
class SuspensionSystem {
 public:
  static SuspensionSystem build(const Substitution& sigma, int degree_cap = kDefaultDegreeCap);

  const Substitution& substitution() const { return sigma_; }
  int size() const { return sigma_.size(); }
  const IntMatrix& matrix() const { return matrix_; }
  const IntPoly& characteristic() const { return char_poly_; }
  const NumberField& field() const { return *field_; }
  std::shared_ptr<const NumberField> shared_field() const { return field_; }
  const FieldElem& beta() const { return beta_; }
  const std::vector<FieldElem>& lengths() const { return lengths_; }
  const FieldElem& length(Letter a) const { return lengths_[static_cast<std::size_t>(a)]; }
  /// Left offset of the t-th subtile of Omega(T_j).
  const FieldElem& offset(Letter j, std::size_t t) const { return offsets_[static_cast<std::size_t>(j)][t]; }
  const FixedPointSeed& seed() const { return seed_; }
  /// Rational upper bound on max_i l_i (denominator 16).
  const Rational& max_length_bound() const { return max_length_bound_; }

 private:
  SuspensionSystem() = default;

  Substitution sigma_{{{0, 1}, {0}}};
  IntMatrix matrix_;
  IntPoly char_poly_;
  std::shared_ptr<const NumberField> field_;
  FieldElem beta_;
  std::vector<FieldElem> lengths_;
  std::vector<std::vector<FieldElem>> offsets_;
  FixedPointSeed seed_;
  Rational max_length_bound_;
};

/// Left beta-eigenvector of S over Q(beta), normalized so the last letter has
/// length 1; every entry certified positive.
std::vector<FieldElem> prototile_lengths(const Substitution& sigma, const NumberField& field);

/// Solves A x = b over Q(beta); throws EigenvectorDefect if A is singular.
std::vector<FieldElem> solve_linear(std::vector<std::vector<FieldElem>> a, std::vector<FieldElem> b);

/// For each letter j, the 0-based index into sigma(j) picked by the tile map.
struct TileMap {
  std::vector<std::size_t> choice;

  static TileMap leftmost(int m) { return {std::vector<std::size_t>(static_cast<std::size_t>(m), 0)}; }
};

using RefPoints = std::vector<FieldElem>;

RefPoints left_endpoints(const SuspensionSystem& sys);

/// Control points of the tile map: beta c_j = o_j + c_{g(j)}.
RefPoints control_points(const SuspensionSystem& sys, const TileMap& gamma);

/// The prototile supports shifted by -c_i share an interior point.
bool is_admissible(const SuspensionSystem& sys, const RefPoints& c);

struct Tile {
  FieldElem position;  // left endpoint
  Letter color;
};

/// A contiguous run of tiles sorted by position.
struct Patch {
  std::vector<Tile> tiles;
  FieldElem support_lo;
  FieldElem support_hi;

  Word word() const;
};

struct PatchSeed {
  Letter left = 0;
  Letter right = 0;
  bool two_sided = false;

  static PatchSeed one_sided(Letter a) { return {a, a, false}; }
  static PatchSeed pair(Letter left, Letter right) { return {left, right, true}; }
};

/// Omega^n(seed). One-sided patches start at 0; two-sided patches put the
/// left|right junction at 0.
Patch generate_patch(const SuspensionSystem& sys, const PatchSeed& seed, int n, WordIterator& words);
Patch generate_patch(const SuspensionSystem& sys, const PatchSeed& seed, int n,
                     std::size_t length_cap = kDefaultLengthCap);

/// Omega^(k n) of the two-sided fixed-point seed (k = seed period).
Patch fixed_point_patch(const SuspensionSystem& sys, int n, WordIterator& words);

/// Window spanning `tile_lengths` multiples of max_length_bound, centered at 0.
Window default_window(const SuspensionSystem& sys, int tile_lengths);

/// True when every point p + c_i of the fixed-point tiling that lies in the
/// window comes from a tile of the patch.
bool covers(const SuspensionSystem& sys, const Patch& patch, const RefPoints& c, const Window& window);

/// Smallest fixed-point patch covering the window for reference points c.
Patch covering_patch(const SuspensionSystem& sys, const RefPoints& c, const Window& window, WordIterator& words);

struct PointSets {
  std::vector<std::vector<FieldElem>> by_color;  // sorted by real value
  Window window;

  std::size_t total() const;
  std::vector<FieldElem> all() const;  // union, sorted by real value
};

/// Lambda_i = {p + c_i : (p, i) in patch} restricted to the window.
PointSets reference_point_sets(const SuspensionSystem& sys, const Patch& patch, const RefPoints& c,
                               const Window& window);

struct ReturnVectors {
  std::vector<std::vector<FieldElem>> by_color;  // Delta_i = Lambda_i - Lambda_i
  std::vector<FieldElem> all;                    // Delta = Lambda - Lambda
};

/// Deduplicated difference sets, each in canonical coordinate order.
ReturnVectors return_vectors(const PointSets& ps);

}  // namespace tilecoin
