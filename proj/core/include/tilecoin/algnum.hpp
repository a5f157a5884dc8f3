#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tilecoin/error.hpp"
#include "tilecoin/poly.hpp"
#include "tilecoin/symbolic.hpp"

namespace tilecoin {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline constexpr int kDefaultDegreeCap = 12;

/// Certified fixed-point enclosure: lo <= value * 2^kFixedShift <= hi.
/// Invalid when the value is too large to represent; callers then fall back
/// to exact comparison.
struct FixedBounds {
  static constexpr int kFixedShift = 32;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool valid = false;

  FixedBounds operator+(const FixedBounds& o) const { return {lo + o.lo, hi + o.hi, valid && o.valid}; }
  FixedBounds operator-(const FixedBounds& o) const { return {lo - o.hi, hi - o.lo, valid && o.valid}; }
  /// -1 / 1 when the sign is certain, 0 when undecided.
  int certain_sign() const {
    if (!valid) return 0;
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }
};

struct RatInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

/// Characteristic polynomial det(xI - S), monic with integer coefficients.
IntPoly char_poly(const IntMatrix& s);
IntPoly char_poly(const std::vector<std::vector<BigInt>>& a);

struct PolyFactor {
  IntPoly poly;  // monic irreducible
  int multiplicity = 1;
};

/// Complete factorization of a monic integer polynomial into monic
/// irreducibles, ordered by (degree, coefficients). Throws
/// DegreeCapExceeded above degree_cap and FactorizationFailed when the
/// bounded factor search exceeds its budget.
std::vector<PolyFactor> factor(const IntPoly& p, int degree_cap = kDefaultDegreeCap);

bool is_irreducible(const IntPoly& p, int degree_cap = kDefaultDegreeCap);

/// Irreducibility modulo a prime (Rabin's test). p must be monic.
bool is_irreducible_mod(const IntPoly& p, long prime);

class FieldElem;

/// Q(beta) for the real root beta > 1 of an irreducible monic minpoly.
/// The isolating interval of beta only ever narrows; refinement is guarded by
/// a mutex so concurrent readers always see a sound enclosure.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  NumberField(IntPoly minpoly, Rational lo, Rational hi);

  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

  const IntPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }

  RatInterval beta_interval() const;
  void refine_beta(const Rational& max_width) const;

  /// Enclosure of the real value of a with the current beta interval.
  RatInterval enclose(const FieldElem& a) const;
  /// Enclosure no wider than max_width (refines beta as needed).
  RatInterval enclose(const FieldElem& a, const Rational& max_width) const;
  Sign sign(const FieldElem& a) const;
  FixedBounds fixed_bounds(const FieldElem& a) const;
  /// sign(a - b) as -1, 0, 1.
  int compare(const FieldElem& a, const FieldElem& b) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem beta() const;
  FieldElem from_rational(const Rational& q) const;
  FieldElem from_coords(std::vector<Rational> coords) const;

  // Coordinate-level kernels used by FieldElem.
  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  std::vector<Rational> inverse(const std::vector<Rational>& a) const;

 private:
  RatInterval enclose_with(const std::vector<Rational>& coords, const RatInterval& beta) const;

  IntPoly minpoly_;
  // reduction_[k] = coordinates of beta^(n + k), k = 0..n-2
  std::vector<std::vector<BigInt>> reduction_;
  mutable std::mutex mutex_;
  mutable RatInterval beta_;
};

/// Element of Q(beta) in the power basis 1, beta, ..., beta^(n-1).
/// Holds a non-owning pointer to its field: the field must outlive it.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const NumberField* field, std::vector<Rational> coords);

  const NumberField& field() const { return *field_; }
  const NumberField* field_ptr() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;

  FieldElem operator+(const FieldElem& rhs) const;
  FieldElem operator-(const FieldElem& rhs) const;
  FieldElem operator*(const FieldElem& rhs) const;
  FieldElem operator/(const FieldElem& rhs) const;
  FieldElem operator*(const Rational& c) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& rhs);
  FieldElem& operator-=(const FieldElem& rhs);
  FieldElem inverse() const;
  FieldElem pow(unsigned e) const;

  /// Exact equality of coordinate vectors.
  bool operator==(const FieldElem& rhs) const { return coords_ == rhs.coords_; }
  /// Canonical (coordinate-lexicographic) order, not the real order.
  bool canonical_less(const FieldElem& rhs) const;

  Sign sign() const { return field_->sign(*this); }
  std::size_t hash() const;
  std::string to_string() const;

 private:
  const NumberField* field_ = nullptr;
  std::vector<Rational> coords_;
};

struct FieldElemHash {
  std::size_t operator()(const FieldElem& a) const { return a.hash(); }
};

enum class ArithOp { add, sub, mul, div };
FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op);

/// The irreducible factor of p carrying its largest real root (the
/// Perron-Frobenius root for a primitive matrix), with an isolating interval.
std::shared_ptr<const NumberField> perron_factor(const IntPoly& p, int degree_cap = kDefaultDegreeCap);

/// Number of roots strictly inside the unit disk via the inertia of the
/// Schur-Cohn matrix; nullopt when that matrix is singular (p and its
/// reciprocal share a root).
std::optional<int> count_roots_in_unit_disk(const IntPoly& p);

/// Every conjugate other than beta lies strictly inside the unit disk.
bool is_pisot(const NumberField& field);

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace tilecoin
