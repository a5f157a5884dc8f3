#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace tilecoin {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Integer polynomial, coefficients in ascending degree. The zero polynomial
/// has degree -1 and no stored coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  IntPoly derivative() const;
  /// x^deg * p(1/x).
  IntPoly reciprocal() const;
  BigInt content() const;

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Division by a monic divisor; the quotient and remainder stay integral.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);

/// Polynomial over the rationals.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  explicit QPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  QPoly derivative() const;
  QPoly monic() const;

  QPoly operator+(const QPoly& rhs) const;
  QPoly operator-(const QPoly& rhs) const;
  QPoly operator*(const QPoly& rhs) const;
  QPoly operator*(const Rational& c) const;
  bool operator==(const QPoly&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

struct ExtendedGcd {
  QPoly g;  // monic
  QPoly s;  // s*a + t*b = g
  QPoly t;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

/// Sturm chain of p (p squarefree for exact counts).
std::vector<QPoly> sturm_chain(const QPoly& p);
/// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b);

int sign_of(const Rational& q);
int sign_of(const BigInt& z);

}  // namespace tilecoin
