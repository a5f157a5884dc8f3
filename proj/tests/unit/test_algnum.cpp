#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tilecoin/algnum.hpp"

using namespace tilecoin;

namespace {

std::vector<long double> as_ld(const IntPoly& p) {
  std::vector<long double> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<long double>(c.get_d()));
  return out;
}

IntPoly random_poly(std::mt19937& rng, int degree, int range) {
  std::vector<BigInt> c;
  for (int i = 0; i < degree; ++i) c.push_back(static_cast<long>(rng() % (2 * range + 1)) - range);
  c.push_back(1);
  return IntPoly(c);
}

oracle::Matrix to_oracle(const IntMatrix& s) {
  oracle::Matrix m(static_cast<std::size_t>(s.rows()), std::vector<long long>(static_cast<std::size_t>(s.cols())));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) m[i][j] = s(i, j);
  return m;
}

}  // namespace

TEST(IntPoly, Arithmetic) {
  const IntPoly a{-1, -1, 1};  // x^2 - x - 1
  const IntPoly b{1, 1};
  EXPECT_EQ(a * b, (IntPoly{-1, -2, 0, 1}));
  EXPECT_EQ(a + b, (IntPoly{0, 0, 1}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a.to_string(), "x^2 - x - 1");
  EXPECT_EQ(a.reciprocal(), (IntPoly{1, -1, -1}));
  EXPECT_EQ(a.eval(BigInt(2)), 1);
  const auto [q, r] = divmod_monic(IntPoly{-1, -2, 0, 1}, a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.is_zero());
}

TEST(QPoly, ExtendedGcdIdentity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const QPoly a(random_poly(rng, 1 + static_cast<int>(rng() % 4), 5));
    const QPoly b(random_poly(rng, 1 + static_cast<int>(rng() % 4), 5));
    const auto eg = extended_gcd(a, b);
    EXPECT_EQ(eg.s * a + eg.t * b, eg.g);
    EXPECT_TRUE(divmod(a, eg.g).second.is_zero());
    EXPECT_TRUE(divmod(b, eg.g).second.is_zero());
  }
}

TEST(Sturm, CountsMatchNumericRoots) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPoly p = random_poly(rng, 2 + static_cast<int>(rng() % 4), 6);
    const QPoly sq = divmod(QPoly(p), gcd(QPoly(p), QPoly(p).derivative())).first;
    const auto chain = sturm_chain(sq);
    const int got = sturm_count(chain, Rational(-100), Rational(100));
    // Distinct real roots from the numeric oracle (merging near-equal values).
    std::vector<long double> reals;
    for (const auto& z : oracle::roots(as_ld(p)))
      if (std::abs(z.imag()) < 1e-6L) reals.push_back(z.real());
    std::sort(reals.begin(), reals.end());
    int distinct = 0;
    for (std::size_t i = 0; i < reals.size(); ++i)
      if (i == 0 || reals[i] - reals[i - 1] > 1e-5L) ++distinct;
    EXPECT_EQ(got, distinct) << p.to_string();
  }
}

TEST(CharPoly, MatchesDeterminantOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    IntMatrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, j) = static_cast<long>(rng() % 7) - 2;
    const IntPoly p = char_poly(s);
    ASSERT_EQ(p.degree(), n);
    EXPECT_TRUE(p.is_monic());
    for (long t = -3; t <= 3; ++t) EXPECT_EQ(p.eval(BigInt(t)), oracle::char_poly_at(to_oracle(s), t));
  }
}

TEST(CharPoly, CorpusValues) {
  EXPECT_EQ(char_poly(substitution_matrix(fixtures::fibonacci())), (IntPoly{-1, -1, 1}));
  EXPECT_EQ(char_poly(substitution_matrix(fixtures::thue_morse())), (IntPoly{0, -2, 1}));
  EXPECT_EQ(char_poly(substitution_matrix(fixtures::rauzy())), (IntPoly{-1, -1, -1, 1}));
  // (x^2 - x - 1)(x^2 - x + 1)
  EXPECT_EQ(char_poly(substitution_matrix(fixtures::fib2())), (IntPoly{-1, -1, 1} * IntPoly{1, -1, 1}));
}

TEST(Factor, RecoversKnownProducts) {
  const std::vector<IntPoly> irreducibles = {
      {-1, -1, 1}, {1, -1, 1}, {-1, -1, -1, 1}, {1, 1}, {-2, 1}, {1, 0, 1}, {-1, -1, 0, 1}, {1, 1, 1, 1, 1}, {-3, 0, 1},
      {-1, -1, 0, 0, 0, 1}};
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly p{1};
    std::map<std::vector<BigInt>, int> expect;
    int degree = 0;
    for (int k = 0; k < 3; ++k) {
      const auto& f = irreducibles[rng() % irreducibles.size()];
      if (degree + f.degree() > 12) break;
      degree += f.degree();
      p = p * f;
      ++expect[f.coeffs()];
    }
    std::map<std::vector<BigInt>, int> got;
    for (const auto& f : factor(p)) got[f.poly.coeffs()] += f.multiplicity;
    EXPECT_EQ(got, expect) << p.to_string();
  }
}

TEST(Factor, CorpusCharacteristicPolynomials) {
  const auto f = factor(char_poly(substitution_matrix(fixtures::fib2())));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].poly, (IntPoly{-1, -1, 1}));
  EXPECT_EQ(f[1].poly, (IntPoly{1, -1, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{-1, -1, -1, 1}));
  EXPECT_FALSE(is_irreducible(IntPoly{0, -2, 1}));
  EXPECT_FALSE(is_irreducible(char_poly(substitution_matrix(fixtures::rauzy2()))));
}

TEST(Factor, DegreeCap) {
  IntPoly p = IntPoly::monomial(1, 14) - IntPoly{1};
  try {
    factor(p, 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degree_cap_exceeded);
  }
}

TEST(IrreducibleMod, Rabin) {
  EXPECT_TRUE(is_irreducible_mod(IntPoly{1, 0, 1}, 3));
  EXPECT_FALSE(is_irreducible_mod(IntPoly{1, 0, 1}, 5));
  EXPECT_TRUE(is_irreducible_mod(IntPoly{1, 1, 0, 1}, 2));
}

class FieldTest : public ::testing::Test {
 protected:
  std::shared_ptr<const NumberField> tri = perron_factor(IntPoly{-1, -1, -1, 1});
  long double beta = oracle::largest_real_root({-1, -1, -1, 1});

  FieldElem random_elem(std::mt19937& rng) const {
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5));
    for (auto& q : c) q.canonicalize();
    return tri->from_coords(c);
  }
};

TEST_F(FieldTest, RingAxioms) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), tri->one());
  }
}

TEST_F(FieldTest, BetaSatisfiesMinpoly) {
  const FieldElem b = tri->beta();
  EXPECT_TRUE((b.pow(3) - b.pow(2) - b - tri->one()).is_zero());
}

TEST_F(FieldTest, SignMatchesFloatingPoint) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldElem a = random_elem(rng);
    const long double v = oracle::evaluate(a.coords(), beta);
    if (std::abs(v) < 1e-9L) continue;
    EXPECT_EQ(static_cast<int>(a.sign()), v > 0 ? 1 : -1) << a.to_string();
  }
}

TEST_F(FieldTest, SignOfTinyElement) {
  // beta^-30 is positive but far below double precision of its coordinates.
  const FieldElem tiny = tri->beta().inverse().pow(30);
  EXPECT_EQ(tiny.sign(), Sign::positive);
  EXPECT_EQ((-tiny).sign(), Sign::negative);
  EXPECT_EQ(tri->compare(tri->one() + tiny, tri->one()), 1);
}

TEST_F(FieldTest, FixedBoundsEncloseValue) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldElem a = random_elem(rng);
    const FixedBounds fb = tri->fixed_bounds(a);
    ASSERT_TRUE(fb.valid);
    const long double v = oracle::evaluate(a.coords(), beta) * 4294967296.0L;
    EXPECT_LE(static_cast<long double>(fb.lo), v + 1);
    EXPECT_GE(static_cast<long double>(fb.hi), v - 1);
  }
}

TEST(PerronFactor, PicksDominantFactor) {
  EXPECT_EQ(perron_factor(char_poly(substitution_matrix(fixtures::fib2())))->minpoly(), (IntPoly{-1, -1, 1}));
  EXPECT_EQ(perron_factor(char_poly(substitution_matrix(fixtures::thue_morse())))->minpoly(), (IntPoly{-2, 1}));
  EXPECT_EQ(perron_factor(char_poly(substitution_matrix(fixtures::aba())))->minpoly(), (IntPoly{-3, 1}));
  EXPECT_EQ(perron_factor(char_poly(substitution_matrix(fixtures::rauzy2())))->minpoly(), (IntPoly{-1, -1, -1, 1}));
}

TEST(PerronFactor, IntervalContainsNumericRoot) {
  std::mt19937 rng(29);
  for (const auto& e : fixtures::all()) {
    const IntPoly p = char_poly(substitution_matrix(e.sigma));
    const auto f = perron_factor(p);
    const long double root = oracle::largest_real_root(as_ld(p));
    const RatInterval iv = f->beta_interval();
    EXPECT_LE(iv.lo.get_d() - 1e-12, static_cast<double>(root));
    EXPECT_GE(iv.hi.get_d() + 1e-12, static_cast<double>(root));
  }
}

TEST(UnitDisk, CountMatchesNumericRoots) {
  std::mt19937 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const IntPoly p = random_poly(rng, 2 + static_cast<int>(rng() % 4), 4);
    const auto got = count_roots_in_unit_disk(p);
    int inside = 0;
    bool borderline = false;
    for (const auto& z : oracle::roots(as_ld(p))) {
      const long double r = std::abs(z);
      if (std::abs(r - 1) < 1e-6L) borderline = true;
      if (r < 1) ++inside;
    }
    if (borderline) {
      EXPECT_FALSE(got.has_value()) << p.to_string();
      continue;
    }
    if (!got) continue;  // singular Schur-Cohn matrix without a root on the circle
    EXPECT_EQ(*got, inside) << p.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(Pisot, KnownNumbers) {
  EXPECT_TRUE(is_pisot(*perron_factor(IntPoly{-1, -1, 1})));
  EXPECT_TRUE(is_pisot(*perron_factor(IntPoly{-1, -1, -1, 1})));
  EXPECT_TRUE(is_pisot(*perron_factor(IntPoly{-1, -1, 0, 1})));  // plastic number
  EXPECT_TRUE(is_pisot(*perron_factor(IntPoly{-2, 1})));
  EXPECT_TRUE(is_pisot(*perron_factor(IntPoly{1, -3, 1})));
  EXPECT_FALSE(is_pisot(*perron_factor(IntPoly{-3, 0, 1})));          // sqrt 3
  EXPECT_FALSE(is_pisot(*perron_factor(IntPoly{-4, 0, 0, 1})));       // cube root of 4
  EXPECT_FALSE(is_pisot(*perron_factor(IntPoly{1, -1, -1, -1, 1})));  // Salem number
}

TEST(Rational, StringRoundTrip) {
  for (const char* s : {"0", "-3", "7/4", "-22/7"}) EXPECT_EQ(rational_to_string(rational_from_string(s)), s);
  EXPECT_EQ(rational_to_string(rational_from_string("6/4")), "3/2");
  EXPECT_THROW(rational_from_string("1/x"), Error);
}
