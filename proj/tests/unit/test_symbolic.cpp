#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tilecoin/symbolic.hpp"

using namespace tilecoin;

TEST(Substitution, RejectsMalformedRules) {
  EXPECT_THROW(Substitution({{0, 1}}), Error);
  EXPECT_THROW(Substitution({{0, 1}, {}}), Error);
  EXPECT_THROW(Substitution({{0, 2}, {0}}), Error);
  try {
    Substitution({{0, 1}, {}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_substitution);
  }
}

TEST(Substitution, ApplyAndReverse) {
  const auto f = fixtures::fibonacci();
  EXPECT_EQ(f.apply({0, 1}), (Word{0, 1, 0}));
  EXPECT_EQ(f.reversed().image(0), (Word{1, 0}));
  EXPECT_EQ(f.reversed().reversed(), f);
}

TEST(Abelianization, CountsLetters) {
  EXPECT_EQ(abelianization({0, 1, 0, 2}, 3), (AbVector{2, 1, 1}));
  EXPECT_THROW(abelianization({0, 3}, 3), Error);
}

TEST(SubstitutionMatrix, ColumnsCountImages) {
  const IntMatrix s = substitution_matrix(fixtures::fibonacci());
  EXPECT_EQ(s(0, 0), 1);
  EXPECT_EQ(s(1, 0), 1);
  EXPECT_EQ(s(0, 1), 1);
  EXPECT_EQ(s(1, 1), 0);
}

TEST(SubstitutionMatrix, AbelianizationIsLinear) {
  for (const auto& e : fixtures::all()) {
    const IntMatrix s = substitution_matrix(e.sigma);
    const Word w = oracle::iterate(e.sigma.rules(), 0, 4);
    EXPECT_EQ(abelianization(e.sigma.apply(w), e.sigma.size()), s * abelianization(w, e.sigma.size()))
        << e.sigma.name();
  }
}

TEST(Primitivity, CorpusIsPrimitive) {
  for (const auto& e : fixtures::all()) EXPECT_TRUE(is_primitive(substitution_matrix(e.sigma))) << e.sigma.name();
}

TEST(Primitivity, DetectsReducibleAndPeriodicMatrices) {
  // a -> ab, b -> b never produces a from b.
  EXPECT_FALSE(is_primitive(substitution_matrix(Substitution({{0, 1}, {1}}))));
  // a -> b, b -> a: irreducible but periodic.
  EXPECT_FALSE(is_primitive(substitution_matrix(Substitution(std::vector<Word>{{1}, {0}}))));
}

TEST(Primitivity, MatchesBooleanPowerOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    std::vector<Word> rules;
    for (int a = 0; a < m; ++a) {
      Word w;
      const int len = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < len; ++t) w.push_back(static_cast<Letter>(rng() % static_cast<unsigned>(m)));
      rules.push_back(w);
    }
    const Substitution s(rules);
    // Oracle: some power up to 2^(m*m) of the Boolean matrix is positive;
    // powers cycle within that many steps.
    const IntMatrix base = substitution_matrix(s);
    std::vector<std::vector<bool>> b(m, std::vector<bool>(m)), p;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) b[i][j] = base(i, j) > 0;
    p = b;
    bool positive = false;
    for (int k = 0; k < 64 && !positive; ++k) {
      positive = true;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) positive = positive && p[i][j];
      std::vector<std::vector<bool>> q(m, std::vector<bool>(m, false));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int l = 0; l < m; ++l) q[i][j] = q[i][j] || (p[i][l] && b[l][j]);
      p = q;
    }
    EXPECT_EQ(is_primitive(base), positive);
  }
}

TEST(WordIterator, MatchesNaiveIteration) {
  for (const auto& e : fixtures::all()) {
    WordIterator it(e.sigma);
    for (Letter a = 0; a < e.sigma.size(); ++a)
      for (int n = 0; n <= 6; ++n) {
        const Word expect = oracle::iterate(e.sigma.rules(), a, n);
        EXPECT_EQ(it.power(a, n), expect);
        EXPECT_EQ(it.length(a, n), expect.size());
      }
  }
}

TEST(WordIterator, EnforcesLengthCap) {
  WordIterator it(fixtures::aba(), 100);
  EXPECT_NO_THROW(it.power(0, 4));
  try {
    it.power(0, 5);
    FAIL() << "expected LengthCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::length_cap_exceeded);
  }
  EXPECT_EQ(it.length(0, 5), 243u);
}

TEST(FixedPointSeed, KnownSeeds) {
  EXPECT_EQ(fixed_point_seed(fixtures::fibonacci()), (FixedPointSeed{2, 0, 0}));
  EXPECT_EQ(fixed_point_seed(fixtures::thue_morse()), (FixedPointSeed{2, 0, 0}));
  EXPECT_EQ(fixed_point_seed(fixtures::aba()), (FixedPointSeed{1, 0, 1}));
  EXPECT_EQ(fixed_point_seed(fixtures::rauzy()), (FixedPointSeed{3, 0, 0}));
}

TEST(FixedPointSeed, SeedIsFixedAndLegal) {
  for (const auto& e : fixtures::all()) {
    const auto seed = fixed_point_seed(e.sigma);
    const Word right = oracle::iterate(e.sigma.rules(), seed.right, seed.period);
    const Word left = oracle::iterate(e.sigma.rules(), seed.left, seed.period);
    EXPECT_EQ(right.front(), seed.right) << e.sigma.name();
    EXPECT_EQ(left.back(), seed.left) << e.sigma.name();
    // The junction must occur inside some long iterate.
    bool found = false;
    for (Letter c = 0; c < e.sigma.size() && !found; ++c) {
      const Word w = oracle::iterate(e.sigma.rules(), c, 8);
      for (std::size_t t = 0; t + 1 < w.size() && !found; ++t) found = w[t] == seed.left && w[t + 1] == seed.right;
    }
    EXPECT_TRUE(found) << e.sigma.name();
  }
}

TEST(LegalPairs, MatchLongIterates) {
  for (const auto& e : fixtures::all()) {
    std::set<std::pair<Letter, Letter>> expect;
    for (Letter c = 0; c < e.sigma.size(); ++c) {
      const Word w = oracle::iterate(e.sigma.rules(), c, 10);
      for (std::size_t t = 0; t + 1 < w.size(); ++t) expect.insert({w[t], w[t + 1]});
    }
    const auto got = legal_pairs(e.sigma);
    const std::set<std::pair<Letter, Letter>> got_set(got.begin(), got.end());
    EXPECT_EQ(got_set, expect) << e.sigma.name();
  }
}

TEST(CommutingInvolutions, FindsLetterSwaps) {
  EXPECT_EQ(commuting_involutions(fixtures::aba()), (std::vector<std::vector<Letter>>{{1, 0}}));
  EXPECT_EQ(commuting_involutions(fixtures::thue_morse()), (std::vector<std::vector<Letter>>{{1, 0}}));
  EXPECT_EQ(commuting_involutions(fixtures::fib2()), (std::vector<std::vector<Letter>>{{2, 3, 0, 1}}));
  EXPECT_EQ(commuting_involutions(fixtures::rauzy2()), (std::vector<std::vector<Letter>>{{3, 4, 5, 0, 1, 2}}));
  EXPECT_TRUE(commuting_involutions(fixtures::fibonacci()).empty());
  EXPECT_TRUE(commuting_involutions(fixtures::rauzy()).empty());
}

TEST(CommutingInvolutions, EveryResultCommutes) {
  for (const auto& e : fixtures::all()) {
    for (const auto& tau : commuting_involutions(e.sigma)) {
      for (Letter a = 0; a < e.sigma.size(); ++a) {
        EXPECT_NE(tau[a], a);
        EXPECT_EQ(tau[tau[a]], a);
        Word img = e.sigma.image(a);
        for (auto& x : img) x = tau[x];
        EXPECT_EQ(img, e.sigma.image(tau[a]));
      }
    }
  }
}
