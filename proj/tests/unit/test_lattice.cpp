#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tilecoin/lattice.hpp"

using namespace tilecoin;

namespace {

std::vector<std::vector<Rational>> rows(std::initializer_list<std::initializer_list<long>> xs, long den = 1) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : xs) {
    std::vector<Rational> row;
    for (long x : r) {
      Rational q(x, den);
      q.canonicalize();
      row.push_back(q);
    }
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<Rational>> random_generators(std::mt19937& rng, int count, int dim, int den) {
  std::vector<std::vector<Rational>> g;
  for (int k = 0; k < count; ++k) {
    std::vector<Rational> v;
    for (int d = 0; d < dim; ++d) {
      Rational q(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % den));
      q.canonicalize();
      v.push_back(q);
    }
    g.push_back(v);
  }
  return g;
}

BigInt abs_det(const ZModule& m) {
  std::vector<std::vector<mpz_class>> b = m.basis();
  return abs(oracle::determinant(b));
}

AbelianGroup group_of(const std::vector<long>& factors, int free_rank) {
  AbelianGroup g;
  for (long f : factors) g.invariant_factors.emplace_back(f);
  g.free_rank = free_rank;
  return g;
}

}  // namespace

TEST(ZModule, SpanExamples) {
  const auto z = ZModule::span(rows({{3}, {5}}), 1);
  EXPECT_EQ(z.rational_basis(), rows({{1}}));
  const auto two_thirds = ZModule::span({{Rational(2)}, {Rational(2, 3)}}, 1);
  EXPECT_EQ(two_thirds.rational_basis(), (std::vector<std::vector<Rational>>{{Rational(2, 3)}}));
  EXPECT_EQ(two_thirds.denom(), 3);
  EXPECT_TRUE(two_thirds.contains(std::vector<Rational>{Rational(4, 3)}));
  EXPECT_FALSE(two_thirds.contains(std::vector<Rational>{Rational(1, 3)}));
}

TEST(ZModule, GoldenRatioLattice) {
  const auto sys = SuspensionSystem::build(fixtures::fibonacci());
  const auto& f = sys.field();
  const auto m = module_from({f.one(), sys.beta()}, 2);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.denom(), 1);
  EXPECT_TRUE(m.contains(sys.beta() * sys.beta()));
  EXPECT_FALSE(m.contains(sys.beta().inverse() * Rational(1, 2)));
  const auto coords = m.coordinates((sys.beta() * Rational(3) - f.one() * Rational(7)).coords());
  ASSERT_TRUE(coords);
}

TEST(ZModule, CanonicalForm) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    auto gens = random_generators(rng, 1 + static_cast<int>(rng() % 5), dim, 6);
    const auto a = ZModule::span(gens, dim);
    // Idempotent on its own basis.
    EXPECT_EQ(ZModule::span(a.rational_basis(), dim), a);
    // Independent of generator order and of redundant combinations.
    std::shuffle(gens.begin(), gens.end(), rng);
    if (gens.size() >= 2) {
      std::vector<Rational> combo(static_cast<std::size_t>(dim));
      for (int d = 0; d < dim; ++d) combo[d] = gens[0][d] * 3 - gens[1][d] * 2;
      gens.push_back(combo);
    }
    EXPECT_EQ(ZModule::span(gens, dim), a);
    // Every generator is a member with integral coordinates reproducing it.
    const auto basis = a.rational_basis();
    for (const auto& g : gens) {
      const auto co = a.coordinates(g);
      ASSERT_TRUE(co);
      std::vector<Rational> back(static_cast<std::size_t>(dim), 0);
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (int d = 0; d < dim; ++d) back[d] += Rational((*co)[r]) * basis[r][d];
      EXPECT_EQ(back, g);
    }
  }
}

TEST(HermiteNormalForm, Shape) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<BigInt>> a(4, std::vector<BigInt>(3));
    for (auto& r : a)
      for (auto& x : r) x = static_cast<long>(rng() % 21) - 10;
    const auto h = hermite_normal_form(a, 3);
    std::size_t last_pivot = 0;
    for (std::size_t r = 0; r < h.size(); ++r) {
      std::size_t p = 0;
      while (p < 3 && h[r][p] == 0) ++p;
      ASSERT_LT(p, 3u);
      if (r > 0) EXPECT_GT(p, last_pivot);
      EXPECT_GT(h[r][p], 0);
      for (std::size_t above = 0; above < r; ++above) {
        EXPECT_GE(h[above][p], 0);
        EXPECT_LT(h[above][p], h[r][p]);
      }
      last_pivot = p;
    }
    std::vector<std::vector<mpq_class>> qa;
    for (const auto& r : a) qa.emplace_back(r.begin(), r.end());
    EXPECT_EQ(static_cast<int>(h.size()), oracle::rank(qa));
  }
}

TEST(SmithInvariants, MatchDeterminantalDivisors) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 2 + rng() % 2, c = 2 + rng() % 2;
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
    const auto inv = smith_invariants(a);
    BigInt prod = 1;
    for (std::size_t k = 0; k < inv.size(); ++k) {
      prod *= inv[k];
      EXPECT_EQ(prod, oracle::determinantal_divisor(a, k + 1));
      if (k > 0) EXPECT_EQ(inv[k] % inv[k - 1], 0);
    }
    if (inv.size() < std::min(r, c)) EXPECT_EQ(oracle::determinantal_divisor(a, inv.size() + 1), 0);
  }
}

TEST(Quotient, Examples) {
  const auto z = ZModule::span(rows({{1}}), 1);
  const auto two = ZModule::span(rows({{2}}), 1);
  const auto two_thirds = ZModule::span({{Rational(2, 3)}}, 1);
  EXPECT_EQ(quotient(z, two), group_of({2}, 0));
  EXPECT_EQ(quotient(two_thirds, two), group_of({3}, 0));
  EXPECT_TRUE(quotient(z, z).trivial());
  EXPECT_EQ(quotient(z, ZModule(1)), group_of({}, 1));
  EXPECT_EQ(quotient(z, ZModule(1)).to_string(), "Z");
  EXPECT_EQ(quotient(two_thirds, two).to_string(), "Z/3Z");
  EXPECT_EQ(quotient(z, z).to_string(), "trivial");
  try {
    quotient(two, z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_submodule);
  }
}

TEST(Quotient, OrderIsDeterminantRatio) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = random_generators(rng, 3, 2, 3);
    const auto sup = ZModule::span(gens, 2);
    if (sup.rank() != 2) continue;
    std::vector<std::vector<Rational>> sub_gens;
    for (const auto& g : sup.rational_basis()) {
      const long k = 1 + static_cast<long>(rng() % 4);
      std::vector<Rational> v;
      for (const auto& x : g) v.push_back(x * k);
      sub_gens.push_back(v);
    }
    const auto sub = ZModule::span(sub_gens, 2);
    const auto q = quotient(sup, sub);
    ASSERT_FALSE(q.infinite());
    // Index = |det B_sub| / |det B_sup| with the denominators folded in.
    Rational ratio(abs_det(sub), abs_det(sup));
    ratio *= Rational(sup.denom() * sup.denom(), sub.denom() * sub.denom());
    ratio.canonicalize();
    EXPECT_EQ(Rational(q.order()), ratio);
  }
}

TEST(HeightGroup, Examples) {
  {
    const auto sys = SuspensionSystem::build(fixtures::aba());
    const auto h = height_group(sys, left_endpoints(sys));
    EXPECT_EQ(h.group, group_of({2}, 0));
    EXPECT_TRUE(h.stable);
    const auto hg = height_group(sys, control_points(sys, fixtures::aba_gamma()));
    EXPECT_EQ(hg.group, group_of({3}, 0));
    EXPECT_EQ(hg.sup, ZModule::span({{Rational(2, 3)}}, 1));
    EXPECT_EQ(hg.sub, ZModule::span({{Rational(2)}}, 1));
  }
  {
    const auto sys = SuspensionSystem::build(fixtures::fib2());
    EXPECT_TRUE(height_group(sys, left_endpoints(sys)).group.trivial());
  }
  {
    const auto sys = SuspensionSystem::build(fixtures::rauzy2());
    EXPECT_TRUE(height_group(sys, control_points(sys, fixtures::rauzy2_gamma())).group.trivial());
    EXPECT_EQ(height_group(sys, left_endpoints(sys)).group, group_of({2}, 0));
  }
}

TEST(HeightGroup, TrivialForIrreducibleLeftEndpoints) {
  for (const auto& e : fixtures::all()) {
    if (!e.irreducible) continue;
    const auto sys = SuspensionSystem::build(e.sigma);
    const auto h = height_group(sys, left_endpoints(sys));
    EXPECT_TRUE(h.group.trivial()) << e.sigma.name();
    EXPECT_TRUE(h.stable);
  }
}

TEST(HeightGroup, WindowsGrowMonotonically) {
  for (const auto& e : fixtures::all()) {
    const auto sys = SuspensionSystem::build(e.sigma);
    const auto c = left_endpoints(sys);
    WordIterator words(e.sigma);
    ZModule prev(sys.field().degree());
    for (int t : {4, 8, 16}) {
      const Window w = default_window(sys, t);
      const auto gens = difference_generators(reference_point_sets(sys, covering_patch(sys, c, w, words), c, w));
      const auto cur = module_from(gens.all, sys.field().degree());
      for (const auto& b : prev.rational_basis()) EXPECT_TRUE(cur.contains(b)) << e.sigma.name();
      prev = cur;
    }
  }
}

TEST(EventualMembership, ThueMorseDyadics) {
  const auto sys = SuspensionSystem::build(fixtures::thue_morse());
  const auto& f = sys.field();
  const auto z = ZModule::span(rows({{1}}), 1);
  EXPECT_EQ(eventual_membership(f.from_rational(Rational(1, 2)), z, sys.beta()), 1);
  EXPECT_EQ(eventual_membership(f.from_rational(Rational(1, 4)), z, sys.beta()), 2);
  EXPECT_EQ(eventual_membership(f.from_rational(Rational(3)), z, sys.beta()), 0);
  for (int kmax : {1, 8, 40}) EXPECT_FALSE(eventual_membership(f.from_rational(Rational(1, 3)), z, sys.beta(), kmax));
  EXPECT_FALSE(eventual_membership(f.from_rational(Rational(1, 4)), z, sys.beta(), 1));
}

TEST(LambdaDiffInG, Examples) {
  {
    const auto sys = SuspensionSystem::build(fixtures::aba());
    const auto g = lambda_diff_in_G(sys, left_endpoints(sys));
    EXPECT_EQ(g.status, Status::unknown);
    EXPECT_EQ(g.kmax, kDefaultKmax);
  }
  for (const auto& sigma : {fixtures::fib2(), fixtures::fibonacci(), fixtures::thue_morse()}) {
    const auto sys = SuspensionSystem::build(sigma);
    const auto g = lambda_diff_in_G(sys, left_endpoints(sys));
    EXPECT_EQ(g.status, Status::holds) << sigma.name();
    EXPECT_EQ(g.k, 0);
  }
  {
    const auto sys = SuspensionSystem::build(fixtures::aba());
    const auto g = lambda_diff_in_G(sys, control_points(sys, fixtures::aba_gamma()));
    EXPECT_EQ(g.status, Status::holds);
    EXPECT_EQ(g.k, 1);
  }
}

TEST(DifferenceGenerators, SpanTheDifferenceSets) {
  for (const auto& e : fixtures::all()) {
    const auto sys = SuspensionSystem::build(e.sigma);
    const auto c = left_endpoints(sys);
    WordIterator words(e.sigma);
    const Window w = default_window(sys, 8);
    const auto ps = reference_point_sets(sys, covering_patch(sys, c, w, words), c, w);
    const auto gens = difference_generators(ps);
    const auto rv = return_vectors(ps);
    const int n = sys.field().degree();
    EXPECT_EQ(module_from(gens.all, n), module_from(rv.all, n));
    for (std::size_t i = 0; i < gens.by_color.size(); ++i)
      EXPECT_EQ(module_from(gens.by_color[i], n), module_from(rv.by_color[i], n));
  }
}
