#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "tilecoin/algnum.hpp"

namespace tilecoin {

namespace {

constexpr std::array<long, 15> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
constexpr double kSearchBudget = 4.0e7;

// ------------------------------------------------------ polynomials mod p

using PolyP = std::vector<long>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long inv_mod(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    const long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, p);
}

PolyP reduce(const IntPoly& f, long p) {
  PolyP out;
  for (const auto& c : f.coeffs()) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(r.get_si());
  }
  trim(out);
  return out;
}

PolyP sub(PolyP a, const PolyP& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

PolyP remainder(PolyP a, const PolyP& b, long p) {
  const long inv = inv_mod(b.back(), p);
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const long c = a[static_cast<std::size_t>(i)] * inv % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(i - db + j)] = mod(a[static_cast<std::size_t>(i - db + j)] - c * b[static_cast<std::size_t>(j)], p);
  }
  trim(a);
  return a;
}

PolyP quotient(PolyP a, const PolyP& b, long p) {
  const long inv = inv_mod(b.back(), p);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {};
  PolyP q(a.size() - static_cast<std::size_t>(db), 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const long c = a[static_cast<std::size_t>(i)] * inv % p;
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(i - db + j)] = mod(a[static_cast<std::size_t>(i - db + j)] - c * b[static_cast<std::size_t>(j)], p);
  }
  trim(q);
  return q;
}

PolyP mulmod(const PolyP& a, const PolyP& b, const PolyP& f, long p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return remainder(std::move(out), f, p);
}

PolyP powmod(PolyP base, unsigned long e, const PolyP& f, long p) {
  PolyP result{1};
  result = remainder(result, f, p);
  base = remainder(std::move(base), f, p);
  while (e > 0) {
    if (e & 1UL) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1UL;
  }
  return result;
}

PolyP gcd_p(PolyP a, PolyP b, long p) {
  while (!b.empty()) {
    PolyP r = remainder(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const long inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

PolyP derivative_p(const PolyP& a, long p) {
  PolyP d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mod(a[i] * static_cast<long>(i), p));
  trim(d);
  return d;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  return out;
}

// Degrees of the irreducible factors of a squarefree f mod p; empty if f is
// not squarefree mod p (the prime is then skipped).
std::vector<int> factor_degrees_mod(const IntPoly& f, long p) {
  PolyP fp = reduce(f, p);
  if (static_cast<int>(fp.size()) - 1 != f.degree()) return {};
  if (gcd_p(fp, derivative_p(fp, p), p).size() != 1) return {};
  std::vector<int> degrees;
  PolyP rest = fp;
  PolyP h{0, 1};
  const PolyP x{0, 1};
  for (int i = 1; 2 * i <= static_cast<int>(rest.size()) - 1; ++i) {
    h = powmod(h, static_cast<unsigned long>(p), fp, p);
    PolyP g = gcd_p(rest, sub(h, x, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int c = 0; c < dg / i; ++c) degrees.push_back(i);
      rest = quotient(rest, g, p);
    }
  }
  if (rest.size() > 1) degrees.push_back(static_cast<int>(rest.size()) - 1);
  return degrees;
}

std::set<int> subset_sums(const std::vector<int>& parts) {
  std::set<int> sums{0};
  for (int d : parts) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

// Candidate degrees d in [1, deg/2] for a nontrivial factor, intersected over
// the prime list.
std::vector<int> possible_factor_degrees(const IntPoly& f) {
  const int n = f.degree();
  std::set<int> allowed;
  for (int d = 1; 2 * d <= n; ++d) allowed.insert(d);
  for (long p : kPrimes) {
    const auto parts = factor_degrees_mod(f, p);
    if (parts.empty()) continue;
    const auto sums = subset_sums(parts);
    std::set<int> kept;
    for (int d : allowed)
      if (sums.count(d)) kept.insert(d);
    allowed = std::move(kept);
    if (allowed.empty()) break;
  }
  return {allowed.begin(), allowed.end()};
}

// ------------------------------------------------------- integer search

std::vector<BigInt> divisors(const BigInt& n) {
  BigInt a = abs(n);
  std::vector<BigInt> out;
  if (a == 0) return out;
  if (!a.fits_ulong_p() || a > BigInt(1'000'000'000'000L))
    throw Error(ErrorCode::factorization_failed, "constant term too large for divisor enumeration");
  const unsigned long v = a.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.emplace_back(d);
    if (d != v / d) out.emplace_back(v / d);
  }
  std::sort(out.begin(), out.end());
  std::vector<BigInt> signed_out;
  for (const auto& d : out) {
    signed_out.push_back(d);
    signed_out.push_back(-d);
  }
  return signed_out;
}

BigInt norm2_ceil(const IntPoly& f) {
  BigInt sq = 0;
  for (const auto& c : f.coeffs()) sq += c * c;
  BigInt r = sqrt(sq);
  if (r * r < sq) ++r;
  return r;
}

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

struct Search {
  const IntPoly& f;
  int d;
  std::vector<BigInt> bound;          // bound[j] for coefficient j
  std::vector<std::pair<BigInt, BigInt>> checks;  // (x, f(x)) with f(x) != 0
  std::vector<BigInt> g;
  std::optional<IntPoly> found;

  bool divides_at_checkpoints() const {
    for (const auto& [x, fx] : checks) {
      BigInt gx = 0;
      for (int j = d; j >= 0; --j) gx = gx * x + g[static_cast<std::size_t>(j)];
      if (gx == 0) return false;
      if (fx % gx != 0) return false;
    }
    return true;
  }

  void recurse(int j) {
    if (found) return;
    if (j == d) {
      if (!divides_at_checkpoints()) return;
      IntPoly cand(g);
      if (divmod_monic(f, cand).second.is_zero()) found = cand;
      return;
    }
    for (BigInt c = -bound[static_cast<std::size_t>(j)]; c <= bound[static_cast<std::size_t>(j)] && !found; ++c) {
      g[static_cast<std::size_t>(j)] = c;
      recurse(j + 1);
    }
  }
};

// Smallest-degree monic factor of f of degree d, if any (f monic, f(0) != 0).
std::optional<IntPoly> search_factor(const IntPoly& f, int d) {
  const BigInt norm = norm2_ceil(f);
  Search s{f, d, {}, {}, std::vector<BigInt>(static_cast<std::size_t>(d + 1), 0), std::nullopt};
  s.g[static_cast<std::size_t>(d)] = 1;
  double space = 1.0;
  for (int j = 0; j < d; ++j) {
    s.bound.push_back(binomial(d, j) * norm);
    if (j > 0) space *= 2.0 * s.bound.back().get_d() + 1.0;
  }
  const auto consts = divisors(f.coeff(0));
  space *= static_cast<double>(consts.size());
  if (space > kSearchBudget)
    throw Error(ErrorCode::factorization_failed,
                "factor search space for degree " + std::to_string(d) + " exceeds budget");
  for (long x : {1L, -1L, 2L, -2L, 3L}) {
    BigInt fx = f.eval(BigInt(x));
    if (fx != 0) s.checks.emplace_back(BigInt(x), fx);
  }
  for (const auto& c0 : consts) {
    if (abs(c0) > s.bound[0]) continue;
    s.g[0] = c0;
    s.recurse(1);
    if (s.found) break;
  }
  return s.found;
}

IntPoly make_monic_transform(const IntPoly& p) {
  // a^(n-1) p(x / a) is monic and irreducible iff p is.
  IntPoly q = p.leading() < 0 ? -p : p;
  const int n = q.degree();
  const BigInt a = q.leading();
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  BigInt power = 1;
  for (int i = n; i >= 0; --i) {
    // coefficient of x^i: q_i * a^(n-1-i)
    if (i == n) {
      c[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    c[static_cast<std::size_t>(i)] = q.coeff(i) * power;
    power *= a;
  }
  return IntPoly(std::move(c));
}

// One irreducible monic factor of lowest degree of monic f with deg f >= 1.
IntPoly lowest_factor(const IntPoly& f) {
  if (f.degree() == 1) return f;
  if (f.coeff(0) == 0) return IntPoly{0, 1};
  for (const auto& r : divisors(f.coeff(0)))
    if (f.eval(r) == 0) return IntPoly(std::vector<BigInt>{-r, 1});
  if (f.degree() <= 3) return f;
  for (long p : kPrimes)
    if (is_irreducible_mod(f, p)) return f;
  for (int d : possible_factor_degrees(f)) {
    if (d < 2) continue;
    if (auto g = search_factor(f, d)) return *g;
  }
  return f;
}

}  // namespace

bool is_irreducible_mod(const IntPoly& p, long prime) {
  if (!p.is_monic()) throw std::invalid_argument("is_irreducible_mod: polynomial must be monic");
  const int n = p.degree();
  if (n <= 1) return n == 1;
  const PolyP f = reduce(p, prime);
  const PolyP x{0, 1};
  std::vector<PolyP> frob(static_cast<std::size_t>(n + 1));
  frob[0] = remainder(x, f, prime);
  for (int i = 1; i <= n; ++i) frob[static_cast<std::size_t>(i)] = powmod(frob[static_cast<std::size_t>(i - 1)], static_cast<unsigned long>(prime), f, prime);
  if (sub(frob[static_cast<std::size_t>(n)], frob[0], prime).size() != 0) return false;
  for (int q : prime_divisors(n)) {
    const PolyP g = gcd_p(f, sub(frob[static_cast<std::size_t>(n / q)], frob[0], prime), prime);
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_irreducible(const IntPoly& p, int degree_cap) {
  if (p.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be at least 1");
  if (p.degree() > degree_cap)
    throw Error(ErrorCode::degree_cap_exceeded, "degree " + std::to_string(p.degree()) + " above cap " + std::to_string(degree_cap));
  if (p.degree() == 1) return true;
  if (p.content() != 1) return false;
  const IntPoly f = p.is_monic() ? p : make_monic_transform(p);
  for (long prime : kPrimes)
    if (is_irreducible_mod(f, prime)) return true;
  return lowest_factor(f) == f;
}

std::vector<PolyFactor> factor(const IntPoly& p, int degree_cap) {
  if (!p.is_monic()) throw std::invalid_argument("factor: polynomial must be monic");
  if (p.degree() > degree_cap)
    throw Error(ErrorCode::degree_cap_exceeded, "degree " + std::to_string(p.degree()) + " above cap " + std::to_string(degree_cap));
  std::vector<PolyFactor> out;
  IntPoly rest = p;
  while (rest.degree() >= 1) {
    const IntPoly g = lowest_factor(rest);
    int mult = 0;
    while (rest.degree() >= g.degree()) {
      auto [q, r] = divmod_monic(rest, g);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

}  // namespace tilecoin
