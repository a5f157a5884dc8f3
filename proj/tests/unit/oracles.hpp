#pragma once

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with core/.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;

// Leibniz expansion over all permutations.
inline mpz_class determinant(const std::vector<std::vector<mpz_class>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det(t I - S).
inline mpz_class char_poly_at(const Matrix& s, long long t) {
  std::vector<std::vector<mpz_class>> a(s.size(), std::vector<mpz_class>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) a[i][j] = static_cast<long>((i == j ? t : 0) - s[i][j]);
  return determinant(a);
}

// All complex roots of a polynomial with ascending real coefficients
// (Durand-Kerner iteration).
inline std::vector<std::complex<long double>> roots(const std::vector<long double>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  const long double lead = coeffs.back();
  std::vector<std::complex<long double>> z(n);
  const std::complex<long double> seed(0.4L, 0.9L);
  z[0] = 1;
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, static_cast<int>(k));
  auto eval = [&](std::complex<long double> x) {
    std::complex<long double> acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k] / lead;
    return acc;
  };
  for (int iter = 0; iter < 5000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<long double> denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      const auto step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

inline long double largest_real_root(const std::vector<long double>& coeffs) {
  long double best = -1e300L;
  for (const auto& r : roots(coeffs))
    if (std::abs(r.imag()) < 1e-9L) best = std::max(best, r.real());
  return best;
}

// Value of sum c_k beta^k in long double.
inline long double evaluate(const std::vector<mpq_class>& coords, long double beta) {
  long double acc = 0, p = 1;
  for (const auto& c : coords) {
    acc += static_cast<long double>(c.get_d()) * p;
    p *= beta;
  }
  return acc;
}

// Letter counts of a prefix, recomputed from scratch.
inline std::vector<long long> counts(const std::vector<int>& w, std::size_t len, int m) {
  std::vector<long long> c(static_cast<std::size_t>(m), 0);
  for (std::size_t t = 0; t < len; ++t) ++c[static_cast<std::size_t>(w[t])];
  return c;
}

// sigma^n(a) by naive repeated application.
inline std::vector<int> iterate(const std::vector<std::vector<int>>& rules, int a, int n) {
  std::vector<int> w{a};
  for (int k = 0; k < n; ++k) {
    std::vector<int> next;
    for (int x : w) next.insert(next.end(), rules[static_cast<std::size_t>(x)].begin(),
                                rules[static_cast<std::size_t>(x)].end());
    w = std::move(next);
  }
  return w;
}

// Rank of a rational matrix by plain Gaussian elimination.
inline int rank(std::vector<std::vector<mpq_class>> a) {
  int r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    std::size_t p = static_cast<std::size_t>(r);
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[static_cast<std::size_t>(r)][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[static_cast<std::size_t>(r)][k];
    }
    ++r;
  }
  return r;
}

// Greatest common divisor of all k x k minors (determinantal divisor).
inline mpz_class determinantal_divisor(const std::vector<std::vector<mpz_class>>& a, std::size_t k) {
  const std::size_t rows = a.size(), cols = a[0].size();
  mpz_class g = 0;
  std::vector<bool> rsel(rows, false), csel(cols, false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::vector<mpz_class>> minor;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!rsel[i]) continue;
        std::vector<mpz_class> row;
        for (std::size_t j = 0; j < cols; ++j)
          if (csel[j]) row.push_back(a[i][j]);
        minor.push_back(row);
      }
      mpz_class d = determinant(minor);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

}  // namespace oracle
