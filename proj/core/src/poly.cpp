#include "tilecoin/poly.hpp"

#include <sstream>

#include "tilecoin/algnum.hpp"

namespace tilecoin {

int sign_of(const Rational& q) { return sgn(q); }
int sign_of(const BigInt& z) { return sgn(z); }

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree + 1), 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reciprocal() const {
  std::vector<BigInt> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const { return *this + (-rhs); }

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    const BigInt c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const IntPoly& p) {
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

QPoly QPoly::operator+(const QPoly& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& rhs) const { return *this + rhs * Rational(-1); }

QPoly QPoly::operator*(const QPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return QPoly(std::move(out));
}

QPoly QPoly::operator*(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Rational lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(std::vector<Rational>{1}), s1;
  QPoly t0, t1(std::vector<Rational>{1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  const Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    const int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

// ------------------------------------------------------------ char_poly

IntPoly char_poly(const IntMatrix& s) {
  const int n = s.rows();
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long>(s(i, j));
  return char_poly(a);
}

IntPoly char_poly(const std::vector<std::vector<BigInt>>& a) {
  // Faddeev-LeVerrier: every division by k is exact over the integers.
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<BigInt>>;
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Mat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a * m + c[n-k+1] * I
    Mat next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

}  // namespace tilecoin
