#include <algorithm>
#include <sstream>

#include "tilecoin/algnum.hpp"

namespace tilecoin {

namespace {

// Initial width of beta's isolating interval; most signs resolve at once.
const Rational kInitialWidth = Rational(1, 1) / Rational(BigInt(1) << 48);

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_mpz(const BigInt& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(p->_mp_size);
  const int n = std::abs(p->_mp_size);
  for (int i = 0; i < n; ++i) h = mix(h, static_cast<std::size_t>(p->_mp_d[i]));
  return h;
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::parse_error, "not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

// ----------------------------------------------------------- NumberField

NumberField::NumberField(IntPoly minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), beta_{std::move(lo), std::move(hi)} {
  const int n = minpoly_.degree();
  if (n < 1 || !minpoly_.is_monic()) throw std::invalid_argument("NumberField: minpoly must be monic of degree >= 1");
  if (beta_.lo > beta_.hi) throw std::invalid_argument("NumberField: empty isolating interval");
  if (n == 1) {
    const Rational root(-minpoly_.coeff(0));
    if (!beta_.contains(root)) throw std::invalid_argument("NumberField: interval misses the root");
    beta_ = {root, root};
  } else {
    if (beta_.lo <= 1) throw std::invalid_argument("NumberField: lower bound must exceed 1");
    if (sgn(minpoly_.eval(beta_.lo)) * sgn(minpoly_.eval(beta_.hi)) >= 0)
      throw std::invalid_argument("NumberField: minpoly does not change sign on the interval");
  }
  // beta^(n+k) for k = 0..n-2, from beta^n = -sum a_i beta^i.
  std::vector<BigInt> cur(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = -minpoly_.coeff(i);
  for (int k = 0; k + 1 < n; ++k) {
    reduction_.push_back(cur);
    std::vector<BigInt> next(static_cast<std::size_t>(n), 0);
    const BigInt top = cur.back();
    for (int i = n - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] -= top * minpoly_.coeff(i);
    cur = std::move(next);
  }
  refine_beta(kInitialWidth);
}

RatInterval NumberField::beta_interval() const {
  std::lock_guard lock(mutex_);
  return beta_;
}

void NumberField::refine_beta(const Rational& max_width) const {
  std::lock_guard lock(mutex_);
  if (beta_.lo == beta_.hi) return;
  const int s_lo = sgn(minpoly_.eval(beta_.lo));
  while (beta_.hi - beta_.lo > max_width) {
    Rational mid = (beta_.lo + beta_.hi) / 2;
    const int s = sgn(minpoly_.eval(mid));
    if (s == 0) {
      beta_ = {mid, mid};
      return;
    }
    if (s == s_lo)
      beta_.lo = std::move(mid);
    else
      beta_.hi = std::move(mid);
  }
}

RatInterval NumberField::enclose_with(const std::vector<Rational>& coords, const RatInterval& beta) const {
  RatInterval out{0, 0};
  Rational plo = 1, phi = 1;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    const Rational& c = coords[t];
    if (c > 0) {
      out.lo += c * plo;
      out.hi += c * phi;
    } else if (c < 0) {
      out.lo += c * phi;
      out.hi += c * plo;
    }
    plo *= beta.lo;
    phi *= beta.hi;
  }
  return out;
}

RatInterval NumberField::enclose(const FieldElem& a) const { return enclose_with(a.coords(), beta_interval()); }

RatInterval NumberField::enclose(const FieldElem& a, const Rational& max_width) const {
  RatInterval r = enclose(a);
  while (r.width() > max_width) {
    const Rational w = beta_interval().width();
    if (w == 0) break;
    refine_beta(w / 65536);
    r = enclose(a);
  }
  return r;
}

Sign NumberField::sign(const FieldElem& a) const {
  if (a.is_zero()) return Sign::zero;
  for (;;) {
    const RatInterval beta = beta_interval();
    const RatInterval r = enclose_with(a.coords(), beta);
    if (r.lo > 0) return Sign::positive;
    if (r.hi < 0) return Sign::negative;
    // Nonzero elements separate from 0 once beta is pinned down closely enough.
    refine_beta(beta.width() / 65536);
  }
}

FixedBounds NumberField::fixed_bounds(const FieldElem& a) const {
  const RatInterval r = enclose(a);
  const Rational scale(BigInt(1) << FixedBounds::kFixedShift);
  BigInt lo, hi;
  const Rational slo = r.lo * scale, shi = r.hi * scale;
  mpz_fdiv_q(lo.get_mpz_t(), slo.get_num_mpz_t(), slo.get_den_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), shi.get_num_mpz_t(), shi.get_den_mpz_t());
  // Keep headroom so sums of a few bounds cannot overflow.
  const BigInt limit = BigInt(1) << 60;
  if (abs(lo) >= limit || abs(hi) >= limit) return {};
  return {lo.get_si(), hi.get_si(), true};
}

int NumberField::compare(const FieldElem& a, const FieldElem& b) const {
  if (a == b) return 0;
  return static_cast<int>(sign(a - b));
}

FieldElem NumberField::zero() const {
  return FieldElem(this, std::vector<Rational>(static_cast<std::size_t>(degree()), 0));
}

FieldElem NumberField::one() const { return from_rational(1); }

FieldElem NumberField::beta() const {
  if (degree() == 1) return from_rational(Rational(-minpoly_.coeff(0)));
  std::vector<Rational> c(static_cast<std::size_t>(degree()), 0);
  c[1] = 1;
  return FieldElem(this, std::move(c));
}

FieldElem NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()), 0);
  c[0] = q;
  return FieldElem(this, std::move(c));
}

FieldElem NumberField::from_coords(std::vector<Rational> coords) const {
  if (static_cast<int>(coords.size()) != degree()) throw std::invalid_argument("from_coords: wrong dimension");
  return FieldElem(this, std::move(coords));
}

std::vector<Rational> NumberField::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  const std::size_t n = static_cast<std::size_t>(degree());
  std::vector<Rational> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& red = reduction_[k - n];
    for (std::size_t i = 0; i < n; ++i)
      if (red[i] != 0) out[i] += prod[k] * Rational(red[i]);
  }
  return out;
}

std::vector<Rational> NumberField::inverse(const std::vector<Rational>& a) const {
  const QPoly ap(a);
  if (ap.is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero in Q(beta)");
  const auto eg = extended_gcd(ap, QPoly(minpoly_));
  if (eg.g.degree() != 0) throw Error(ErrorCode::division_by_zero, "element not invertible (minpoly not irreducible?)");
  std::vector<Rational> out(static_cast<std::size_t>(degree()), 0);
  const QPoly s = divmod(eg.s, QPoly(minpoly_)).second;
  for (int i = 0; i <= s.degree(); ++i) out[static_cast<std::size_t>(i)] = s.coeff(i);
  return out;
}

// ------------------------------------------------------------- FieldElem

FieldElem::FieldElem(const NumberField* field, std::vector<Rational> coords)
    : field_(field), coords_(std::move(coords)) {}

bool FieldElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElem::is_rational() const {
  return std::all_of(coords_.begin() + (coords_.empty() ? 0 : 1), coords_.end(), [](const Rational& q) { return q == 0; });
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
  FieldElem out = *this;
  out += rhs;
  return out;
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
  FieldElem out = *this;
  out -= rhs;
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
  return FieldElem(field_, field_->multiply(coords_, rhs.coords_));
}

FieldElem FieldElem::operator*(const Rational& c) const {
  FieldElem out = *this;
  for (auto& q : out.coords_) q *= c;
  return out;
}

FieldElem FieldElem::operator-() const { return *this * Rational(-1); }

FieldElem FieldElem::inverse() const { return FieldElem(field_, field_->inverse(coords_)); }

FieldElem FieldElem::operator/(const FieldElem& rhs) const { return *this * rhs.inverse(); }

FieldElem FieldElem::pow(unsigned e) const {
  FieldElem result = field_->one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

bool FieldElem::canonical_less(const FieldElem& rhs) const {
  return std::lexicographical_compare(coords_.begin(), coords_.end(), rhs.coords_.begin(), rhs.coords_.end());
}

std::size_t FieldElem::hash() const {
  std::size_t h = coords_.size();
  for (const auto& q : coords_) {
    h = mix(h, hash_mpz(q.get_num()));
    h = mix(h, hash_mpz(q.get_den()));
  }
  return h;
}

std::string FieldElem::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
  os << "]";
  return os.str();
}

FieldElem arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return a;
}

// ------------------------------------------------------- perron_factor

std::shared_ptr<const NumberField> perron_factor(const IntPoly& p, int degree_cap) {
  const auto factors = factor(p, degree_cap);
  QPoly squarefree(std::vector<Rational>{1});
  for (const auto& f : factors) squarefree = squarefree * QPoly(f.poly);
  const auto chain = sturm_chain(squarefree);

  BigInt bound = 0;
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, BigInt(abs(p.coeff(i))));
  Rational a = 1, b = Rational(bound + 1);
  if (sturm_count(chain, a, b) == 0)
    throw Error(ErrorCode::factorization_failed, "characteristic polynomial has no real root above 1");
  while (sturm_count(chain, a, b) > 1) {
    Rational mid = (a + b) / 2;
    if (sturm_count(chain, mid, b) >= 1)
      a = std::move(mid);
    else
      b = std::move(mid);
  }
  for (const auto& f : factors) {
    const auto fchain = sturm_chain(QPoly(f.poly));
    if (sturm_count(fchain, a, b) != 1) continue;
    if (f.poly.degree() == 1) {
      const Rational root(-f.poly.coeff(0));
      return std::make_shared<const NumberField>(f.poly, root, root);
    }
    while (a <= 1) {
      Rational mid = (a + b) / 2;
      if (sturm_count(fchain, mid, b) == 1)
        a = std::move(mid);
      else
        b = std::move(mid);
    }
    return std::make_shared<const NumberField>(f.poly, a, b);
  }
  throw Error(ErrorCode::factorization_failed, "no factor isolates the largest real root");
}

// ------------------------------------------------------------ Pisot

std::optional<int> count_roots_in_unit_disk(const IntPoly& p) {
  const int n = p.degree();
  if (n < 1) return 0;
  // Schur-Cohn matrix: (p*(z)p*(w) - p(z)p(w)) / (1 - zw) = sum C_ij z^i w^j,
  // so C_ij = sum_k (b_{i-k} b_{j-k} - a_{i-k} a_{j-k}) with b = reversed a.
  auto a = [&](int i) { return p.coeff(i); };
  auto b = [&](int i) { return p.coeff(n - i); };
  std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt s = 0;
      for (int k = 0; k <= std::min(i, j); ++k) s += b(i - k) * b(j - k) - a(i - k) * a(j - k);
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  // The characteristic polynomial of a symmetric matrix is real-rooted, so
  // Descartes' rule counts its positive roots exactly.
  const IntPoly chi = char_poly(c);
  if (chi.coeff(0) == 0) return std::nullopt;
  int changes = 0;
  int prev = 0;
  for (const auto& coeff : chi.coeffs()) {
    const int s = sgn(coeff);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

bool is_pisot(const NumberField& field) {
  const IntPoly& f = field.minpoly();
  const int n = f.degree();
  if (n == 1) return -f.coeff(0) >= 2;
  // An irreducible f sharing a root with its reciprocal is (anti)palindromic;
  // its roots pair up as z, 1/z, which leaves room for a Pisot number only in
  // degree 2 (beta and 1/beta).
  const QPoly g = gcd(QPoly(f), QPoly(f.reciprocal()));
  if (g.degree() >= 1) return n == 2;
  const auto inside = count_roots_in_unit_disk(f);
  return inside && *inside == n - 1;
}

}  // namespace tilecoin
