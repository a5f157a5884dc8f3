#include "tilecoin/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace tilecoin {

namespace {

bool is_zero_row(const std::vector<BigInt>& r) {
  return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

std::size_t pivot_of(const std::vector<BigInt>& r) {
  std::size_t p = 0;
  while (p < r.size() && r[p] == 0) ++p;
  return p;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<std::vector<BigInt>> hermite_normal_form(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
  // Echelon basis kept sorted by pivot column; each generator is folded in
  // with unimodular 2x2 steps.
  std::vector<std::vector<BigInt>> basis;
  for (auto& v : rows) {
    for (std::size_t col = 0; col < cols; ++col) {
      if (v[col] == 0) continue;
      auto it = std::find_if(basis.begin(), basis.end(), [&](const auto& r) { return pivot_of(r) >= col; });
      if (it == basis.end() || pivot_of(*it) > col) {
        if (v[col] < 0)
          for (auto& x : v) x = -x;
        basis.insert(it, std::move(v));
        break;
      }
      auto& r = *it;
      const BigInt a = r[col], b = v[col];
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const BigInt ag = a / g, bg = b / g;
      for (std::size_t k = col; k < cols; ++k) {
        const BigInt rk = r[k], vk = v[k];
        r[k] = s * rk + t * vk;
        v[k] = ag * vk - bg * rk;
      }
      if (r[col] < 0)
        for (auto& x : r) x = -x;
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const std::size_t p = pivot_of(basis[j]);
      const BigInt q = floor_div(basis[i][p], basis[j][p]);
      if (q == 0) continue;
      for (std::size_t k = p; k < cols; ++k) basis[i][k] -= q * basis[j][k];
    }
  }
  return basis;
}

std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const BigInt q = floor_div(a[r][t], a[t][t]);
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const BigInt q = floor_div(a[t][c], a[t][t]);
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt g = gcd(diag[i], diag[j]);
      const BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

ZModule ZModule::span(const std::vector<std::vector<Rational>>& generators, int dim) {
  ZModule m(dim);
  BigInt d = 1;
  for (const auto& g : generators)
    for (const auto& q : g) d = lcm(d, BigInt(q.get_den()));
  std::vector<std::vector<BigInt>> rows;
  for (const auto& g : generators) {
    std::vector<BigInt> r(static_cast<std::size_t>(dim));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = BigInt(g[k] * d);
    if (!is_zero_row(r)) rows.push_back(std::move(r));
  }
  m.basis_ = hermite_normal_form(std::move(rows), static_cast<std::size_t>(dim));
  BigInt g = d;
  for (const auto& r : m.basis_)
    for (const auto& x : r) g = gcd(g, x);
  m.denom_ = d / g;
  for (auto& r : m.basis_)
    for (auto& x : r) x /= g;
  if (m.basis_.empty()) m.denom_ = 1;
  return m;
}

std::vector<std::vector<Rational>> ZModule::rational_basis() const {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : basis_) {
    std::vector<Rational> q;
    for (const auto& x : r) {
      Rational e(x, denom_);
      e.canonicalize();
      q.push_back(e);
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::optional<std::vector<BigInt>> ZModule::coordinates(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != dim_) return std::nullopt;
  std::vector<BigInt> w;
  for (const auto& q : v) {
    const Rational s = q * Rational(denom_);
    if (s.get_den() != 1) return std::nullopt;
    w.push_back(s.get_num());
  }
  std::vector<BigInt> coef;
  for (const auto& r : basis_) {
    const std::size_t p = pivot_of(r);
    if (w[p] % r[p] != 0) return std::nullopt;
    const BigInt q = w[p] / r[p];
    for (std::size_t k = p; k < w.size(); ++k) w[k] -= q * r[k];
    coef.push_back(q);
  }
  if (!is_zero_row(w)) return std::nullopt;
  return coef;
}

std::string ZModule::to_string() const {
  std::ostringstream os;
  os << "(1/" << denom_.get_str() << ")[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t k = 0; k < basis_[i].size(); ++k) os << (k ? " " : "") << basis_[i][k].get_str();
  }
  os << "]";
  return os.str();
}

ZModule module_from(const std::vector<FieldElem>& elems, int dim) {
  std::vector<std::vector<Rational>> gens;
  gens.reserve(elems.size());
  for (const auto& e : elems) gens.push_back(e.coords());
  return ZModule::span(gens, dim);
}

BigInt AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  BigInt n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "trivial";
  std::string s;
  for (const auto& d : invariant_factors) s += (s.empty() ? "" : " x ") + ("Z/" + d.get_str() + "Z");
  if (free_rank > 0)
    s += (s.empty() ? "" : " x ") + std::string("Z") + (free_rank > 1 ? "^" + std::to_string(free_rank) : "");
  return s;
}

AbelianGroup quotient(const ZModule& sup, const ZModule& sub) {
  if (sup.dim() != sub.dim()) throw Error(ErrorCode::not_a_submodule, "modules live in different spaces");
  std::vector<std::vector<BigInt>> coef;
  for (const auto& row : sub.rational_basis()) {
    auto c = sup.coordinates(row);
    if (!c) throw Error(ErrorCode::not_a_submodule, "sub is not contained in sup");
    coef.push_back(std::move(*c));
  }
  AbelianGroup g;
  const auto inv = smith_invariants(std::move(coef));
  for (const auto& d : inv)
    if (d > 1) g.invariant_factors.push_back(d);
  g.free_rank = sup.rank() - static_cast<int>(inv.size());
  return g;
}

DifferenceGenerators difference_generators(const PointSets& ps) {
  DifferenceGenerators dg;
  auto from_base = [](const std::vector<FieldElem>& pts) {
    std::vector<FieldElem> out;
    for (std::size_t t = 1; t < pts.size(); ++t) out.push_back(pts[t] - pts[0]);
    return out;
  };
  for (const auto& pts : ps.by_color) dg.by_color.push_back(from_base(pts));
  dg.all = from_base(ps.all());
  return dg;
}

namespace {

struct WindowLattices {
  ZModule sup;
  ZModule sub;
};

WindowLattices lattices_on(const SuspensionSystem& sys, const RefPoints& c, int tile_lengths, WordIterator& words) {
  const Window w = default_window(sys, tile_lengths);
  const Patch patch = covering_patch(sys, c, w, words);
  const auto gens = difference_generators(reference_point_sets(sys, patch, c, w));
  std::vector<FieldElem> sub;
  for (const auto& g : gens.by_color) sub.insert(sub.end(), g.begin(), g.end());
  const int n = sys.field().degree();
  return {module_from(gens.all, n), module_from(sub, n)};
}

}  // namespace

HeightGroup height_group(const SuspensionSystem& sys, const RefPoints& c, const std::vector<int>& schedule,
                         std::size_t length_cap) {
  if (schedule.empty()) throw Error(ErrorCode::empty_window, "empty window schedule");
  WordIterator words(sys.substitution(), length_cap);
  WindowLattices prev = lattices_on(sys, c, schedule[0], words);
  for (std::size_t t = 0; t + 1 < schedule.size(); ++t) {
    WindowLattices next = lattices_on(sys, c, schedule[t + 1], words);
    if (prev.sup == next.sup && prev.sub == next.sub)
      return {quotient(prev.sup, prev.sub), true, schedule[t], prev.sup, prev.sub};
    prev = std::move(next);
  }
  return {quotient(prev.sup, prev.sub), false, schedule.back(), prev.sup, prev.sub};
}

std::optional<int> eventual_membership(const FieldElem& v, const ZModule& l0, const FieldElem& beta, int kmax) {
  FieldElem p = v;
  for (int k = 0; k <= kmax; ++k) {
    if (l0.contains(p)) return k;
    p = p * beta;
  }
  return std::nullopt;
}

GroupMembership lambda_diff_in_G(const SuspensionSystem& sys, const RefPoints& c, int kmax,
                                 int window_tile_lengths, std::size_t length_cap) {
  WordIterator words(sys.substitution(), length_cap);
  const Window w = default_window(sys, window_tile_lengths);
  const Patch patch = covering_patch(sys, c, w, words);
  const auto gens = difference_generators(reference_point_sets(sys, patch, c, w));
  const int n = sys.field().degree();
  const ZModule sup = module_from(gens.all, n);

  GroupMembership out;
  out.kmax = kmax;
  out.window = window_tile_lengths;
  for (Letter i = 0; i < sys.size(); ++i) {
    const ZModule l0 = module_from(gens.by_color[static_cast<std::size_t>(i)], n);
    int worst = 0;
    bool ok = true;
    for (const auto& row : sup.rational_basis()) {
      const auto k = eventual_membership(sys.field().from_coords(row), l0, sys.beta(), kmax);
      if (!k) {
        ok = false;
        break;
      }
      worst = std::max(worst, *k);
    }
    if (ok && (out.status != Status::holds || worst < out.k)) {
      out.status = Status::holds;
      out.k = worst;
      out.color = i;
    }
  }
  return out;
}

}  // namespace tilecoin
