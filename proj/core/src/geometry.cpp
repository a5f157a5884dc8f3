#include "tilecoin/geometry.hpp"

#include <algorithm>
#include <unordered_set>

namespace tilecoin {

namespace {

using FieldMatrix = std::vector<std::vector<FieldElem>>;

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(FieldMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    const FieldElem inv = a[row][col].inverse();
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const FieldElem f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int compare_rational(const FieldElem& x, const Rational& r) {
  const RatInterval e = x.field().enclose(x);
  if (e.lo > r) return 1;
  if (e.hi < r) return -1;
  return static_cast<int>(x.field().sign(x - x.field().from_rational(r)));
}

const FieldElem& min_real(const std::vector<FieldElem>& xs) {
  const FieldElem* best = &xs.front();
  for (const auto& x : xs)
    if (x.field().compare(x, *best) < 0) best = &x;
  return *best;
}

Rational round_up_sixteenth(const Rational& q) {
  const Rational s = q * 16;
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return Rational(c, 16);
}

}  // namespace

std::vector<FieldElem> solve_linear(FieldMatrix a, std::vector<FieldElem> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, n);
  if (pivots.size() != n) throw Error(ErrorCode::eigenvector_defect, "singular linear system over Q(beta)");
  std::vector<FieldElem> x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::vector<FieldElem> prototile_lengths(const Substitution& sigma, const NumberField& field) {
  const IntMatrix s = substitution_matrix(sigma);
  const int m = sigma.size();
  const FieldElem beta = field.beta();
  // l S = beta l, i.e. (S^T - beta I) l = 0.
  FieldMatrix a(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      FieldElem e = field.from_rational(Rational(static_cast<long>(s(i, j))));
      if (i == j) e -= beta;
      a[static_cast<std::size_t>(j)].push_back(std::move(e));
    }
  }
  const auto pivots = rref(a, static_cast<std::size_t>(m));
  if (static_cast<int>(pivots.size()) != m - 1)
    throw Error(ErrorCode::eigenvector_defect, "beta-eigenspace is not one-dimensional");
  std::size_t free_col = 0;
  for (std::size_t p = 0; p < pivots.size() && pivots[p] == free_col; ++p) ++free_col;
  std::vector<FieldElem> l(static_cast<std::size_t>(m), field.zero());
  l[free_col] = field.one();
  for (std::size_t r = 0; r < pivots.size(); ++r) l[pivots[r]] = -a[r][free_col];
  const FieldElem last = l.back();
  if (last.is_zero()) throw Error(ErrorCode::eigenvector_defect, "eigenvector vanishes on the last letter");
  const FieldElem inv = last.inverse();
  for (auto& x : l) {
    x = x * inv;
    if (x.sign() != Sign::positive) throw Error(ErrorCode::eigenvector_defect, "eigenvector is not positive");
  }
  return l;
}

SuspensionSystem SuspensionSystem::build(const Substitution& sigma, int degree_cap) {
  SuspensionSystem sys;
  sys.sigma_ = sigma;
  sys.matrix_ = substitution_matrix(sigma);
  if (!is_primitive(sys.matrix_)) throw Error(ErrorCode::invalid_substitution, "substitution is not primitive");
  sys.char_poly_ = char_poly(sys.matrix_);
  sys.field_ = perron_factor(sys.char_poly_, degree_cap);
  sys.beta_ = sys.field_->beta();
  sys.lengths_ = prototile_lengths(sigma, *sys.field_);
  for (Letter j = 0; j < sigma.size(); ++j) {
    std::vector<FieldElem> offs;
    FieldElem pos = sys.field_->zero();
    for (Letter i : sigma.image(j)) {
      offs.push_back(pos);
      pos += sys.length(i);
    }
    sys.offsets_.push_back(std::move(offs));
  }
  sys.seed_ = fixed_point_seed(sigma);
  Rational bound = 0;
  for (const auto& l : sys.lengths_) bound = std::max(bound, sys.field_->enclose(l, Rational(1, 64)).hi);
  sys.max_length_bound_ = round_up_sixteenth(bound);
  return sys;
}

RefPoints left_endpoints(const SuspensionSystem& sys) {
  return RefPoints(static_cast<std::size_t>(sys.size()), sys.field().zero());
}

RefPoints control_points(const SuspensionSystem& sys, const TileMap& gamma) {
  const int m = sys.size();
  if (static_cast<int>(gamma.choice.size()) != m) throw Error(ErrorCode::invalid_substitution, "tile map has wrong size");
  const NumberField& f = sys.field();
  FieldMatrix a(static_cast<std::size_t>(m), std::vector<FieldElem>(static_cast<std::size_t>(m), f.zero()));
  std::vector<FieldElem> o;
  for (Letter j = 0; j < m; ++j) {
    const std::size_t t = gamma.choice[static_cast<std::size_t>(j)];
    const Word& img = sys.substitution().image(j);
    if (t >= img.size()) throw Error(ErrorCode::invalid_substitution, "tile map index out of range");
    auto& row = a[static_cast<std::size_t>(j)];
    row[static_cast<std::size_t>(j)] += sys.beta();
    row[static_cast<std::size_t>(img[t])] -= f.one();
    o.push_back(sys.offset(j, t));
  }
  return solve_linear(std::move(a), std::move(o));
}

bool is_admissible(const SuspensionSystem& sys, const RefPoints& c) {
  const int m = sys.size();
  for (Letter i = 0; i < m; ++i)
    for (Letter j = 0; j < m; ++j) {
      const FieldElem d = sys.length(j) - c[static_cast<std::size_t>(j)] + c[static_cast<std::size_t>(i)];
      if (d.sign() != Sign::positive) return false;
    }
  return true;
}

Word Patch::word() const {
  Word w;
  w.reserve(tiles.size());
  for (const auto& t : tiles) w.push_back(t.color);
  return w;
}

Patch generate_patch(const SuspensionSystem& sys, const PatchSeed& seed, int n, WordIterator& words) {
  Patch p;
  const FieldElem scale = sys.beta().pow(static_cast<unsigned>(n));
  Word w;
  if (seed.two_sided) {
    w = words.power(seed.left, n);
    const Word& r = words.power(seed.right, n);
    w.insert(w.end(), r.begin(), r.end());
    p.support_lo = -(scale * sys.length(seed.left));
  } else {
    w = words.power(seed.left, n);
    p.support_lo = sys.field().zero();
  }
  p.tiles.reserve(w.size());
  FieldElem pos = p.support_lo;
  for (Letter a : w) {
    p.tiles.push_back({pos, a});
    pos += sys.length(a);
  }
  p.support_hi = pos;
  return p;
}

Patch generate_patch(const SuspensionSystem& sys, const PatchSeed& seed, int n, std::size_t length_cap) {
  WordIterator words(sys.substitution(), length_cap);
  return generate_patch(sys, seed, n, words);
}

Patch fixed_point_patch(const SuspensionSystem& sys, int n, WordIterator& words) {
  const auto& s = sys.seed();
  return generate_patch(sys, PatchSeed::pair(s.left, s.right), s.period * n, words);
}

Window default_window(const SuspensionSystem& sys, int tile_lengths) {
  return Window::centered(sys.max_length_bound() * tile_lengths / 2);
}

bool covers(const SuspensionSystem& sys, const Patch& patch, const RefPoints& c, const Window& window) {
  std::vector<FieldElem> tails;
  for (Letter i = 0; i < sys.size(); ++i) tails.push_back(sys.length(i) - c[static_cast<std::size_t>(i)]);
  const FieldElem left_limit = patch.support_lo - min_real(tails);
  const FieldElem right_limit = patch.support_hi + min_real(c);
  return compare_rational(left_limit, window.lo) < 0 && compare_rational(right_limit, window.hi) > 0;
}

Patch covering_patch(const SuspensionSystem& sys, const RefPoints& c, const Window& window, WordIterator& words) {
  for (int n = 1;; ++n) {
    Patch p = fixed_point_patch(sys, n, words);
    if (covers(sys, p, c, window)) return p;
  }
}

std::size_t PointSets::total() const {
  std::size_t n = 0;
  for (const auto& v : by_color) n += v.size();
  return n;
}

std::vector<FieldElem> PointSets::all() const {
  std::vector<FieldElem> out;
  for (const auto& v : by_color) out.insert(out.end(), v.begin(), v.end());
  if (!out.empty()) {
    const NumberField& f = out.front().field();
    std::sort(out.begin(), out.end(), [&](const FieldElem& a, const FieldElem& b) { return f.compare(a, b) < 0; });
  }
  return out;
}

PointSets reference_point_sets(const SuspensionSystem& sys, const Patch& patch, const RefPoints& c,
                               const Window& window) {
  if (window.lo > window.hi) throw Error(ErrorCode::empty_window, "window is empty");
  if (!covers(sys, patch, c, window)) throw Error(ErrorCode::window_not_covered, "patch does not cover the window");
  PointSets ps;
  ps.window = window;
  ps.by_color.resize(static_cast<std::size_t>(sys.size()));
  for (const auto& t : patch.tiles) {
    FieldElem x = t.position + c[static_cast<std::size_t>(t.color)];
    if (compare_rational(x, window.lo) >= 0 && compare_rational(x, window.hi) <= 0)
      ps.by_color[static_cast<std::size_t>(t.color)].push_back(std::move(x));
  }
  return ps;
}

ReturnVectors return_vectors(const PointSets& ps) {
  ReturnVectors rv;
  auto diffs = [](const std::vector<FieldElem>& pts) {
    std::unordered_set<FieldElem, FieldElemHash> seen;
    for (const auto& x : pts)
      for (const auto& y : pts) seen.insert(x - y);
    std::vector<FieldElem> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const FieldElem& a, const FieldElem& b) { return a.canonical_less(b); });
    return out;
  };
  for (const auto& pts : ps.by_color) rv.by_color.push_back(diffs(pts));
  rv.all = diffs(ps.all());
  return rv;
}

}  // namespace tilecoin
