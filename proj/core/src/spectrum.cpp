#include "tilecoin/spectrum.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace tilecoin {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

// A real number carried both exactly and as fixed-point bounds for fast
// comparisons.
struct Approx {
  FieldElem exact;
  FixedBounds fb;
};

Approx approx(FieldElem x) {
  FixedBounds fb = x.field().fixed_bounds(x);
  return {std::move(x), fb};
}

int cmp(const Approx& a, const Approx& b) {
  const int s = (a.fb - b.fb).certain_sign();
  if (s != 0) return s;
  return a.exact.field().compare(a.exact, b.exact);
}

// Reverse BFS from the target nodes; returns steps-to-target, -1 if unreachable.
std::vector<int> distance_to(const std::vector<std::vector<std::size_t>>& succ, const std::vector<bool>& target) {
  const std::size_t n = succ.size();
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : succ[a]) pred[b].push_back(a);
  std::vector<int> dist(n, -1);
  std::deque<std::size_t> q;
  for (std::size_t a = 0; a < n; ++a)
    if (target[a]) {
      dist[a] = 0;
      q.push_back(a);
    }
  while (!q.empty()) {
    const std::size_t b = q.front();
    q.pop_front();
    for (std::size_t a : pred[b])
      if (dist[a] < 0) {
        dist[a] = dist[b] + 1;
        q.push_back(a);
      }
  }
  return dist;
}

}  // namespace

std::size_t OverlapClassHash::operator()(const OverlapClass& o) const {
  return mix(mix(o.x.hash(), static_cast<std::size_t>(o.i)), static_cast<std::size_t>(o.j));
}

bool overlap_less(const OverlapClass& a, const OverlapClass& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  return a.x.canonical_less(b.x);
}

bool satisfies_overlap_bound(const SuspensionSystem& sys, const OverlapClass& o) {
  return (o.x + sys.length(o.i)).sign() == Sign::positive && (sys.length(o.j) - o.x).sign() == Sign::positive;
}

std::vector<OverlapClass> initial_overlaps(const SuspensionSystem& sys, const RefPoints& c, const Window& window,
                                           std::size_t length_cap) {
  WordIterator words(sys.substitution(), length_cap);
  const Patch patch = covering_patch(sys, c, window, words);
  const ReturnVectors rv = return_vectors(reference_point_sets(sys, patch, c, window));

  std::unordered_set<FieldElem, FieldElemHash> ys;
  for (const auto& d : rv.by_color)
    for (const auto& y : d)
      if (!y.is_zero()) ys.insert(y);
  if (ys.empty()) throw Error(ErrorCode::empty_window, "window holds no nonzero return vector");
  std::vector<FieldElem> shifts(ys.begin(), ys.end());
  std::sort(shifts.begin(), shifts.end(), [](const FieldElem& a, const FieldElem& b) { return a.canonical_less(b); });

  const std::size_t n = patch.tiles.size();
  std::vector<Approx> lo, hi;
  for (const auto& t : patch.tiles) {
    lo.push_back(approx(t.position));
    hi.push_back(approx(t.position + sys.length(t.color)));
  }

  std::unordered_set<OverlapClass, OverlapClassHash> seen;
  std::vector<OverlapClass> out;
  for (const auto& y : shifts) {
    std::size_t start = 0;
    for (std::size_t u = 0; u < n; ++u) {
      const Letter i = patch.tiles[u].color;
      const Approx s = approx(patch.tiles[u].position - y);
      const Approx e = approx(s.exact + sys.length(i));
      while (start < n && cmp(hi[start], s) <= 0) ++start;
      for (std::size_t v = start; v < n && cmp(lo[v], e) < 0; ++v) {
        OverlapClass o{i, patch.tiles[v].color, s.exact - patch.tiles[v].position};
        if (seen.insert(o).second) out.push_back(std::move(o));
      }
    }
  }
  std::sort(out.begin(), out.end(), overlap_less);
  return out;
}

std::vector<OverlapClass> inflate_overlap(const SuspensionSystem& sys, const OverlapClass& o) {
  const Word& wi = sys.substitution().image(o.i);
  const Word& wj = sys.substitution().image(o.j);
  const FieldElem bx = sys.beta() * o.x;
  std::vector<OverlapClass> out;
  for (std::size_t t = 0; t < wi.size(); ++t) {
    const FieldElem left = bx + sys.offset(o.i, t);
    for (std::size_t s = 0; s < wj.size(); ++s) {
      OverlapClass next{wi[t], wj[s], left - sys.offset(o.j, s)};
      if (satisfies_overlap_bound(sys, next)) out.push_back(std::move(next));
    }
  }
  return out;
}

OverlapResult overlap_coincidence(const SuspensionSystem& sys, const RefPoints& c, int window_tile_lengths,
                                  std::size_t node_cap, std::size_t length_cap) {
  OverlapResult r;
  r.node_cap = node_cap;
  r.window_tile_lengths = window_tile_lengths;
  r.window = default_window(sys, window_tile_lengths);

  auto& g = r.graph;
  std::unordered_map<OverlapClass, std::size_t, OverlapClassHash> index;
  auto add = [&](OverlapClass o) {
    auto [it, fresh] = index.emplace(o, g.nodes.size());
    if (fresh) {
      g.nodes.push_back(std::move(o));
      g.successors.emplace_back();
    }
    return it->second;
  };
  for (auto& o : initial_overlaps(sys, c, r.window, length_cap)) add(std::move(o));
  r.initial_count = g.nodes.size();

  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    if (g.nodes.size() > node_cap) return r;
    std::vector<std::size_t> succ;
    for (auto& o : inflate_overlap(sys, g.nodes[a])) succ.push_back(add(std::move(o)));
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    g.successors[a] = std::move(succ);
  }

  std::vector<bool> coincidence(g.nodes.size());
  for (std::size_t a = 0; a < g.nodes.size(); ++a) coincidence[a] = g.nodes[a].is_coincidence();
  const auto dist = distance_to(g.successors, coincidence);
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    if (dist[a] < 0)
      r.certificate.push_back(g.nodes[a]);
    else
      r.max_steps = std::max(r.max_steps, dist[a]);
  }
  if (r.certificate.empty()) {
    r.status = Status::holds;
  } else {
    r.status = Status::fails;
    r.max_steps = 0;
  }
  return r;
}

bool verify_closed_set(const SuspensionSystem& sys, const std::vector<OverlapClass>& set) {
  if (set.empty()) return false;
  const std::unordered_set<OverlapClass, OverlapClassHash> members(set.begin(), set.end());
  for (const auto& o : set) {
    if (o.is_coincidence() || !satisfies_overlap_bound(sys, o)) return false;
    for (const auto& n : inflate_overlap(sys, o))
      if (!members.contains(n)) return false;
  }
  return true;
}

// ------------------------------------------------------------ balanced pairs

std::size_t BalancedPairHash::operator()(const BalancedPair& p) const {
  std::size_t h = p.u.size();
  for (Letter a : p.u) h = mix(h, static_cast<std::size_t>(a));
  h = mix(h, 0xabcdefULL);
  for (Letter a : p.v) h = mix(h, static_cast<std::size_t>(a));
  return h;
}

std::vector<BalancedPair> split_irreducible(const Word& u, const Word& v, int m) {
  if (u.size() != v.size() || abelianization(u, m) != abelianization(v, m))
    throw Error(ErrorCode::invalid_word, "pair is not balanced");
  std::vector<BalancedPair> out;
  std::vector<std::int64_t> diff(static_cast<std::size_t>(m), 0);
  int nonzero = 0;
  auto bump = [&](Letter a, std::int64_t d) {
    auto& x = diff[static_cast<std::size_t>(a)];
    if (x == 0) ++nonzero;
    x += d;
    if (x == 0) --nonzero;
  };
  std::size_t cut = 0;
  for (std::size_t t = 0; t < u.size(); ++t) {
    bump(u[t], 1);
    bump(v[t], -1);
    if (nonzero == 0) {
      out.push_back({Word(u.begin() + static_cast<std::ptrdiff_t>(cut), u.begin() + static_cast<std::ptrdiff_t>(t + 1)),
                     Word(v.begin() + static_cast<std::ptrdiff_t>(cut), v.begin() + static_cast<std::ptrdiff_t>(t + 1))});
      cut = t + 1;
    }
  }
  return out;
}

namespace {

constexpr std::size_t kSeedPrefix = 4096;

// Irreducible balanced pairs of (w[p..], w[q..]) up to the last complete cut.
std::vector<BalancedPair> aligned_pairs(const Word& w, std::size_t p, std::size_t q, int m) {
  const std::size_t len = w.size() - q;
  std::vector<std::int64_t> diff(static_cast<std::size_t>(m), 0);
  int nonzero = 0;
  std::size_t last = 0;
  for (std::size_t t = 0; t < len; ++t) {
    for (auto [a, d] : {std::pair{w[p + t], std::int64_t{1}}, std::pair{w[q + t], std::int64_t{-1}}}) {
      auto& x = diff[static_cast<std::size_t>(a)];
      if (x == 0) ++nonzero;
      x += d;
      if (x == 0) --nonzero;
    }
    if (nonzero == 0) last = t + 1;
  }
  const auto first = w.begin() + static_cast<std::ptrdiff_t>(p);
  const auto second = w.begin() + static_cast<std::ptrdiff_t>(q);
  return split_irreducible(Word(first, first + static_cast<std::ptrdiff_t>(last)),
                           Word(second, second + static_cast<std::ptrdiff_t>(last)), m);
}

}  // namespace

BalancedPairResult balanced_pairs(const Substitution& sigma, std::size_t pair_cap, int iter_cap,
                                  std::size_t return_words, std::size_t length_cap) {
  BalancedPairResult r;
  r.pair_cap = pair_cap;
  r.iter_cap = iter_cap;
  const int m = sigma.size();
  {
    const auto field = perron_factor(char_poly(substitution_matrix(sigma)));
    r.pisot = is_pisot(*field);
  }

  // One-sided fixed point of sigma^k starting with the right seed letter.
  const FixedPointSeed seed = fixed_point_seed(sigma);
  WordIterator words(sigma, length_cap);
  int n = 1;
  while (words.length(seed.right, seed.period * n) < kSeedPrefix &&
         words.length(seed.right, seed.period * (n + 1)) <= length_cap)
    ++n;
  const Word& u = words.power(seed.right, seed.period * n);

  const Letter a = u.front();
  std::vector<std::size_t> occ;
  for (std::size_t t = 0; t < u.size(); ++t)
    if (u[t] == a) occ.push_back(t);
  std::vector<BalancedPair> seeds;
  for (std::size_t t = 0; t + 1 < occ.size() && r.return_words.size() < return_words; ++t) {
    Word rw(u.begin() + static_cast<std::ptrdiff_t>(occ[t]), u.begin() + static_cast<std::ptrdiff_t>(occ[t + 1]));
    if (std::find(r.return_words.begin(), r.return_words.end(), rw) != r.return_words.end()) continue;
    r.return_words.push_back(std::move(rw));
    for (auto& bp : aligned_pairs(u, occ[t], occ[t + 1], m))
      if (std::find(seeds.begin(), seeds.end(), bp) == seeds.end()) seeds.push_back(std::move(bp));
  }
  r.seeds = seeds;

  std::vector<BalancedPair> nodes;
  std::vector<std::vector<std::size_t>> succ;
  std::unordered_map<BalancedPair, std::size_t, BalancedPairHash> index;
  std::size_t letters = 0;
  auto add = [&](BalancedPair p) {
    auto [it, fresh] = index.emplace(p, nodes.size());
    if (fresh) {
      letters += p.u.size();
      nodes.push_back(std::move(p));
      succ.emplace_back();
    }
    return it->second;
  };
  for (auto& s : seeds) add(std::move(s));

  std::size_t level_end = nodes.size();
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    if (t == level_end) {
      ++r.iterations;
      level_end = nodes.size();
    }
    if (nodes.size() > pair_cap || r.iterations >= iter_cap || letters > length_cap) {
      r.pair_count = nodes.size();
      return r;
    }
    const Word su = sigma.apply(nodes[t].u);
    const Word sv = sigma.apply(nodes[t].v);
    std::vector<std::size_t> next;
    for (auto& p : split_irreducible(su, sv, m)) next.push_back(add(std::move(p)));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    succ[t] = std::move(next);
  }
  r.pair_count = nodes.size();

  std::vector<bool> coincidence(nodes.size());
  for (std::size_t t = 0; t < nodes.size(); ++t) coincidence[t] = nodes[t].is_coincidence();
  const auto dist = distance_to(succ, coincidence);
  for (std::size_t t = 0; t < nodes.size(); ++t)
    if (dist[t] < 0) r.certificate.push_back(nodes[t]);
  r.status = r.certificate.empty() ? Status::holds : Status::fails;
  return r;
}

bool verify_closed_pairs(const Substitution& sigma, const std::vector<BalancedPair>& set) {
  if (set.empty()) return false;
  const std::unordered_set<BalancedPair, BalancedPairHash> members(set.begin(), set.end());
  for (const auto& p : set) {
    if (p.is_coincidence()) return false;
    for (const auto& q : split_irreducible(sigma.apply(p.u), sigma.apply(p.v), sigma.size()))
      if (!members.contains(q)) return false;
  }
  return true;
}

std::string_view to_string(Spectrum s) {
  switch (s) {
    case Spectrum::pure_discrete: return "PURE_DISCRETE";
    case Spectrum::not_pure_discrete: return "NOT_PURE_DISCRETE";
    case Spectrum::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

SpectralVerdict spectral_verdict(Status overlap, Status balanced) {
  auto as_spectrum = [](Status s) {
    switch (s) {
      case Status::holds: return Spectrum::pure_discrete;
      case Status::fails: return Spectrum::not_pure_discrete;
      case Status::unknown: break;
    }
    return Spectrum::unknown;
  };
  const Spectrum a = as_spectrum(overlap), b = as_spectrum(balanced);
  SpectralVerdict v;
  if (a != Spectrum::unknown && b != Spectrum::unknown) {
    v.agreement = a == b;
    if (a == b) {
      v.status = a;
    } else {
      v.diagnostic = std::string(to_string(ErrorCode::disagreement_detected)) +
                     ": overlap coincidence and balanced pairs reached opposite verdicts";
    }
    return v;
  }
  v.status = a != Spectrum::unknown ? a : b;
  return v;
}

}  // namespace tilecoin
