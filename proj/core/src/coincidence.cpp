#include "tilecoin/coincidence.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tilecoin {

namespace {

std::optional<std::vector<Letter>> separating_involution(const std::vector<std::vector<Letter>>& involutions, Letter i,
                                                         Letter j) {
  for (const auto& tau : involutions)
    if (tau[static_cast<std::size_t>(i)] == j) return tau;
  return std::nullopt;
}

// First index s with equal prefix abelianizations and u[s] == v[s].
std::optional<std::size_t> common_letter(const Word& u, const Word& v, int m) {
  std::vector<std::int64_t> diff(static_cast<std::size_t>(m), 0);
  int nonzero = 0;
  auto bump = [&](Letter a, std::int64_t d) {
    auto& x = diff[static_cast<std::size_t>(a)];
    if (x == 0) ++nonzero;
    x += d;
    if (x == 0) --nonzero;
  };
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t s = 0; s < n; ++s) {
    if (nonzero == 0 && u[s] == v[s]) return s;
    bump(u[s], 1);
    bump(v[s], -1);
  }
  return std::nullopt;
}

// Tiles of Omega^L(T_i - c_i): position -> color.
using TileIndex = std::unordered_map<FieldElem, Letter, FieldElemHash>;

struct PlacedWord {
  const Word* word;
  FieldElem start;
};

PlacedWord placed(const RefPoints& c, WordIterator& words, Letter i, int L,
                  const FieldElem& scale) {
  return {&words.power(i, L), -(scale * c[static_cast<std::size_t>(i)])};
}

template <typename F>
void for_each_tile(const SuspensionSystem& sys, const PlacedWord& pw, F&& f) {
  FieldElem pos = pw.start;
  for (Letter a : *pw.word) {
    if (!f(pos, a)) return;
    pos += sys.length(a);
  }
}

TileIndex index_tiles(const SuspensionSystem& sys, const PlacedWord& pw) {
  TileIndex idx;
  idx.reserve(pw.word->size());
  for_each_tile(sys, pw, [&](const FieldElem& p, Letter a) {
    idx.emplace(p, a);
    return true;
  });
  return idx;
}

CoincidenceWitness geometric_witness(const RefPoints& c, int L, Letter k,
                                     const FieldElem& position, std::vector<Letter> scope) {
  CoincidenceWitness w;
  w.L = L;
  w.color = k;
  w.eta = position + c[static_cast<std::size_t>(k)];
  w.scope = std::move(scope);
  return w;
}

}  // namespace

Status combine(const std::vector<PairVerdict>& pairs) {
  bool all = true;
  for (const auto& p : pairs) {
    if (p.verdict.status == Status::fails) return Status::fails;
    if (p.verdict.status != Status::holds) all = false;
  }
  return all ? Status::holds : Status::unknown;
}

std::vector<PairVerdict> prefix_strong(const Substitution& sigma, int Lmax, bool suffix, std::size_t length_cap) {
  const Substitution s = suffix ? sigma.reversed() : sigma;
  const int m = s.size();
  const auto involutions = commuting_involutions(s);
  WordIterator words(s, length_cap);
  std::vector<PairVerdict> out;
  for (Letter i = 0; i < m; ++i) {
    for (Letter j = i; j < m; ++j) {
      PairVerdict pv{i, j, {}};
      pv.verdict.bound = Lmax;
      if (i == j) {
        pv.verdict.status = Status::holds;
        pv.verdict.witness = CoincidenceWitness{0, i, std::nullopt, 0, 0, 0, {i, j}};
      } else if (auto tau = separating_involution(involutions, i, j)) {
        pv.verdict.status = Status::fails;
        pv.verdict.involution = std::move(tau);
      } else {
        for (int L = 1; L <= Lmax; ++L) {
          const Word& u = words.power(i, L);
          const Word& v = words.power(j, L);
          if (auto pos = common_letter(u, v, m)) {
            pv.verdict.status = Status::holds;
            pv.verdict.witness = CoincidenceWitness{L, u[*pos], std::nullopt, *pos, *pos, 0, {i, j}};
            break;
          }
        }
      }
      out.push_back(std::move(pv));
    }
  }
  return out;
}

std::vector<PairVerdict> geometric_strong(const SuspensionSystem& sys, const RefPoints& c, int Lmax,
                                          std::size_t length_cap) {
  const int m = sys.size();
  WordIterator words(sys.substitution(), length_cap);
  std::vector<PairVerdict> out;
  for (Letter i = 0; i < m; ++i) {
    for (Letter j = i; j < m; ++j) {
      PairVerdict pv{i, j, {}};
      pv.verdict.bound = Lmax;
      if (i == j) {
        pv.verdict.status = Status::holds;
        pv.verdict.witness = geometric_witness(c, 0, i, -c[static_cast<std::size_t>(i)], {i, j});
        out.push_back(std::move(pv));
        continue;
      }
      FieldElem scale = sys.field().one();
      for (int L = 1; L <= Lmax && pv.verdict.status != Status::holds; ++L) {
        scale = scale * sys.beta();
        const TileIndex left = index_tiles(sys, placed(c, words, i, L, scale));
        for_each_tile(sys, placed(c, words, j, L, scale), [&](const FieldElem& q, Letter b) {
          const auto it = left.find(q);
          if (it == left.end() || it->second != b) return true;
          pv.verdict.status = Status::holds;
          pv.verdict.witness = geometric_witness(c, L, b, q, {i, j});
          return false;
        });
      }
      out.push_back(std::move(pv));
    }
  }
  return out;
}

BoundedVerdict simultaneous(const SuspensionSystem& sys, const RefPoints& c, int Lmax, std::size_t length_cap) {
  const int m = sys.size();
  WordIterator words(sys.substitution(), length_cap);
  std::vector<Letter> scope(static_cast<std::size_t>(m));
  for (Letter a = 0; a < m; ++a) scope[static_cast<std::size_t>(a)] = a;
  BoundedVerdict v;
  v.bound = Lmax;
  FieldElem scale = sys.field().one();
  for (int L = 1; L <= Lmax; ++L) {
    scale = scale * sys.beta();
    TileIndex common = index_tiles(sys, placed(c, words, 0, L, scale));
    for (Letter a = 1; a < m && !common.empty(); ++a) {
      const TileIndex next = index_tiles(sys, placed(c, words, a, L, scale));
      std::erase_if(common, [&](const auto& kv) {
        const auto it = next.find(kv.first);
        return it == next.end() || it->second != kv.second;
      });
    }
    if (common.empty()) continue;
    auto best = common.begin();
    for (auto it = common.begin(); it != common.end(); ++it)
      if (sys.field().compare(it->first, best->first) < 0) best = it;
    v.status = Status::holds;
    v.witness = geometric_witness(c, L, best->second, best->first, scope);
    return v;
  }
  return v;
}

BoundedVerdict prefix_simultaneous(const Substitution& sigma, int Lmax, std::size_t length_cap) {
  const int m = sigma.size();
  WordIterator words(sigma, length_cap);
  BoundedVerdict v;
  v.bound = Lmax;
  for (int L = 1; L <= Lmax; ++L) {
    std::vector<const Word*> ws;
    std::size_t shortest = SIZE_MAX;
    for (Letter a = 0; a < m; ++a) {
      ws.push_back(&words.power(a, L));
      shortest = std::min(shortest, ws.back()->size());
    }
    // Prefix abelianizations of every word relative to the first one.
    std::vector<std::vector<std::int64_t>> diff(static_cast<std::size_t>(m),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
    std::vector<int> nonzero(static_cast<std::size_t>(m), 0);
    for (std::size_t M = 1; M <= shortest; ++M) {
      const Letter first = (*ws[0])[M - 1];
      bool ok = true;
      for (std::size_t a = 1; a < ws.size(); ++a) {
        auto bump = [&](Letter x, std::int64_t d) {
          auto& e = diff[a][static_cast<std::size_t>(x)];
          if (e == 0) ++nonzero[a];
          e += d;
          if (e == 0) --nonzero[a];
        };
        bump((*ws[a])[M - 1], 1);
        bump(first, -1);
        if (nonzero[a] != 0 || (*ws[a])[M - 1] != first) ok = false;
      }
      if (ok) {
        v.status = Status::holds;
        CoincidenceWitness w;
        w.L = L;
        w.color = first;
        w.prefix_length = M;
        for (Letter a = 0; a < m; ++a) w.scope.push_back(a);
        v.witness = std::move(w);
        return v;
      }
    }
  }
  return v;
}

bool verify_witness(const SuspensionSystem& sys, const RefPoints& c, const CoincidenceWitness& w,
                    const Window& window, std::size_t length_cap) {
  if (!w.eta) return false;
  WordIterator words(sys.substitution(), length_cap);
  int n = 1;
  Patch patch = fixed_point_patch(sys, n, words);
  while (!covers(sys, patch, c, window)) patch = fixed_point_patch(sys, ++n, words);
  const PointSets ps = reference_point_sets(sys, patch, c, window);

  // Omega^L of the covering patch is a patch of Omega^L(T) containing every
  // image tile we need to look up.
  const auto& seed = sys.seed();
  const Patch target = generate_patch(sys, PatchSeed::pair(seed.left, seed.right), seed.period * n + w.L, words);
  std::unordered_set<FieldElem, FieldElemHash> lambda_k;
  for (const auto& t : target.tiles)
    if (t.color == w.color) lambda_k.insert(t.position + c[static_cast<std::size_t>(w.color)]);

  const FieldElem scale = sys.beta().pow(static_cast<unsigned>(w.L));
  for (Letter a : w.scope)
    for (const auto& x : ps.by_color[static_cast<std::size_t>(a)])
      if (!lambda_k.contains(scale * x + *w.eta)) return false;
  return true;
}

}  // namespace tilecoin
