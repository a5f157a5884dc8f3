#include "tilecoin/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tilecoin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_word: return "InvalidWord";
    case ErrorCode::invalid_substitution: return "InvalidSubstitution";
    case ErrorCode::length_cap_exceeded: return "LengthCapExceeded";
    case ErrorCode::no_seed_found: return "NoSeedFound";
    case ErrorCode::factorization_failed: return "FactorizationFailed";
    case ErrorCode::degree_cap_exceeded: return "DegreeCapExceeded";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::eigenvector_defect: return "EigenvectorDefect";
    case ErrorCode::window_not_covered: return "WindowNotCovered";
    case ErrorCode::not_a_submodule: return "NotASubmodule";
    case ErrorCode::empty_window: return "EmptyWindow";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::not_found: return "NotFound";
    case ErrorCode::disagreement_detected: return "DisagreementDetected";
  }
  return "Unknown";
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

AbVector IntMatrix::operator*(const AbVector& v) const {
  AbVector out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

std::int64_t IntMatrix::column_sum(int c) const {
  std::int64_t s = 0;
  for (int r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

bool IntMatrix::all_positive() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x > 0; });
}

Substitution::Substitution(std::vector<Word> rules, std::string name)
    : rules_(std::move(rules)), name_(std::move(name)) {
  const int m = size();
  if (m < 2)
    throw Error(ErrorCode::invalid_substitution, "substitution needs at least two letters");
  for (std::size_t j = 0; j < rules_.size(); ++j) {
    if (rules_[j].empty())
      throw Error(ErrorCode::invalid_substitution, "rule " + std::to_string(j) + " is empty");
    for (Letter a : rules_[j])
      if (a < 0 || a >= m)
        throw Error(ErrorCode::invalid_word, "rule " + std::to_string(j) + " uses letter " + std::to_string(a));
  }
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (Letter a : w) {
    if (a < 0 || a >= size()) throw Error(ErrorCode::invalid_word, "letter out of range");
    const Word& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Substitution Substitution::reversed() const {
  std::vector<Word> rules = rules_;
  for (auto& w : rules) std::reverse(w.begin(), w.end());
  return Substitution(std::move(rules), name_.empty() ? name_ : name_ + "-reversed");
}

AbVector abelianization(const Word& w, int m) {
  AbVector counts(static_cast<std::size_t>(m), 0);
  for (Letter a : w) {
    if (a < 0 || a >= m)
      throw Error(ErrorCode::invalid_word, "letter " + std::to_string(a) + " outside alphabet of size " + std::to_string(m));
    ++counts[static_cast<std::size_t>(a)];
  }
  return counts;
}

IntMatrix substitution_matrix(const Substitution& sigma) {
  const int m = sigma.size();
  IntMatrix s(m, m);
  for (Letter j = 0; j < m; ++j)
    for (Letter i : sigma.image(j)) ++s(i, j);
  return s;
}

bool is_primitive(const IntMatrix& s) {
  const int m = s.rows();
  if (m == 0 || s.cols() != m) return false;
  // Boolean powers keep the entries bounded.
  auto pattern = [m](const IntMatrix& a) {
    IntMatrix b(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) b(i, j) = a(i, j) > 0 ? 1 : 0;
    return b;
  };
  const IntMatrix base = pattern(s);
  IntMatrix power = base;
  const int bound = m * m - 2 * m + 2;
  for (int k = 1; k <= bound; ++k) {
    if (power.all_positive()) return true;
    power = pattern(power * base);
  }
  return power.all_positive();
}

WordIterator::WordIterator(const Substitution& sigma, std::size_t length_cap)
    : sigma_(sigma), cap_(length_cap), matrix_(substitution_matrix(sigma)),
      cache_(static_cast<std::size_t>(sigma.size())) {
  for (Letter a = 0; a < sigma_.size(); ++a) cache_[static_cast<std::size_t>(a)].push_back(Word{a});
}

std::size_t WordIterator::length(Letter a, int n) const {
  const int m = sigma_.size();
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> len(static_cast<std::size_t>(m), 1);
  for (int k = 0; k < n; ++k) {
    std::vector<std::size_t> next(static_cast<std::size_t>(m), 0);
    for (Letter b = 0; b < m; ++b) {
      std::size_t total = 0;
      for (Letter c : sigma_.image(b)) {
        const std::size_t add = len[static_cast<std::size_t>(c)];
        total = (total > kMax - add) ? kMax : total + add;
      }
      next[static_cast<std::size_t>(b)] = total;
    }
    len = std::move(next);
  }
  return len[static_cast<std::size_t>(a)];
}

const Word& WordIterator::power(Letter a, int n) {
  if (a < 0 || a >= sigma_.size()) throw Error(ErrorCode::invalid_word, "letter out of range");
  if (n < 0) throw Error(ErrorCode::invalid_word, "negative iteration count");
  auto& row = cache_[static_cast<std::size_t>(a)];
  if (static_cast<int>(row.size()) > n) return row[static_cast<std::size_t>(n)];
  if (length(a, n) > cap_)
    throw Error(ErrorCode::length_cap_exceeded,
                "|sigma^" + std::to_string(n) + "(" + std::to_string(a) + ")| exceeds cap " + std::to_string(cap_));
  // sigma^k(a) is the concatenation of sigma^(k-1)(b) over b in sigma(a).
  while (static_cast<int>(row.size()) <= n) {
    const int k = static_cast<int>(row.size());
    Word w;
    w.reserve(length(a, k));
    for (Letter b : sigma_.image(a)) {
      const Word& part = power(b, k - 1);
      w.insert(w.end(), part.begin(), part.end());
    }
    // power(b, k - 1) may have grown row when b == a; re-check before storing.
    if (static_cast<int>(row.size()) == k) row.push_back(std::move(w));
  }
  return row[static_cast<std::size_t>(n)];
}

std::vector<std::pair<Letter, Letter>> legal_pairs(const Substitution& sigma) {
  std::set<std::pair<Letter, Letter>> legal;
  for (const Word& w : sigma.rules())
    for (std::size_t t = 0; t + 1 < w.size(); ++t) legal.emplace(w[t], w[t + 1]);
  std::vector<std::pair<Letter, Letter>> work(legal.begin(), legal.end());
  while (!work.empty()) {
    const auto [x, y] = work.back();
    work.pop_back();
    const std::pair<Letter, Letter> boundary{sigma.image(x).back(), sigma.image(y).front()};
    if (legal.insert(boundary).second) work.push_back(boundary);
  }
  return {legal.begin(), legal.end()};
}

FixedPointSeed fixed_point_seed(const Substitution& sigma) {
  const int m = sigma.size();
  const auto legal_list = legal_pairs(sigma);
  const std::set<std::pair<Letter, Letter>> legal(legal_list.begin(), legal_list.end());

  std::vector<Letter> first(static_cast<std::size_t>(m)), last(static_cast<std::size_t>(m));
  for (Letter a = 0; a < m; ++a) {
    first[static_cast<std::size_t>(a)] = sigma.image(a).front();
    last[static_cast<std::size_t>(a)] = sigma.image(a).back();
  }
  // first_k[a]: first letter of sigma^k(a).
  std::vector<Letter> first_k(static_cast<std::size_t>(m)), last_k(static_cast<std::size_t>(m));
  for (Letter a = 0; a < m; ++a) first_k[static_cast<std::size_t>(a)] = last_k[static_cast<std::size_t>(a)] = a;

  long bound = m;
  for (int f = 2; f <= m && bound < 1'000'000; ++f) bound *= f;
  for (long k = 1; k <= bound; ++k) {
    for (Letter a = 0; a < m; ++a) {
      first_k[static_cast<std::size_t>(a)] = first[static_cast<std::size_t>(first_k[static_cast<std::size_t>(a)])];
      last_k[static_cast<std::size_t>(a)] = last[static_cast<std::size_t>(last_k[static_cast<std::size_t>(a)])];
    }
    for (Letter left = 0; left < m; ++left) {
      if (last_k[static_cast<std::size_t>(left)] != left) continue;
      for (Letter right = 0; right < m; ++right) {
        if (first_k[static_cast<std::size_t>(right)] != right) continue;
        if (legal.count({left, right})) return {static_cast<int>(k), left, right};
      }
    }
  }
  throw Error(ErrorCode::no_seed_found, "no legal periodic seed pair up to k = " + std::to_string(bound));
}

namespace {

void enumerate_matchings(std::vector<Letter>& partner, int m, const Substitution& sigma,
                         std::vector<std::vector<Letter>>& out) {
  auto it = std::find(partner.begin(), partner.end(), -1);
  if (it == partner.end()) {
    for (Letter x = 0; x < m; ++x) {
      const Word& lhs = sigma.image(partner[static_cast<std::size_t>(x)]);
      const Word& rhs = sigma.image(x);
      if (lhs.size() != rhs.size()) return;
      for (std::size_t t = 0; t < lhs.size(); ++t)
        if (lhs[t] != partner[static_cast<std::size_t>(rhs[t])]) return;
    }
    out.push_back(partner);
    return;
  }
  const Letter a = static_cast<Letter>(it - partner.begin());
  for (Letter b = a + 1; b < m; ++b) {
    if (partner[static_cast<std::size_t>(b)] != -1) continue;
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
    enumerate_matchings(partner, m, sigma, out);
    partner[static_cast<std::size_t>(a)] = -1;
    partner[static_cast<std::size_t>(b)] = -1;
  }
}

}  // namespace

std::vector<std::vector<Letter>> commuting_involutions(const Substitution& sigma) {
  const int m = sigma.size();
  std::vector<std::vector<Letter>> out;
  if (m % 2 != 0 || m > 8) return out;
  std::vector<Letter> partner(static_cast<std::size_t>(m), -1);
  enumerate_matchings(partner, m, sigma, out);
  return out;
}

}  // namespace tilecoin
