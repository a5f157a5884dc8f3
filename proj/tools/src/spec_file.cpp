#include "tilecoin/cli/spec_file.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tilecoin::cli {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(std::size_t line, const std::string& s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(line, "expected an integer, got '" + s + "'");
  return v;
}

struct PendingRule {
  std::size_t line;
  std::string head;
  std::vector<std::string> body;
};

struct PendingTile {
  std::size_t line;
  std::string head;
  int index;
};

}  // namespace

Substitution SpecFile::substitution() const { return Substitution(rules, name); }

std::optional<Letter> SpecFile::letter(std::string_view token) const {
  const auto it = std::find(letters.begin(), letters.end(), token);
  if (it == letters.end()) return std::nullopt;
  return static_cast<Letter>(it - letters.begin());
}

std::string SpecFile::word_string(const Word& w) const {
  const bool compact = std::all_of(letters.begin(), letters.end(), [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (!compact && t) out += ' ';
    out += token(w[t]);
  }
  return out;
}

Word SpecFile::parse_word(std::string_view text) const {
  const bool single_char = std::all_of(letters.begin(), letters.end(), [](const auto& s) { return s.size() == 1; });
  Word w;
  for (const auto& t : split_ws(text)) {
    if (auto a = letter(t)) {
      w.push_back(*a);
      continue;
    }
    if (!single_char) throw Error(ErrorCode::parse_error, "unknown letter '" + t + "'");
    for (char ch : t) {
      auto a = letter(std::string(1, ch));
      if (!a) throw Error(ErrorCode::parse_error, "unknown letter '" + std::string(1, ch) + "'");
      w.push_back(*a);
    }
  }
  return w;
}

SpecFile parse_spec(std::string_view text, std::string name) {
  SpecFile spec;
  spec.name = std::move(name);
  spec.text = std::string(text);
  bool declared = false;
  std::vector<PendingRule> rules;
  std::vector<PendingTile> tiles;

  std::size_t lineno = 0;
  std::istringstream in(spec.text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tok = split_ws(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "letters") {
      if (declared) fail(lineno, "duplicate letters declaration");
      if (!rules.empty()) fail(lineno, "letters must be declared before rules");
      if (tok.size() < 3) fail(lineno, "need at least two letters");
      for (std::size_t t = 1; t < tok.size(); ++t) {
        if (std::find(spec.letters.begin(), spec.letters.end(), tok[t]) != spec.letters.end())
          fail(lineno, "duplicate letter '" + tok[t] + "'");
        spec.letters.push_back(tok[t]);
      }
      declared = true;
    } else if (kw == "rule") {
      if (tok.size() < 4 || tok[2] != "=") fail(lineno, "expected 'rule <letter> = <word>'");
      if (declared && !spec.letter(tok[1])) fail(lineno, "unknown letter '" + tok[1] + "'");
      if (std::any_of(rules.begin(), rules.end(), [&](const auto& r) { return r.head == tok[1]; }))
        fail(lineno, "duplicate rule for '" + tok[1] + "'");
      rules.push_back({lineno, tok[1], {tok.begin() + 3, tok.end()}});
    } else if (kw == "tilemap") {
      if (tok.size() != 4 || tok[2] != "->") fail(lineno, "expected 'tilemap <letter> -> <index>'");
      if (std::any_of(tiles.begin(), tiles.end(), [&](const auto& t) { return t.head == tok[1]; }))
        fail(lineno, "duplicate tilemap entry for '" + tok[1] + "'");
      tiles.push_back({lineno, tok[1], parse_int(lineno, tok[3])});
    } else if (kw == "bound") {
      if (tok.size() != 3) fail(lineno, "expected 'bound L|window|k <int>'");
      const int v = parse_int(lineno, tok[2]);
      if (v < 0) fail(lineno, "bound must be nonnegative");
      if (tok[1] == "L")
        spec.bounds.L = v;
      else if (tok[1] == "window")
        spec.bounds.window = v;
      else if (tok[1] == "k")
        spec.bounds.k = v;
      else
        fail(lineno, "unknown bound '" + tok[1] + "'");
    } else {
      fail(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (!declared)
    for (const auto& r : rules) spec.letters.push_back(r.head);
  if (spec.letters.size() < 2) fail(lineno, "need at least two letters");
  spec.rules.assign(spec.letters.size(), Word{});
  for (const auto& r : rules) {
    std::string body;
    for (const auto& t : r.body) body += t + " ";
    try {
      spec.rules[static_cast<std::size_t>(*spec.letter(r.head))] = spec.parse_word(body);
    } catch (const Error& e) {
      fail(r.line, e.what());
    }
  }
  for (std::size_t a = 0; a < spec.letters.size(); ++a)
    if (spec.rules[a].empty()) fail(lineno, "no rule for '" + spec.letters[a] + "'");

  if (!tiles.empty()) {
    TileMap g = TileMap::leftmost(static_cast<int>(spec.letters.size()));
    for (const auto& t : tiles) {
      const auto a = spec.letter(t.head);
      if (!a) fail(t.line, "unknown letter '" + t.head + "'");
      const auto& rule = spec.rules[static_cast<std::size_t>(*a)];
      if (t.index < 1 || static_cast<std::size_t>(t.index) > rule.size())
        fail(t.line, "tilemap index " + std::to_string(t.index) + " outside rule of length " +
                         std::to_string(rule.size()));
      g.choice[static_cast<std::size_t>(*a)] = static_cast<std::size_t>(t.index - 1);
    }
    spec.tilemap = std::move(g);
  }
  return spec;
}

}  // namespace tilecoin::cli
