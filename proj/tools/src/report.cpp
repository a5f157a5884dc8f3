#include "tilecoin/cli/report.hpp"

#include <chrono>
#include <sstream>

#include "tilecoin/version.hpp"

namespace tilecoin::cli {

namespace {

struct Effective {
  int Lmax;
  int window;
  int kmax;
  std::size_t node_cap;
  std::size_t pair_cap;
  int iter_cap;
  std::size_t return_words;
};

Effective effective(const SpecFile& spec, const AnalysisOptions& o) {
  return {o.Lmax.value_or(spec.bounds.L.value_or(kDefaultLmax)),
          o.window.value_or(spec.bounds.window.value_or(64)),
          o.kmax.value_or(spec.bounds.k.value_or(kDefaultKmax)),
          o.node_cap.value_or(kDefaultNodeCap),
          o.pair_cap.value_or(kDefaultPairCap),
          o.iter_cap,
          o.return_words};
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"status", "ERROR"}, {"error", {{"code", code}, {"message", message}}}};
}

Json pair_json(const SpecFile& spec, Letter i, Letter j) { return Json::array({spec.token(i), spec.token(j)}); }

Json involution_json(const SpecFile& spec, const std::vector<Letter>& tau) {
  Json j = Json::object();
  for (std::size_t a = 0; a < tau.size(); ++a) j[spec.token(static_cast<Letter>(a))] = spec.token(tau[a]);
  return j;
}

Json prefix_pairs_json(const SpecFile& spec, const std::vector<PairVerdict>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) {
    Json j{{"pair", pair_json(spec, p.i, p.j)}, {"status", to_string(p.verdict.status)}};
    if (p.verdict.witness) {
      j["L"] = p.verdict.witness->L;
      j["letter"] = spec.token(p.verdict.witness->color);
      j["position"] = p.verdict.witness->pos_i;
    } else if (p.verdict.involution) {
      j["involution"] = involution_json(spec, *p.verdict.involution);
    } else {
      j["bound"] = p.verdict.bound;
    }
    out.push_back(std::move(j));
  }
  return out;
}

Json geometric_witness_json(const SpecFile& spec, const CoincidenceWitness& w) {
  return Json{{"L", w.L}, {"color", spec.token(w.color)}, {"eta", to_json(*w.eta)}};
}

Json geometric_pairs_json(const SpecFile& spec, const std::vector<PairVerdict>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) {
    Json j{{"pair", pair_json(spec, p.i, p.j)}, {"status", to_string(p.verdict.status)}};
    if (p.verdict.witness)
      j["witness"] = geometric_witness_json(spec, *p.verdict.witness);
    else
      j["bound"] = p.verdict.bound;
    out.push_back(std::move(j));
  }
  return out;
}

Json group_json(const AbelianGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(d.get_str());
  return Json{{"group", g.to_string()}, {"invariant_factors", factors}, {"free_rank", g.free_rank}};
}

Json overlap_class_json(const SpecFile& spec, const OverlapClass& o) {
  return Json{{"i", spec.token(o.i)}, {"j", spec.token(o.j)}, {"x", to_json(o.x)}};
}

CoincidenceWitness witness_from_json(const SpecFile& spec, const NumberField& field, const nlohmann::json& j,
                                     std::vector<Letter> scope) {
  CoincidenceWitness w;
  w.L = j.at("L").get<int>();
  w.color = spec.letter(j.at("color").get<std::string>()).value();
  w.eta = field_elem_from_json(field, j.at("eta"));
  w.scope = std::move(scope);
  return w;
}

Letter letter_of(const SpecFile& spec, const nlohmann::json& j) {
  const auto a = spec.letter(j.get<std::string>());
  if (!a) throw Error(ErrorCode::parse_error, "unknown letter in report: " + j.dump());
  return *a;
}

bool replay_prefix_witness(const Substitution& s, Letter i, Letter j, int L, std::size_t pos) {
  WordIterator words(s);
  const Word& u = words.power(i, L);
  const Word& v = words.power(j, L);
  if (pos >= u.size() || pos >= v.size() || u[pos] != v[pos]) return false;
  return abelianization(Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos)), s.size()) ==
         abelianization(Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos)), s.size());
}

bool replay_involution(const Substitution& s, const std::vector<Letter>& tau, Letter i, Letter j) {
  const int m = s.size();
  if (static_cast<int>(tau.size()) != m || tau[static_cast<std::size_t>(i)] != j) return false;
  for (Letter a = 0; a < m; ++a) {
    const Letter t = tau[static_cast<std::size_t>(a)];
    if (t < 0 || t >= m || t == a || tau[static_cast<std::size_t>(t)] != a) return false;
    Word img = s.image(a);
    for (auto& x : img) x = tau[static_cast<std::size_t>(x)];
    if (img != s.image(t)) return false;
  }
  return true;
}

}  // namespace

Json to_json(const FieldElem& x) {
  Json a = Json::array();
  for (const auto& q : x.coords()) a.push_back(rational_to_string(q));
  return a;
}

FieldElem field_elem_from_json(const NumberField& field, const nlohmann::json& j) {
  std::vector<Rational> coords;
  for (const auto& e : j) coords.push_back(rational_from_string(e.get<std::string>()));
  return field.from_coords(std::move(coords));
}

Json to_json(const ZModule& m) {
  Json basis = Json::array();
  for (const auto& row : m.basis()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    basis.push_back(std::move(r));
  }
  return Json{{"denom", m.denom().get_str()}, {"rank", m.rank()}, {"basis", basis}};
}

Json run_analysis(const SpecFile& spec, const AnalysisOptions& opts) {
  const Effective p = effective(spec, opts);
  Json report;
  report["schema"] = 1;
  report["tool"] = "tilecoin";
  report["version"] = std::string(kVersion);
  report["input"] = {{"name", spec.name}, {"text", spec.text}};
  Json schedule = Json::array();
  for (int w : kDefaultHeightSchedule) schedule.push_back(w);
  report["parameters"] = {{"Lmax", p.Lmax},         {"window", p.window},
                          {"kmax", p.kmax},         {"node_cap", p.node_cap},
                          {"pair_cap", p.pair_cap}, {"iter_cap", p.iter_cap},
                          {"return_words", p.return_words}, {"height_schedule", schedule}};
  report["letters"] = spec.letters;

  Json timing = Json::object();
  Json checks = Json::object();
  auto run = [&](const std::string& key, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      checks[key] = fn();
    } catch (const Error& e) {
      checks[key] = error_json(std::string(to_string(e.code())), e.what());
    } catch (const std::exception& e) {
      checks[key] = error_json("Internal", e.what());
    }
    timing[key] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  const Substitution sigma = spec.substitution();
  const IntMatrix s = substitution_matrix(sigma);
  Json facts;
  {
    Json rows = Json::array();
    for (int r = 0; r < s.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < s.cols(); ++c) row.push_back(s(r, c));
      rows.push_back(std::move(row));
    }
    facts["matrix"] = rows;
  }
  facts["primitive"] = is_primitive(s);
  const IntPoly cp = char_poly(s);
  facts["char_poly"] = cp.to_string();

  std::optional<SuspensionSystem> sys;
  RefPoints c;
  try {
    sys = SuspensionSystem::build(sigma);
    const NumberField& f = sys->field();
    facts["minpoly"] = f.minpoly().to_string();
    const RatInterval bi = f.beta_interval();
    facts["beta_interval"] = {rational_to_string(bi.lo), rational_to_string(bi.hi)};
    facts["irreducible"] = is_irreducible(cp);
    facts["pisot"] = is_pisot(f);
    Json lengths = Json::array();
    for (const auto& l : sys->lengths()) lengths.push_back(to_json(l));
    facts["lengths"] = lengths;
    const TileMap g = spec.tile_map();
    Json tm = Json::array();
    for (auto k : g.choice) tm.push_back(k + 1);
    facts["tile_map"] = tm;
    c = control_points(*sys, g);
    Json cj = Json::array();
    for (const auto& x : c) cj.push_back(to_json(x));
    facts["control_points"] = cj;
    facts["admissible"] = is_admissible(*sys, c);
    const auto& seed = sys->seed();
    facts["fixed_point_seed"] = {{"period", seed.period}, {"left", spec.token(seed.left)}, {"right", spec.token(seed.right)}};
  } catch (const Error& e) {
    facts["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    sys.reset();
  }
  report["facts"] = facts;

  auto need_sys = [&]() -> const SuspensionSystem& {
    if (!sys) throw Error(ErrorCode::invalid_substitution, "suspension system unavailable");
    return *sys;
  };

  run("prefix_strong", [&] {
    const auto pairs = prefix_strong(sigma, p.Lmax);
    return Json{{"status", to_string(combine(pairs))}, {"pairs", prefix_pairs_json(spec, pairs)}};
  });
  run("suffix_strong", [&] {
    const auto pairs = prefix_strong(sigma, p.Lmax, true);
    return Json{{"status", to_string(combine(pairs))}, {"pairs", prefix_pairs_json(spec, pairs)}};
  });
  run("geometric_strong", [&] {
    const auto pairs = geometric_strong(need_sys(), c, p.Lmax);
    return Json{{"status", to_string(combine(pairs))}, {"pairs", geometric_pairs_json(spec, pairs)}};
  });
  run("simultaneous", [&] {
    const auto v = simultaneous(need_sys(), c, p.Lmax);
    Json j{{"status", to_string(v.status)}, {"bound", v.bound}};
    if (v.witness) j["witness"] = geometric_witness_json(spec, *v.witness);
    return j;
  });
  run("prefix_simultaneous", [&] {
    const auto v = prefix_simultaneous(sigma, p.Lmax);
    Json j{{"status", to_string(v.status)}, {"bound", v.bound}};
    if (v.witness) {
      WordIterator words(sigma);
      const Word& w = words.power(0, v.witness->L);
      j["witness"] = {{"L", v.witness->L},
                      {"M", v.witness->prefix_length},
                      {"letter", spec.token(v.witness->color)},
                      {"prefix", spec.word_string(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(
                                                                            v.witness->prefix_length)))}};
    }
    return j;
  });
  run("height_group", [&] {
    const auto h = height_group(need_sys(), c);
    Json j{{"status", h.stable ? "STABLE" : "UNSTABLE"}};
    j.update(group_json(h.group));
    j["window"] = h.window;
    j["sup"] = to_json(h.sup);
    j["sub"] = to_json(h.sub);
    return j;
  });
  run("lambda_diff_in_G", [&] {
    const auto g = lambda_diff_in_G(need_sys(), c, p.kmax, p.window);
    Json j{{"status", to_string(g.status)}, {"kmax", g.kmax}, {"window", g.window}};
    if (g.status == Status::holds) {
      j["k"] = g.k;
      j["color"] = spec.token(g.color);
    }
    return j;
  });
  Status overlap_status = Status::unknown, balanced_status = Status::unknown;
  run("overlap_coincidence", [&] {
    const auto r = overlap_coincidence(need_sys(), c, p.window, p.node_cap);
    overlap_status = r.status;
    Json j{{"status", to_string(r.status)},
           {"window", r.window_tile_lengths},
           {"window_interval", {rational_to_string(r.window.lo), rational_to_string(r.window.hi)}},
           {"initial_classes", r.initial_count},
           {"nodes", r.graph.nodes.size()},
           {"node_cap", r.node_cap}};
    if (r.status == Status::holds) j["max_steps"] = r.max_steps;
    if (r.status == Status::fails) {
      Json cert = Json::array();
      for (const auto& o : r.certificate) cert.push_back(overlap_class_json(spec, o));
      j["certificate"] = cert;
    }
    return j;
  });
  run("balanced_pairs", [&] {
    const auto r = balanced_pairs(sigma, p.pair_cap, p.iter_cap, p.return_words);
    balanced_status = r.status;
    Json rw = Json::array();
    for (const auto& w : r.return_words) rw.push_back(spec.word_string(w));
    Json j{{"status", to_string(r.status)}, {"pisot", r.pisot},     {"advisory", !r.pisot},
           {"return_words", rw},            {"seeds", r.seeds.size()}, {"pairs", r.pair_count},
           {"iterations", r.iterations},    {"pair_cap", r.pair_cap}, {"iter_cap", r.iter_cap}};
    if (r.status == Status::fails) {
      Json cert = Json::array();
      for (const auto& bp : r.certificate) cert.push_back({spec.word_string(bp.u), spec.word_string(bp.v)});
      j["certificate"] = cert;
    }
    return j;
  });
  run("spectral", [&] {
    const auto v = spectral_verdict(overlap_status, balanced_status);
    Json j{{"status", to_string(v.status)}};
    j["agreement"] = v.agreement ? Json(*v.agreement) : Json(nullptr);
    if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
    return j;
  });
  report["checks"] = checks;

  if (opts.verify) report["verification"] = verify_report(nlohmann::json::parse(report.dump()));
  if (opts.timing) report["timing_ms"] = timing;
  return report;
}

bool all_decided(const Json& report) {
  for (const auto& [key, check] : report.at("checks").items()) {
    const auto status = check.at("status").get<std::string>();
    if (status == "UNKNOWN" || status == "ERROR" || status == "UNSTABLE") return false;
  }
  return true;
}

Json verify_report(const nlohmann::json& report) {
  const SpecFile spec = parse_spec(report.at("input").at("text").get<std::string>(),
                                   report.at("input").at("name").get<std::string>());
  const auto& params = report.at("parameters");
  const auto& checks = report.at("checks");
  const Substitution sigma = spec.substitution();
  const SuspensionSystem sys = SuspensionSystem::build(sigma);
  const RefPoints c = control_points(sys, spec.tile_map());
  const Window window = default_window(sys, params.at("window").get<int>());

  Json failures = Json::array();
  int replayed = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++replayed;
    if (!ok) failures.push_back(what);
  };

  for (const char* key : {"prefix_strong", "suffix_strong"}) {
    if (!checks.contains(key) || !checks[key].contains("pairs")) continue;
    const Substitution s = std::string(key) == "suffix_strong" ? sigma.reversed() : sigma;
    for (const auto& pj : checks[key]["pairs"]) {
      const Letter i = letter_of(spec, pj["pair"][0]), j = letter_of(spec, pj["pair"][1]);
      const std::string label = std::string(key) + " " + pj["pair"].dump();
      if (pj.contains("L") && pj["L"].get<int>() > 0) {
        check(replay_prefix_witness(s, i, j, pj["L"].get<int>(), pj["position"].get<std::size_t>()), label);
      } else if (pj.contains("involution")) {
        std::vector<Letter> tau(static_cast<std::size_t>(sigma.size()));
        for (const auto& [from, to] : pj["involution"].items())
          tau[static_cast<std::size_t>(spec.letter(from).value())] = letter_of(spec, to);
        check(replay_involution(s, tau, i, j), label);
      }
    }
  }
  if (checks.contains("geometric_strong") && checks["geometric_strong"].contains("pairs")) {
    for (const auto& pj : checks["geometric_strong"]["pairs"]) {
      if (!pj.contains("witness")) continue;
      const Letter i = letter_of(spec, pj["pair"][0]), j = letter_of(spec, pj["pair"][1]);
      check(verify_witness(sys, c, witness_from_json(spec, sys.field(), pj["witness"], {i, j}), window),
            "geometric_strong " + pj["pair"].dump());
    }
  }
  if (checks.contains("simultaneous") && checks["simultaneous"].contains("witness")) {
    std::vector<Letter> all;
    for (Letter a = 0; a < sys.size(); ++a) all.push_back(a);
    check(verify_witness(sys, c, witness_from_json(spec, sys.field(), checks["simultaneous"]["witness"], all), window),
          "simultaneous");
  }
  if (checks.contains("prefix_simultaneous") && checks["prefix_simultaneous"].contains("witness")) {
    const auto& w = checks["prefix_simultaneous"]["witness"];
    const int L = w["L"].get<int>();
    const std::size_t M = w["M"].get<std::size_t>();
    const Letter last = letter_of(spec, w["letter"]);
    WordIterator words(sigma);
    bool ok = true;
    std::optional<AbVector> ab;
    for (Letter a = 0; a < sigma.size() && ok; ++a) {
      const Word& u = words.power(a, L);
      if (u.size() < M || u[M - 1] != last) {
        ok = false;
        break;
      }
      const AbVector v = abelianization(Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(M)), sigma.size());
      if (ab && *ab != v) ok = false;
      ab = v;
    }
    check(ok, "prefix_simultaneous");
  }
  if (checks.contains("overlap_coincidence") && checks["overlap_coincidence"].contains("certificate")) {
    std::vector<OverlapClass> set;
    for (const auto& o : checks["overlap_coincidence"]["certificate"])
      set.push_back({letter_of(spec, o["i"]), letter_of(spec, o["j"]), field_elem_from_json(sys.field(), o["x"])});
    check(verify_closed_set(sys, set), "overlap_coincidence certificate");
  }
  if (checks.contains("balanced_pairs") && checks["balanced_pairs"].contains("certificate")) {
    std::vector<BalancedPair> set;
    for (const auto& bp : checks["balanced_pairs"]["certificate"])
      set.push_back({spec.parse_word(bp[0].get<std::string>()), spec.parse_word(bp[1].get<std::string>())});
    check(verify_closed_pairs(sigma, set), "balanced_pairs certificate");
  }
  return Json{{"ok", failures.empty()}, {"replayed", replayed}, {"failures", failures}};
}

std::string patch_dump(const SpecFile& spec, int n, const std::optional<std::string>& letter) {
  const SuspensionSystem sys = SuspensionSystem::build(spec.substitution());
  PatchSeed seed = PatchSeed::pair(sys.seed().left, sys.seed().right);
  if (letter) {
    const auto a = spec.letter(*letter);
    if (!a) throw Error(ErrorCode::not_found, "unknown letter '" + *letter + "'");
    seed = PatchSeed::one_sided(*a);
  }
  std::ostringstream os;
  for (const auto& t : generate_patch(sys, seed, n).tiles) os << spec.token(t.color) << ' ' << t.position.to_string() << '\n';
  return os.str();
}

}  // namespace tilecoin::cli
