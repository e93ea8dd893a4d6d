#include "mtw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "mtw/formulas.hpp"
#include "mtw/generate.hpp"

namespace mtw {

void validate(const SweepConfig& cfg) {
  if (cfg.samples < 1) throw Error(Errc::InvalidInput, "samples must be at least 1");
  if (cfg.max_exponent < 1 || cfg.max_crossings < 1 || cfg.max_twist_curves < 1 || cfg.max_map_length < 0 ||
      cfg.workers < 1)
    throw Error(Errc::InvalidInput, "sweep bounds must be positive");
  if (cfg.configs.empty()) throw Error(Errc::InvalidInput, "no configurations to sample from");
  for (const auto& c : cfg.checks)
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
      throw Error(Errc::InvalidInput, "unknown check '" + c + "'");
  if (cfg.only && (*cfg.only < 0 || *cfg.only >= cfg.samples))
    throw Error(Errc::InvalidInput, "instance index out of range");
}

std::uint64_t instance_seed(std::uint64_t seed, int index) {
  return splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(index));
}

namespace {

struct Loaded {
  CorpusConfig config;
  Drawing drawing;
};

std::shared_ptr<const Loaded> loaded(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Loaded>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = corpus_dir() + "|" + name;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  CorpusConfig c = load_config(name);
  Drawing d = build_drawing(c);
  auto p = std::make_shared<const Loaded>(Loaded{std::move(c), std::move(d)});
  cache[key] = p;
  return p;
}

bool wants(const SweepConfig& cfg, const std::string& check) {
  return std::find(cfg.checks.begin(), cfg.checks.end(), check) != cfg.checks.end();
}

json word_json(const std::vector<MultiTwist>& w) {
  json out = json::array();
  for (const auto& t : w) out.push_back(t);
  return out;
}

CheckResult verdict(bool ok, std::string detail) {
  return {ok ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

// Twist curves, test curves and measurements shared by the formula checks.
void formula_checks(const SweepConfig& cfg, const Loaded& L, std::mt19937_64& rng, InstanceResult& res) {
  const CorpusConfig& c = L.config;
  // fresh drawing, so the names below cannot collide with corpus curves
  Drawing d(L.drawing.schema_ptr());
  json& sum = res.summary;

  std::vector<std::string> family;
  if (!c.pants.empty()) family = c.pants[std::uniform_int_distribution<std::size_t>(0, c.pants.size() - 1)(rng)];
  std::shuffle(family.begin(), family.end(), rng);
  int k = std::uniform_int_distribution<int>(
      1, std::max<int>(1, std::min<int>(cfg.max_twist_curves, static_cast<int>(family.size()))))(rng);
  family.resize(std::min<std::size_t>(family.size(), static_cast<std::size_t>(k)));
  auto h = random_word(rng, c.chain, std::uniform_int_distribution<int>(0, cfg.max_map_length)(rng));

  std::vector<TwistComponent> comps;
  std::vector<int> cids;
  for (std::size_t j = 0; j < family.size(); ++j) {
    EmbeddedCurve img = apply_sequence(L.drawing, h, L.drawing.find(family[j]));
    std::string name = "c" + std::to_string(j + 1);
    cids.push_back(d.add_curve(name, img.word));
    comps.push_back({CurveRef(name), random_exponent(rng, cfg.max_exponent)});
  }
  MultiTwist C(comps);

  WalkOptions opt;
  opt.max_length = cfg.max_crossings;
  auto wa = random_curve(d.schema_ptr(), rng, opt, "a");
  auto wb = random_curve(d.schema_ptr(), rng, opt, "b");
  res.rejected_draws = wa.rejected + wb.rejected;
  sum["family"] = family;
  sum["map"] = word_json(h);
  sum["multitwist"] = C;
  if (!wa.curve || !wb.curve) {
    for (const auto& ch : {"hidden", "ivanov", "positive", "homology"})
      if (wants(cfg, ch)) res.checks[ch] = {Outcome::Fail, "no simple essential curve drawn within the cap"};
    return;
  }
  int a = d.add_curve("a", wa.curve->word);
  int b = d.add_curve("b", wb.curve->word);
  sum["a"] = curve_to_json(d.schema(), *wa.curve);
  sum["b"] = curve_to_json(d.schema(), *wb.curve);

  std::vector<long> i_ac, i_bc;
  for (int id : cids) {
    i_ac.push_back(geometric_intersection(d, a, id));
    i_bc.push_back(geometric_intersection(d, b, id));
  }
  EmbeddedCurve ta = apply_sequence(d, {C}, a);
  EmbeddedCurve tb = apply_sequence(d, {C}, b);
  int ta_id = d.add_curve("Ta", ta.word);
  int tb_id = d.add_curve("Tb", tb.word);
  long i_ab = geometric_intersection(d, a, b);
  long i_a_ta = geometric_intersection(d, a, ta_id);
  long i_a_tb = geometric_intersection(d, a, tb_id);
  sum["i_ac"] = i_ac;
  sum["i_bc"] = i_bc;
  sum["i_ab"] = i_ab;
  sum["i_a_ta"] = i_a_ta;
  sum["i_a_tb"] = i_a_tb;

  if (wants(cfg, "hidden")) {
    CrossingProfile prof = crossing_profile(d, a, C);
    std::vector<CurveTerm> terms;
    for (std::size_t j = 0; j < cids.size(); ++j) terms.push_back({std::labs(C.components()[j].exponent), i_ac[j]});
    long predicted = hidden_formula(prof, terms);
    sum["x"] = x_value(prof);
    sum["hidden"] = predicted;
    res.checks["hidden"] = verdict(predicted == i_a_ta, "formula " + std::to_string(predicted) + ", measured " +
                                                            std::to_string(i_a_ta));
  }
  if (wants(cfg, "ivanov")) {
    std::vector<IvanovTerm> terms;
    for (std::size_t j = 0; j < cids.size(); ++j) terms.push_back({C.components()[j].exponent, i_ac[j], i_bc[j]});
    auto r = ivanov_bound_check(i_ab, i_a_tb, terms);
    res.checks["ivanov"] = verdict(r.holds, "slack " + std::to_string(r.slack));
  }
  if (wants(cfg, "positive")) {
    bool same = std::all_of(C.components().begin(), C.components().end(),
                            [&](const TwistComponent& x) { return (x.exponent > 0) == (C.components()[0].exponent > 0); });
    if (!same) {
      res.checks["positive"] = {Outcome::Skip, "mixed signs"};
    } else {
      std::vector<PositiveTerm> terms;
      for (std::size_t j = 0; j < cids.size(); ++j)
        terms.push_back({std::labs(C.components()[j].exponent), i_ac[j], i_bc[j]});
      auto r = positive_bound_check(i_ab, i_a_tb, terms);
      res.checks["positive"] = verdict(r.holds, "slack " + std::to_string(r.slack));
    }
  }
  if (wants(cfg, "homology")) {
    if (!homology_available(d.schema())) {
      res.checks["homology"] = {Outcome::Skip, "schema has no edge basis"};
    } else {
      std::vector<int> ids = cids;
      ids.push_back(a);
      ids.push_back(b);
      try {
        HomologyData hd = classes_and_pairing(d, ids);
        HomologyClass va = hd.classes.at("a"), vb = hd.classes.at("b");
        HomologyClass predicted = twist_homology(C, va, hd.classes);
        HomologyClass measured = class_of(d, ta_id, hd);
        long pair_pred = algebraic_pair_after_twist(C, va, vb, hd.classes);
        long pair_meas = algebraic_intersection(d, ta_id, b);
        bool ok = predicted == measured && pair_pred == pair_meas && pairing(predicted, vb) == pair_pred;
        res.checks["homology"] = verdict(ok, "pairing predicted " + std::to_string(pair_pred) + ", drawn " +
                                                 std::to_string(pair_meas));
      } catch (const Error& e) {
        res.checks["homology"] = {Outcome::Fail, e.what()};
      }
    }
  }
}

void braid_check(const SweepConfig& cfg, const Loaded& L, std::mt19937_64& rng, InstanceResult& res) {
  const CorpusConfig& c = L.config;
  if (!c.test_set || c.chain.size() < 2) {
    res.checks["braid-agreement"] = {Outcome::Skip, "configuration has no test set or chain"};
    return;
  }
  Drawing d = L.drawing;
  BraidInstance inst = random_braid_instance(c, rng);
  auto h = random_word(rng, c.chain, std::uniform_int_distribution<int>(0, cfg.max_map_length)(rng));
  // move every instance curve by h
  std::map<std::string, std::string> renamed;
  for (const auto* t : {&inst.a, &inst.b})
    for (const auto& x : t->components()) {
      if (renamed.count(x.curve.id)) continue;
      EmbeddedCurve img = apply_sequence(d, h, d.find(x.curve.id));
      renamed[x.curve.id] = "h." + x.curve.id;
      d.add_curve(renamed[x.curve.id], img.word);
    }
  auto move = [&](const MultiTwist& t) {
    std::vector<TwistComponent> v;
    for (const auto& x : t.components()) v.push_back({CurveRef(renamed[x.curve.id]), x.exponent});
    return MultiTwist(std::move(v));
  };
  MultiTwist A = move(inst.a), B = move(inst.b);
  Agreement ag = certify_with_oracle(d, A, B, *c.test_set);
  res.summary["braid"] = json{{"label", inst.label}, {"a", A}, {"b", B}, {"map", word_json(h)},
                              {"verdict", ag.verdict.braided}, {"oracle", ag.oracle}};
  res.checks["braid-agreement"] =
      verdict(ag.agree, std::string("decision ") + (ag.verdict.braided ? "braided" : "not braided") + ", oracle " +
                            (ag.oracle ? "equal" : "different"));
}

}  // namespace

InstanceResult run_instance(const SweepConfig& cfg, int index) {
  std::mt19937_64 rng(instance_seed(cfg.seed, index));
  InstanceResult res;
  res.index = index;
  res.config = cfg.configs[std::uniform_int_distribution<std::size_t>(0, cfg.configs.size() - 1)(rng)];
  res.summary = json::object();
  try {
    auto L = loaded(res.config);
    bool formulas = false;
    for (const auto& ch : {"hidden", "ivanov", "positive", "homology"}) formulas = formulas || wants(cfg, ch);
    if (formulas) formula_checks(cfg, *L, rng, res);
    if (wants(cfg, "braid-agreement")) braid_check(cfg, *L, rng, res);
  } catch (const Error& e) {
    for (const auto& ch : cfg.checks)
      if (!res.checks.count(ch)) res.checks[ch] = {Outcome::Fail, std::string("engine error: ") + e.what()};
  }
  return res;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  for (const auto& c : cfg.configs) loaded(c);  // corpus errors belong to the sweep
  SweepReport rep;
  rep.config = cfg;
  std::vector<int> indices;
  if (cfg.only) indices.push_back(*cfg.only);
  else
    for (int i = 0; i < cfg.samples; ++i) indices.push_back(i);
  rep.instances.resize(indices.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < indices.size();) rep.instances[k] = run_instance(cfg, indices[k]);
  };
  int n = std::min<int>(cfg.workers, static_cast<int>(indices.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rep;
}

namespace {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skip: return "skip";
  }
  return "?";
}

std::string token(const SweepConfig& cfg, int index) {
  return std::to_string(cfg.seed) + ":" + std::to_string(index);
}

}  // namespace

json report_json(const SweepReport& r) {
  const auto& cfg = r.config;
  json totals = json::object();
  for (const auto& ch : cfg.checks) totals[ch] = json{{"pass", 0}, {"fail", 0}, {"skip", 0}};
  json failures = json::array();
  long rejected = 0;
  for (const auto& inst : r.instances) {
    rejected += inst.rejected_draws;
    for (const auto& [ch, res] : inst.checks) {
      totals[ch][outcome_name(res.outcome)] = totals[ch][outcome_name(res.outcome)].get<long>() + 1;
      if (res.outcome == Outcome::Fail)
        failures.push_back(json{{"check", ch}, {"index", inst.index}, {"config", inst.config},
                                {"token", token(cfg, inst.index)}, {"detail", res.detail},
                                {"instance", inst.summary}});
    }
  }
  json config{{"samples", cfg.samples}, {"seed", cfg.seed}, {"max_exponent", cfg.max_exponent},
              {"max_crossings", cfg.max_crossings}, {"max_twist_curves", cfg.max_twist_curves},
              {"max_map_length", cfg.max_map_length}, {"configs", cfg.configs}, {"checks", cfg.checks}};
  if (cfg.only) config["only"] = *cfg.only;
  return json{{"report_version", kReportVersion}, {"kind", "sweep"}, {"config", config}, {"totals", totals},
              {"failures", failures}, {"rejected_draws", rejected}};
}

std::string report_human(const SweepReport& r) {
  json j = report_json(r);
  std::ostringstream os;
  os << "sweep seed " << r.config.seed << ", " << r.instances.size() << " instances\n";
  os << "check              pass   fail   skip\n";
  for (const auto& [ch, t] : j["totals"].items()) {
    std::string name = ch;
    name.resize(18, ' ');
    os << name << " " << std::setw(5) << t["pass"].get<long>() << "  " << std::setw(5) << t["fail"].get<long>()
       << "  " << std::setw(5) << t["skip"].get<long>() << "\n";
  }
  os << "rejected draws: " << j["rejected_draws"].get<long>() << "\n";
  for (const auto& f : j["failures"])
    os << "FAIL " << f["check"].get<std::string>() << " token " << f["token"].get<std::string>() << " ("
       << f["config"].get<std::string>() << "): " << f["detail"].get<std::string>() << "\n";
  return os.str();
}

BraidInstance random_braid_instance(const CorpusConfig& c, std::mt19937_64& rng) {
  const auto& ch = c.chain;
  const int m = static_cast<int>(ch.size());
  std::bernoulli_distribution coin(0.5);
  const long eps = coin(rng) ? 1 : -1;
  std::vector<int> starts;
  for (int k = 0; k + 1 < m;) {
    if (coin(rng) || (starts.empty() && k + 3 >= m)) {
      starts.push_back(k);
      k += 3;
    } else {
      ++k;
    }
  }
  std::vector<TwistComponent> a, b;
  for (int k : starts) {
    a.push_back({CurveRef(ch[k]), eps});
    b.push_back({CurveRef(ch[k + 1]), eps});
  }
  // common curve away from every pair
  std::vector<int> free;
  for (int j = 0; j < m; ++j) {
    bool ok = std::none_of(starts.begin(), starts.end(), [&](int k) { return j >= k - 1 && j <= k + 2; });
    if (ok) free.push_back(j);
  }
  std::string label = std::to_string(starts.size()) + " pairs";
  std::optional<int> common;
  if (!free.empty() && coin(rng)) {
    common = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    long e = random_exponent(rng, 2);
    a.push_back({CurveRef(ch[*common]), e});
    b.push_back({CurveRef(ch[*common]), e});
    label += ", common";
  }
  if (coin(rng)) {
    int kind = std::uniform_int_distribution<int>(0, 4)(rng);
    std::size_t p = std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng);
    switch (kind) {
      case 0:
        b[p].exponent = -eps;
        label += ", opposite exponent";
        break;
      case 1:
        b[p].exponent = 2 * eps;
        label += ", double exponent";
        break;
      case 2:
        b.erase(b.begin() + static_cast<long>(p));
        label += ", dropped partner";
        break;
      case 3: {
        int k = starts[p];
        // two steps along the chain: disjoint from the A curve, and from
        // every other B curve unless the common curve sits right after it
        if (k + 2 < m && common != k + 3) {
          b[p].curve = CurveRef(ch[k + 2]);
          label += ", shifted partner";
        } else {
          b[p].exponent = -eps;
          label += ", opposite exponent";
        }
        break;
      }
      case 4:
        if (common) {
          for (auto& x : b)
            if (x.curve.id == ch[*common]) x.exponent = x.exponent > 0 ? x.exponent + 1 : x.exponent - 1;
          label += ", common exponent clash";
        } else {
          a[p].exponent = 2 * eps;
          b[p].exponent = 2 * eps;
          label += ", both doubled";
        }
        break;
    }
  }
  return {MultiTwist(std::move(a)), MultiTwist(std::move(b)), label};
}

Agreement certify_with_oracle(const Drawing& d, const MultiTwist& tA, const MultiTwist& tB,
                              const TestSet& test, bool diagnostics) {
  std::vector<int> ids;
  std::set<std::string> seen;
  for (const auto* t : {&tA, &tB})
    for (const auto& x : t->components())
      if (seen.insert(x.curve.id).second) ids.push_back(d.find(x.curve.id));
  IntersectionData data = intersection_data(d, ids);
  Agreement out;
  out.verdict = decide_braided(tA, tB, data);
  out.oracle = mapping_classes_equal(d, {tA, tB, tA}, {tB, tA, tB}, test);
  out.agree = out.verdict.braided == out.oracle;
  if (diagnostics && out.verdict.braided) {
    std::vector<std::string> names;
    bool mapped = true;
    for (const auto& p : out.verdict.decomposition.pairs) {
      CrossingProfile prof = crossing_profile(d, d.find(p.a.id), tB);
      out.types[p.a.id] = classify_curve(p.a, p.b, tB, data, prof);
      names.push_back(p.a.id);
      names.push_back(p.b.id);
      EmbeddedCurve img = apply_sequence(d, {tA, tB}, d.find(p.a.id));
      Drawing e(d.schema_ptr());
      int x = e.add_curve("img", img.word);
      int y = e.add_curve(p.b.id, d.curve(d.find(p.b.id)).word);
      mapped = mapped && isotopic(e, x, y, false);
    }
    out.orbits = orbit_sizes(d, {tA, tB, tA}, names, 8);
    out.pairs_mapped = mapped;
  }
  return out;
}

json agreement_to_json(const Agreement& a) {
  json j = verdict_to_json(a.verdict);
  j["oracle"] = a.oracle ? "equal" : "different";
  j["agree"] = a.agree;
  if (!a.types.empty()) {
    json t = json::object();
    for (const auto& [k, v] : a.types) t[k] = type_to_json(v);
    j["types"] = t;
  }
  if (!a.orbits.empty()) {
    json o = json::object();
    for (const auto& [k, v] : a.orbits) o[k] = v.over_cap ? json("over-cap") : json(v.size);
    j["orbits"] = o;
  }
  if (a.pairs_mapped) j["pairs_mapped"] = *a.pairs_mapped;
  return j;
}

}  // namespace mtw
