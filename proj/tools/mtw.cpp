// mtw: command line front end.
// Exit codes: 0 braided / consistent, 1 not braided / failed check,
// 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "mtw/braid.hpp"
#include "mtw/corpus.hpp"
#include "mtw/engine.hpp"
#include "mtw/formulas.hpp"
#include "mtw/io.hpp"
#include "mtw/sweep.hpp"

using namespace mtw;

namespace {

struct Global {
  std::string format = "human";
  std::string schema;
};

bool as_json(const Global& g) { return g.format == "json"; }

void emit(const Global& g, const json& j, const std::string& human) {
  if (as_json(g)) std::cout << dump(j);
  else std::cout << human;
}

// A named multitwist of the configuration, inline JSON, or "c:n,d:m".
MultiTwist parse_twist(const std::string& text, const CorpusConfig* c) {
  if (c) {
    auto it = c->multitwists.find(text);
    if (it != c->multitwists.end()) return it->second;
  }
  if (!text.empty() && (text[0] == '{' || text[0] == '[')) return json::parse(text).get<MultiTwist>();
  std::vector<TwistComponent> comps;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto colon = item.find(':');
    long n = 1;
    std::string id = item;
    if (colon != std::string::npos) {
      id = item.substr(0, colon);
      try {
        n = std::stol(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw Error(Errc::InvalidInput, "bad exponent in '" + item + "'");
      }
    }
    comps.push_back({CurveRef(id), n});
  }
  return MultiTwist(std::move(comps));
}

std::vector<int> curve_ids(const Drawing& d, std::initializer_list<const MultiTwist*> ts) {
  std::vector<int> ids;
  std::set<std::string> seen;
  for (const auto* t : ts)
    for (const auto& x : t->components())
      if (seen.insert(x.curve.id).second) ids.push_back(d.find(x.curve.id));
  return ids;
}

std::string twist_text(const MultiTwist& t) {
  if (t.empty()) return "1";
  std::string s;
  for (const auto& c : t.components()) {
    if (!s.empty()) s += " ";
    s += c.curve.id + "^" + std::to_string(c.exponent);
  }
  return s;
}

std::string verdict_text(const BraidVerdict& v) {
  std::ostringstream os;
  if (v.braided) {
    os << "braided: " << v.decomposition.pairs.size() << " pairs, common " << twist_text(v.decomposition.common)
       << "\n";
    for (const auto& p : v.decomposition.pairs) os << "  " << p.a.id << " <-> " << p.b.id << "  n = " << p.n << "\n";
  } else {
    os << "not braided: " << v.detail << "\n";
    os << "  residue A: " << twist_text(v.residue_a) << "\n";
    os << "  residue B: " << twist_text(v.residue_b) << "\n";
  }
  return os.str();
}

struct BraidRequest {
  MultiTwist a, b;
  IntersectionData data;
  std::optional<CorpusConfig> config;
  std::optional<Drawing> drawing;
};

// From --schema with --a/--b, or from a request file.
BraidRequest braid_request(const Global& g, const std::string& file, const std::string& ta,
                           const std::string& tb) {
  BraidRequest r;
  json req;
  if (!file.empty()) {
    req = read_json_file(file);
    r.a = req.at("tA").get<MultiTwist>();
    r.b = req.at("tB").get<MultiTwist>();
    if (req.contains("embedding")) {
      const auto& e = req.at("embedding");
      r.config = e.is_string() ? load_config(e.get<std::string>()) : parse_config(e);
    }
  }
  if (!g.schema.empty()) r.config = load_config(g.schema);
  if (file.empty()) {
    if (!r.config || ta.empty() || tb.empty())
      throw Error(Errc::InvalidInput, "give a request file, or --schema with --a and --b");
    r.a = parse_twist(ta, &*r.config);
    r.b = parse_twist(tb, &*r.config);
  }
  if (r.config) {
    r.drawing = build_drawing(*r.config);
    r.data = intersection_data(*r.drawing, curve_ids(*r.drawing, {&r.a, &r.b}));
  }
  if (req.contains("intersections")) {
    IntersectionData given = req.at("intersections").get<IntersectionData>();
    if (r.config) {
      for (const auto& [k, v] : given.geometric_table())
        if (r.data.geometric(CurveRef(k.first), CurveRef(k.second)) != v)
          throw Error(Errc::InvalidInput, "given i(" + k.first + "," + k.second + ") disagrees with the embedding");
    } else {
      r.data = given;
    }
  } else if (!r.config) {
    throw Error(Errc::InvalidInput, "request needs intersections or an embedding");
  }
  if (auto bad = r.data.check_invariants()) throw Error(Errc::InvalidInput, *bad);
  return r;
}

int cmd_intersect(const Global& g, const std::string& x, const std::string& y) {
  CorpusConfig c = load_config(g.schema);
  Drawing d = build_drawing(c);
  int a = d.find(x), b = d.find(y);
  int gi = geometric_intersection(d, a, b);
  int al = algebraic_intersection(d, a, b);
  bool iso = isotopic(d, a, b, false);
  json j{{"a", x}, {"b", y}, {"geometric", gi}, {"algebraic", al}, {"isotopic", iso}};
  std::ostringstream os;
  os << "i(" << x << ", " << y << ") = " << gi << "\nalgebraic = " << al << "\nisotopic: " << (iso ? "yes" : "no")
     << "\n";
  emit(g, j, os.str());
  return 0;
}

int cmd_twist(const Global& g, const std::string& by, const std::string& curve, const std::string& compare) {
  CorpusConfig c = load_config(g.schema);
  Drawing d = build_drawing(c);
  MultiTwist t = parse_twist(by, &c);
  EmbeddedCurve img = apply_sequence(d, {t}, d.find(curve));
  img.name = curve + "'";
  json j{{"image", curve_to_json(d.schema(), img)}, {"twist", t}};
  std::ostringstream os;
  os << "image of " << curve << " under " << twist_text(t) << ": " << img.word.size() << " edge crossings\n";
  if (homology_available(d.schema())) {
    Drawing e(d.schema_ptr());
    auto v = e.edge_vector(e.add_curve(img.name, img.word));
    j["edge_vector"] = v;
    os << "edge vector:";
    for (long x : v) os << " " << x;
    os << "\n";
  }
  if (!compare.empty()) {
    int id = d.add_curve(img.name, img.word);
    bool iso = isotopic(d, id, d.find(compare), false);
    j["isotopic_to"] = json{{"curve", compare}, {"value", iso}};
    os << "isotopic to " << compare << ": " << (iso ? "yes" : "no") << "\n";
    emit(g, j, os.str());
    return iso ? 0 : 1;
  }
  emit(g, j, os.str());
  return 0;
}

int cmd_xfunction(const Global& g, const std::string& profile_file, const std::string& base, const std::string& by) {
  if (!profile_file.empty()) {
    CrossingProfile p = read_json_file(profile_file).get<CrossingProfile>();
    if (auto bad = check_profile(p)) throw Error(Errc::InconsistentProfile, *bad);
    long x = x_value(p);
    emit(g, json{{"profile", p}, {"x", x}}, "X = " + std::to_string(x) + "\n");
    return 0;
  }
  CorpusConfig c = load_config(g.schema);
  Drawing d = build_drawing(c);
  MultiTwist t = parse_twist(by, &c);
  int a = d.find(base);
  CrossingProfile p = crossing_profile(d, a, t);
  std::vector<CurveTerm> terms;
  for (const auto& comp : t.components())
    terms.push_back({std::labs(comp.exponent), geometric_intersection(d, a, d.find(comp.curve.id))});
  long predicted = hidden_formula(p, terms);
  EmbeddedCurve img = apply_sequence(d, {t}, a);
  long measured = geometric_intersection(d, a, d.add_curve(base + "'", img.word));
  json j{{"profile", p}, {"x", x_value(p)}, {"hidden_formula", predicted}, {"measured", measured}};
  std::ostringstream os;
  os << "crossings along " << base << ":";
  for (const auto& s : p.sequence) os << " " << s.id;
  os << "\narc flags:";
  for (int f : p.arc_flags) os << " " << f;
  os << "\nX = " << x_value(p) << "\nhidden formula = " << predicted << "\nmeasured i(" << base << ", T " << base
     << ") = " << measured << "\n";
  emit(g, j, os.str());
  return predicted == measured ? 0 : 1;
}

int cmd_braid(const Global& g, bool full, const std::string& file, const std::string& ta, const std::string& tb,
              bool oracle) {
  BraidRequest r = braid_request(g, file, ta, tb);
  BraidVerdict v = decide_braided(r.a, r.b, r.data);
  json j = verdict_to_json(v);
  std::string human = verdict_text(v);
  if (full) {
    Pairing p = pair_and_reindex(r.a, r.b, r.data);
    j["pairing"] = std::string(failure_name(p.failure));
    if (r.drawing && v.braided) {
      json types = json::object();
      for (const auto& pr : v.decomposition.pairs) {
        CrossingProfile prof = crossing_profile(*r.drawing, r.drawing->find(pr.a.id), r.b);
        CurveType t = classify_curve(pr.a, pr.b, r.b, r.data, prof);
        types[pr.a.id] = type_to_json(t);
        human += "  type of " + pr.a.id + ": " + std::string(type_name(t.tag)) + "\n";
      }
      j["types"] = types;
    }
  }
  int code = v.braided ? 0 : 1;
  if (oracle) {
    if (!r.config || !r.config->test_set) throw Error(Errc::InvalidInput, "the oracle needs an embedding with a test set");
    Agreement ag = certify_with_oracle(*r.drawing, r.a, r.b, *r.config->test_set, full);
    j = agreement_to_json(ag);
    human += std::string("oracle: ") + (ag.oracle ? "braid relation holds" : "braid relation fails") +
             (ag.agree ? " (agrees)\n" : " (DISAGREES)\n");
    if (!ag.agree) code = 1;
  }
  emit(g, j, human);
  return code;
}

int cmd_factor(const Global& g, const std::string& file) {
  json req = read_json_file(file);
  BraidHomSpec spec;
  spec.strands = req.at("strands").get<int>();
  for (const auto& t : req.at("images")) spec.images.push_back(t.get<MultiTwist>());
  IntersectionData data;
  std::optional<CorpusConfig> cfg;
  if (req.contains("embedding")) {
    const auto& e = req.at("embedding");
    cfg = e.is_string() ? load_config(e.get<std::string>()) : parse_config(e);
  }
  if (!g.schema.empty()) cfg = load_config(g.schema);
  if (cfg) {
    Drawing d = build_drawing(*cfg);
    std::vector<int> ids;
    std::set<std::string> seen;
    for (const auto& t : spec.images)
      for (const auto& x : t.components())
        if (seen.insert(x.curve.id).second) ids.push_back(d.find(x.curve.id));
    data = intersection_data(d, ids);
  } else if (req.contains("intersections")) {
    data = req.at("intersections").get<IntersectionData>();
  } else {
    throw Error(Errc::InvalidInput, "request needs intersections or an embedding");
  }
  FactorResult r = factor_braid_hom(spec, data);
  std::ostringstream os;
  if (r.factorization) {
    os << "factors: " << r.factorization->chains.size() << " chains, cyclic part "
       << twist_text(r.factorization->cyclic) << "\n";
    for (const auto& ch : r.factorization->chains) {
      os << "  chain";
      for (const auto& c : ch.curves) os << " " << c.id;
      os << "  sign " << ch.sign << "\n";
    }
  } else {
    const auto& x = *r.rejection;
    os << "rejected: " << errc_name(x.code) << " (" << x.i << ", " << x.j << ") " << x.detail
       << (x.disjointness ? " [support-disjointness criterion]" : "") << "\n";
  }
  emit(g, factor_to_json(r), os.str());
  return r.factorization ? 0 : 1;
}

int cmd_table(const Global& g) {
  auto rows = enumerate_table();
  std::ostringstream os;
  os << "type  i(a_i,b_i)  |n_i|  X  partners\n";
  for (const auto& r : rows) {
    os << type_name(r.tag) << "    " << r.i_ab << "           " << (r.abs_n ? std::to_string(*r.abs_n) : "-")
       << "      " << r.x << "  "
       << (r.residual == 0 ? "others: i = 1, |n| = 1" : "one partner with i = 1, |n| = 2; others i = 1, |n| = 1")
       << "\n";
  }
  emit(g, table_to_json(rows), os.str());
  return 0;
}

int cmd_verify(const Global& g, SweepConfig cfg, const std::string& configs, const std::string& checks,
               int instance) {
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string x; std::getline(ss, x, ',');)
      if (!x.empty()) out.push_back(x);
    return out;
  };
  if (!configs.empty()) cfg.configs = split(configs);
  else if (!g.schema.empty()) cfg.configs = split(g.schema);
  if (!checks.empty()) cfg.checks = split(checks);
  if (instance >= 0) cfg.only = instance;
  SweepReport rep = run_sweep(cfg);
  json j = report_json(rep);
  emit(g, j, report_human(rep));
  return j["failures"].empty() ? 0 : 1;
}

int cmd_canonicalize(const Global& g, const std::string& file) {
  (void)g;
  std::cout << canonicalize(read_json_file(file));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multitwist intersection formulas and braid relation analysis"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--schema,--config", g.schema, "Corpus configuration (name or file)");
  std::uint64_t seed = 1;
  int samples = 100;
  app.add_option("--seed", seed, "Sweep seed");
  app.add_option("--samples", samples, "Sweep sample count");

  std::string x, y, by, curve, compare, file, ta, tb, profile, configs, checks;
  bool oracle = false;
  int instance = -1;
  SweepConfig sweep;

  auto* intersect = app.add_subcommand("intersect", "Geometric and algebraic intersection of two curves");
  intersect->add_option("a", x)->required();
  intersect->add_option("b", y)->required();

  auto* twist = app.add_subcommand("twist", "Image of a curve under a multitwist");
  twist->add_option("--by", by, "Multitwist: name, JSON or c:n,d:m")->required();
  twist->add_option("curve", curve)->required();
  twist->add_option("--compare", compare, "Curve to test the image against for isotopy");

  auto* xf = app.add_subcommand("x-function", "Crossing profile, X and the hidden formula");
  xf->add_option("--profile", profile, "Profile JSON file");
  xf->add_option("--base", curve, "Base curve");
  xf->add_option("--by", by, "Multitwist");

  auto* check = app.add_subcommand("check-braid", "Decide the braid relation");
  auto* decompose = app.add_subcommand("decompose", "Braid decomposition or witness with curve types");
  for (auto* s : {check, decompose}) {
    s->add_option("request", file, "Analysis request JSON");
    s->add_option("--a", ta, "First multitwist");
    s->add_option("--b", tb, "Second multitwist");
    s->add_flag("--oracle", oracle, "Compare with the Alexander method");
  }

  auto* factor = app.add_subcommand("factor-hom", "Factor a braid group homomorphism");
  factor->add_option("request", file)->required();

  auto* table = app.add_subcommand("table", "Curve types solved from the intersection identity");

  auto* verify = app.add_subcommand("verify-formulas", "Seeded property sweep");
  verify->add_option("--configs", configs, "Comma separated configurations");
  verify->add_option("--checks", checks, "Comma separated checks");
  verify->add_option("--workers", sweep.workers);
  verify->add_option("--max-exponent", sweep.max_exponent);
  verify->add_option("--max-crossings", sweep.max_crossings);
  verify->add_option("--max-twist-curves", sweep.max_twist_curves);
  verify->add_option("--max-map-length", sweep.max_map_length);
  verify->add_option("--instance", instance, "Re-run one instance index");

  auto* canon = app.add_subcommand("canonicalize", "Canonical form of a schema or configuration file");
  canon->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*intersect) return cmd_intersect(g, x, y);
    if (*twist) return cmd_twist(g, by, curve, compare);
    if (*xf) {
      if (profile.empty() && (curve.empty() || by.empty()))
        throw Error(Errc::InvalidInput, "give --profile, or --schema with --base and --by");
      return cmd_xfunction(g, profile, curve, by);
    }
    if (*check) return cmd_braid(g, false, file, ta, tb, oracle);
    if (*decompose) return cmd_braid(g, true, file, ta, tb, oracle);
    if (*factor) return cmd_factor(g, file);
    if (*table) return cmd_table(g);
    if (*verify) {
      sweep.seed = seed;
      sweep.samples = samples;
      return cmd_verify(g, sweep, configs, checks, instance);
    }
    if (*canon) return cmd_canonicalize(g, file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
