// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mtw/braid.hpp"
#include "mtw/corpus.hpp"
#include "mtw/engine.hpp"
#include "mtw/formulas.hpp"
#include "mtw/io.hpp"
#include "mtw/sweep.hpp"

using namespace mtw;

namespace {

// Pinned limits. Every comparison below is exact on integers.
constexpr double kExample23Seconds = 1.0;
constexpr int kIdentitySamples = 600;
constexpr double kIdentitySeconds = 300.0;
constexpr int kRandomBraidSamples = 120;
constexpr double kBraidSeconds = 600.0;
constexpr double kTableSeconds = 1.0;
constexpr std::uint64_t kSeed = 1;

struct Result {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

MultiTwist one(const std::string& c, long n) { return MultiTwist({TwistComponent{CurveRef(c), n}}); }

MultiTwist with(const MultiTwist& t, const std::string& c, long n) {
  auto v = t.components();
  v.push_back({CurveRef(c), n});
  return MultiTwist(v);
}

Result example23() {
  auto t0 = Clock::now();
  auto c = load_config("example23");
  Drawing d = build_drawing(c);
  const MultiTwist& C = c.multitwists.at("C");
  int a = d.find("a");
  auto prof = crossing_profile(d, a, C);
  std::vector<CurveTerm> terms;
  for (const auto& x : C.components())
    terms.push_back({std::labs(x.exponent), geometric_intersection(d, a, d.find(x.curve.id))});
  long x = x_value(prof);
  long predicted = hidden_formula(prof, terms);
  int image = d.add_curve("Ca", apply_sequence(d, {C}, a).word);
  long measured = geometric_intersection(d, a, image);
  double t = seconds_since(t0);
  return {x == 2 && predicted == 8 && measured == 8 && t < kExample23Seconds,
          "X " + std::to_string(x) + ", formula " + std::to_string(predicted) + ", measured " +
              std::to_string(measured) + ", " + secs(t)};
}

SweepConfig identity_sweep() {
  SweepConfig cfg;
  cfg.samples = kIdentitySamples;
  cfg.seed = kSeed;
  cfg.configs = {"torus", "genus2", "genus2-p2"};
  cfg.checks = {"hidden", "ivanov", "positive"};
  cfg.max_exponent = 3;
  cfg.max_twist_curves = 6;
  cfg.workers = 4;
  return cfg;
}

struct Tally {
  int pass = 0, fail = 0, skip = 0;
};

Tally tally(const SweepReport& r, const std::string& check) {
  Tally t;
  for (const auto& inst : r.instances) {
    auto it = inst.checks.find(check);
    if (it == inst.checks.end()) continue;
    switch (it->second.outcome) {
      case mtw::Outcome::Pass: ++t.pass; break;
      case mtw::Outcome::Fail: ++t.fail; break;
      case mtw::Outcome::Skip: ++t.skip; break;
    }
  }
  return t;
}

std::string counts(const Tally& t, const char* verb = "agree") {
  return std::to_string(t.pass) + "/" + std::to_string(t.pass + t.fail) + " " + verb;
}

bool mixed_signs(const InstanceResult& inst) {
  if (!inst.summary.contains("multitwist")) return false;
  bool pos = false, neg = false;
  for (const auto& x : inst.summary["multitwist"].get<MultiTwist>().components()) (x.exponent > 0 ? pos : neg) = true;
  return pos && neg;
}

Result table() {
  auto t0 = Clock::now();
  auto rows = enumerate_table();
  double t = seconds_since(t0);
  struct Want {
    CurveTypeTag tag;
    long i;
    std::optional<long> n;
    long x;
  };
  const Want want[] = {{CurveTypeTag::T1, 0, std::nullopt, 0},
                       {CurveTypeTag::T2, 1, 2, 0},
                       {CurveTypeTag::T3, 1, 1, 1},
                       {CurveTypeTag::T4, 1, 1, 0},
                       {CurveTypeTag::T5, 2, 1, 0}};
  bool ok = rows.size() == 5;
  for (const auto& w : want) {
    bool found = false;
    for (const auto& r : rows) found = found || (r.tag == w.tag && r.i_ab == w.i && r.abs_n == w.n && r.x == w.x);
    ok = ok && found;
  }
  return {ok && t < kTableSeconds, std::to_string(rows.size()) + " rows, " + secs(t)};
}

Result braid_vs_oracle() {
  auto t0 = Clock::now();
  int cases = 0, agree = 0;
  std::string bad;
  auto record = [&](const std::string& label, const Agreement& ag, bool expect) {
    ++cases;
    bool ok = ag.agree && ag.verdict.braided == expect;
    agree += ok;
    if (!ok && bad.empty()) bad = ", first disagreement: " + label;
  };

  auto fig = load_config("figure1");
  Drawing df = build_drawing(fig);
  const auto &A = fig.multitwists.at("A"), &B = fig.multitwists.at("B");
  auto f1 = certify_with_oracle(df, A, B, *fig.test_set);
  record("figure1", f1, true);
  if (f1.verdict.decomposition.pairs.size() != 4 && bad.empty()) bad = ", figure1 pair count";
  for (long m : {-2L, -1L, 1L, 2L}) {
    auto ag = certify_with_oracle(df, with(A, "d", m), with(B, "d", m), *fig.test_set);
    record("common d^" + std::to_string(m), ag, true);
    if (!same_multitwist(ag.verdict.decomposition.common, one("d", m)) && bad.empty())
      bad = ", common part for m=" + std::to_string(m);
  }

  auto g = load_config("genus2");
  Drawing dg = build_drawing(g);
  const std::pair<const char*, const char*> pairs[] = {{"Dx1", "Dx2"}, {"Dx1", "Dy1"}, {"Dx1", "e2"}};
  for (auto [a, b] : pairs) {
    long i = geometric_intersection(dg, dg.find(a), dg.find(b));
    for (long m : {-2L, -1L, 1L, 2L})
      for (long n : {-2L, -1L, 1L, 2L}) {
        bool expect = i == 1 && m == n && std::labs(m) == 1;
        record(std::string(a) + "^" + std::to_string(m) + " " + b + "^" + std::to_string(n),
               certify_with_oracle(dg, one(a, m), one(b, n), *g.test_set), expect);
      }
  }

  SweepConfig cfg;
  cfg.samples = kRandomBraidSamples;
  cfg.seed = kSeed;
  cfg.configs = {"genus2", "example23", "figure1", "genus2-p2"};
  cfg.checks = {"braid-agreement"};
  cfg.workers = 4;
  auto rep = run_sweep(cfg);
  Tally t = tally(rep, "braid-agreement");
  cases += t.pass + t.fail;
  agree += t.pass;
  if (t.fail && bad.empty()) bad = ", random perturbations disagree";
  int braided = 0;
  for (const auto& inst : rep.instances)
    if (inst.summary.contains("braid") && inst.summary["braid"]["verdict"].get<bool>()) ++braided;

  double s = seconds_since(t0);
  return {agree == cases && t.fail == 0 && t.pass >= 50 && s < kBraidSeconds,
          std::to_string(agree) + "/" + std::to_string(cases) + " agree (" + std::to_string(t.pass + t.fail) +
              " random, " + std::to_string(braided) + " braided)" + bad + ", " + secs(s)};
}

Result twist_pin() {
  auto c = load_config("torus");
  Drawing d = build_drawing(c);
  int x = d.find("x");
  int img = d.add_curve("Tyx", apply_sequence(d, {one("y", 1)}, x).word);
  bool right = isotopic(d, img, d.find("s1_1"));
  bool wrong = isotopic(d, img, d.find("s1_m1"));
  int fixed = d.add_curve("Txx", apply_sequence(d, {one("x", 1)}, x).word);
  bool fix = isotopic(d, fixed, x);
  return {right && !wrong && fix, std::string("T_y(x) ") + (right ? "~ (1,1)" : wrong ? "~ (1,-1)" : "other") +
                                      ", T_x(x) " + (fix ? "~ x" : "moved")};
}

Result factorization() {
  auto c = load_config("figure1");
  Drawing d = build_drawing(c);
  std::vector<int> ids(d.num_curves());
  for (int k = 0; k < d.num_curves(); ++k) ids[k] = k;
  auto data = intersection_data(d, ids);
  BraidHomSpec spec{3, {MultiTwist{{"a1", 1}, {"d", 1}}, MultiTwist{{"b1", 1}, {"d", 1}}}};
  auto r = factor_braid_hom(spec, data);
  if (!r.factorization) return {false, "rejected: " + (r.rejection ? r.rejection->detail : std::string())};
  const auto& f = *r.factorization;
  bool ok = f.chains.size() == 1 && f.chains[0].curves == std::vector<CurveRef>{"a1", "b1"} &&
            same_multitwist(f.cyclic, one("d", 1));
  bool back = true;
  for (int i = 0; i < 2; ++i) back = back && reassemble(f, i + 1) == spec.images[i];
  return {ok && back, std::to_string(f.chains.size()) + " chain, cyclic " +
                          (same_multitwist(f.cyclic, one("d", 1)) ? "d^1" : "other") +
                          (back ? ", reassembly exact" : ", reassembly differs")};
}

Result determinism() {
  SweepConfig cfg;
  cfg.samples = 200;
  cfg.seed = 7;
  cfg.configs = {"torus", "genus2", "example23", "figure1", "genus2-p2"};
  cfg.checks = kAllChecks;
  cfg.workers = 1;
  std::string first = dump(report_json(run_sweep(cfg)));
  std::string second = dump(report_json(run_sweep(cfg)));
  cfg.workers = 4;
  std::string third = dump(report_json(run_sweep(cfg)));
  return {first == second && first == third,
          std::to_string(first.size()) + " bytes, repeat " + (first == second ? "identical" : "differs") +
              ", 4 workers " + (first == third ? "identical" : "differs")};
}

}  // namespace

int main() {
  int failed = 0;
  auto line = [&](int k, const std::string& name, const std::function<Result()>& f) {
    Result o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << k << "  " << name << ": " << o.detail << std::endl;
  };

  line(1, "worked profile on example23", example23);

  // criteria 2 and 3 share one sample set
  auto t0 = Clock::now();
  std::optional<SweepReport> rep;
  try {
    rep = run_sweep(identity_sweep());
  } catch (const std::exception& e) {
    std::cerr << "identity sweep: " << e.what() << "\n";
  }
  double t = seconds_since(t0);
  line(2, "hidden formula identity", [&] {
    if (!rep) return Result{false, "sweep failed"};
    Tally h = tally(*rep, "hidden");
    int mixed = 0;
    for (const auto& inst : rep->instances)
      if (inst.checks.at("hidden").outcome == mtw::Outcome::Fail && mixed_signs(inst)) ++mixed;
    return Result{h.fail == 0 && h.pass >= 500 && t < kIdentitySeconds,
                  counts(h) + " (seed " + std::to_string(kSeed) + "; " + std::to_string(mixed) + " of " +
                      std::to_string(h.fail) + " misses have mixed signs), " + secs(t)};
  });
  line(3, "intersection bounds", [&] {
    if (!rep) return Result{false, "sweep failed"};
    Tally iv = tally(*rep, "ivanov"), po = tally(*rep, "positive");
    return Result{iv.fail == 0 && po.fail == 0 && iv.pass >= 500 && po.pass > 0,
                   "any-sign bound " + counts(iv, "hold") + ", same-sign bound " + counts(po, "hold") + " (" +
                       std::to_string(po.skip) + " mixed-sign skipped)"};
  });
  line(4, "curve type table", table);
  line(5, "braid decision against the oracle", braid_vs_oracle);
  line(6, "twist convention", twist_pin);
  line(7, "braid homomorphism factorization", factorization);
  line(8, "sweep determinism", determinism);
  return failed;
}
