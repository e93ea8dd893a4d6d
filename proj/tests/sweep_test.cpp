#include <cstdlib>

#include "doctest.h"
#include "mtw/engine.hpp"
#include "mtw/formulas.hpp"
#include "mtw/io.hpp"
#include "mtw/sweep.hpp"

using namespace mtw;

namespace {

SweepConfig base(int samples, std::uint64_t seed) {
  SweepConfig c;
  c.samples = samples;
  c.seed = seed;
  return c;
}

bool mixed_signs(const json& summary) {
  auto t = summary.at("multitwist").get<MultiTwist>();
  bool pos = false, neg = false;
  for (auto& x : t.components()) (x.exponent > 0 ? pos : neg) = true;
  return pos && neg;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("bad sweep configurations are rejected") {
  CHECK_THROWS_AS(run_sweep(base(0, 1)), Error);
  auto c = base(5, 1);
  c.checks = {"nonsense"};
  CHECK_THROWS_AS(run_sweep(c), Error);
  c = base(5, 1);
  c.max_exponent = 0;
  CHECK_THROWS_AS(run_sweep(c), Error);
}

TEST_CASE("reports do not depend on the worker count") {
  auto c = base(40, 11);
  c.checks = kAllChecks;
  auto one = report_json(run_sweep(c));
  c.workers = 4;
  CHECK(dump(report_json(run_sweep(c))) == dump(one));
  c.only = 17;
  auto r = run_sweep(c);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].index == 17);
}

TEST_CASE("bounds, homology and braid agreement hold on every instance") {
  auto c = base(150, 5);
  c.checks = {"ivanov", "positive", "homology", "braid-agreement"};
  c.configs = {"torus", "genus2", "example23", "figure1", "genus2-p2"};
  c.workers = 4;
  auto r = run_sweep(c);
  int checked = 0;
  for (auto& inst : r.instances)
    for (auto& [ch, res] : inst.checks) {
      CAPTURE(inst.index); CAPTURE(ch); CAPTURE(res.detail);
      CHECK(res.outcome != Outcome::Fail);
      checked += res.outcome == Outcome::Pass;
    }
  CHECK(checked > 300);
}

TEST_CASE("hidden formula matches on every same-sign instance") {
  auto c = base(300, 2);
  c.checks = {"hidden"};
  c.configs = {"torus", "genus2", "genus2-p2"};
  c.workers = 4;
  c.max_map_length = 2;
  auto r = run_sweep(c);
  int same = 0;
  for (auto& inst : r.instances) {
    auto& res = inst.checks.at("hidden");
    if (mixed_signs(inst.summary)) continue;
    ++same;
    CAPTURE(inst.index); CAPTURE(res.detail);
    CHECK(res.outcome == Outcome::Pass);
  }
  CHECK(same > 100);
}

// Dx1 and Dx2 cobound a pair of pants with g1; twisting them oppositely
// lets a curve crossing the pants lose two intersections.
TEST_CASE("hidden formula overcounts a mixed-sign multitwist") {
  auto s = load_schema_file("genus2");
  Drawing d(s);
  auto cfg = load_config("genus2");
  Drawing corpus = build_drawing(cfg);
  for (const char* n : {"Dx1", "Dx2", "g1"}) d.add_curve(n, corpus.curve(corpus.find(n)).word);
  auto a = curve_from_json(*s, json::parse(R"({"name": "a", "word": [["x1-", 0], ["y1", 0], ["y1", 1]]})"));
  int ia = d.add_curve("a", a.word);
  MultiTwist T{{"Dx2", 1}, {"Dx1", -1}, {"g1", 1}};

  std::vector<CurveTerm> terms;
  for (auto& x : T.components()) terms.push_back({std::labs(x.exponent), geometric_intersection(d, ia, d.find(x.curve.id))});
  auto prof = crossing_profile(d, ia, T);
  long predicted = hidden_formula(prof, terms);
  int image = d.add_curve("Ta", apply_sequence(d, {T}, ia).word);
  CHECK(predicted == 4);
  CHECK(geometric_intersection(d, ia, image) == 2);
  // each sign alone agrees
  for (auto& x : T.components()) {
    MultiTwist single({x});
    std::vector<CurveTerm> t1{{1, geometric_intersection(d, ia, d.find(x.curve.id))}};
    int im = d.add_curve("T1a." + x.curve.id, apply_sequence(d, {single}, ia).word);
    CHECK(hidden_formula(crossing_profile(d, ia, single), t1) == geometric_intersection(d, ia, im));
  }
}

}  // TEST_SUITE
