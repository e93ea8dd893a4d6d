#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mtw/corpus.hpp"
#include "mtw/engine.hpp"
#include "mtw/generate.hpp"
#include "torus_oracle.hpp"

using namespace mtw;
using oracle::Slope;

namespace {

std::vector<Slope> small_slopes(long bound) {
  std::vector<Slope> out;
  for (long p = 0; p <= bound; ++p)
    for (long q = -bound; q <= bound; ++q)
      if (std::gcd(p, q) == 1 && (p > 0 || q > 0)) out.push_back({p, q});
  return out;
}

int add_line(Drawing& d, Slope v, const std::string& name) {
  return d.add_curve(name, oracle::torus_line(d.schema(), v));
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidInput;
}

MultiTwist one(const std::string& c, long n) { return MultiTwist({TwistComponent{CurveRef(c), n}}); }

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("schema loading") {
  auto torus = Schema::load({"t", {{"x", "y", "x-", "y-"}}, {}, std::nullopt});
  CHECK(torus.genus() == 1);
  CHECK(torus.num_punctures() == 0);
  CHECK(torus.euler_characteristic() == 0);

  auto g5 = load_schema_file("genus5");
  CHECK(g5->genus() == 5);
  CHECK(g5->euler_characteristic() == -8);

  SchemaDescription oct{"o", {{"x1", "y1", "x1-", "y1-", "x2", "y2", "x2-", "y2-"}}, {{0, std::nullopt}}, 2};
  auto o = Schema::load(oct);
  CHECK(o.genus() == 2);
  CHECK(o.num_punctures() == 1);
  CHECK(o.euler_characteristic() == -3);
  oct.genus = 3;
  CHECK_THROWS_AS(Schema::load(oct), Error);

  CHECK(code_of([] { Schema::load({"rp2", {{"x", "x"}}, {}, std::nullopt}); }) == Errc::NonOrientable);
  CHECK(code_of([] {
          Schema::load({"two", {{"x", "y", "x-", "y-"}, {"z", "w", "z-", "w-"}}, {}, std::nullopt});
        }) == Errc::Disconnected);
  CHECK(code_of([] { Schema::load({"open", {{"x", "y", "x-"}}, {}, std::nullopt}); }) == Errc::BadPairing);
}

TEST_CASE("torus intersections match the determinant") {
  auto slopes = small_slopes(3);
  for (auto u : slopes) {
    for (auto v : slopes) {
      Drawing d(oracle::torus_schema());
      int a = add_line(d, u, "u"), b = add_line(d, v, "v");
      CAPTURE(u.p); CAPTURE(u.q); CAPTURE(v.p); CAPTURE(v.q);
      CHECK(geometric_intersection(d, a, b) == std::labs(oracle::det(u, v)));
      CHECK(algebraic_intersection(d, a, b) == oracle::det(u, v));
      CHECK(algebraic_intersection(d, b, a) == -oracle::det(u, v));
    }
  }
}

TEST_CASE("torus basics") {
  Drawing d(oracle::torus_schema());
  int x = add_line(d, {1, 0}, "x"), y = add_line(d, {0, 1}, "y");
  int s21 = add_line(d, {2, 1}, "s21"), s11 = add_line(d, {1, 1}, "s11");
  CHECK(geometric_intersection(d, x, y) == 1);
  CHECK(geometric_intersection(d, s21, y) == 2);
  CHECK(geometric_intersection(d, s21, s11) == 1);
  CHECK(algebraic_intersection(d, x, y) == 1);
  int xr = d.add_curve("xr", reversed_word(d.curve(x).word));
  CHECK(algebraic_intersection(d, xr, y) == -1);
  int xc = d.add_copy(x, "xc");
  CHECK(algebraic_intersection(d, x, xc) == 0);
  CHECK(isotopic(d, x, xc));
}

TEST_CASE("twist convention pin") {
  Drawing d(oracle::torus_schema());
  int x = add_line(d, {1, 0}, "x");
  add_line(d, {0, 1}, "y");
  int plus = add_line(d, {1, 1}, "s11"), minus = add_line(d, {1, -1}, "s1m1");
  auto img = apply_sequence(d, {one("y", 1)}, x);
  int t = d.add_curve("img", img.word);
  CHECK(isotopic(d, t, plus));
  CHECK_FALSE(isotopic(d, t, minus));
  auto fixed = apply_sequence(d, {one("x", 3)}, x);
  int f = d.add_curve("fixed", fixed.word);
  CHECK(isotopic(d, f, x));
}

TEST_CASE("torus twists follow SL(2,Z)") {
  auto slopes = small_slopes(2);
  for (auto c : slopes) {
    for (auto v : slopes) {
      for (long n : {-2L, -1L, 1L, 2L}) {
        Drawing d(oracle::torus_schema());
        add_line(d, c, "c");
        int x = add_line(d, v, "v");
        auto img = apply_sequence(d, {one("c", n)}, x);
        int t = d.add_curve("img", img.word);
        int want = add_line(d, oracle::normalized(oracle::twist(c, n, v)), "want");
        CAPTURE(c.p); CAPTURE(c.q); CAPTURE(v.p); CAPTURE(v.q); CAPTURE(n);
        CHECK(isotopic(d, t, want));
      }
    }
  }
}

TEST_CASE("spurious crossings of parallel copies are removed") {
  auto s = oracle::torus_schema();
  auto w = oracle::torus_line(*s, {2, 1});
  // the copy's strands interleave with the original's, in every order
  std::map<int, std::vector<int>> by_edge;
  for (int j = 0; j < static_cast<int>(w.size()); ++j) by_edge[Schema::edge_of(w[j].occ)].push_back(j);
  int spurious = 0, tried = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Crossing> a = w, b = w;
    int bit = 0;
    for (auto& [e, idx] : by_edge) {
      const int k = static_cast<int>(idx.size());
      for (int j : idx) {
        a[j].slot = 2 * w[j].slot;
        int r = (mask >> (bit % 4)) & 1 ? k - 1 - w[j].slot : w[j].slot;
        b[j].slot = 2 * r + ((mask >> 2) & 1 ? 1 : -1);
      }
      ++bit;
    }
    // make slots dense per edge
    for (auto& [e, idx] : by_edge) {
      std::vector<int> all;
      for (int j : idx) all.push_back(a[j].slot), all.push_back(b[j].slot);
      std::sort(all.begin(), all.end());
      for (int j : idx) {
        a[j].slot = static_cast<int>(std::lower_bound(all.begin(), all.end(), a[j].slot) - all.begin());
        b[j].slot = static_cast<int>(std::lower_bound(all.begin(), all.end(), b[j].slot) - all.begin());
      }
    }
    Drawing d(s);
    std::vector<int> ids;
    try {
      ids = d.add_curves({{"a", a}, {"b", b}});
      check_simple(d, ids[1]);
    } catch (const Error&) {
      continue;
    }
    ++tried;
    if (Arrangement(d, {ids[0]}, {ids[1]}).count(ids[0], ids[1]) > 0) ++spurious;
    CHECK(geometric_intersection(d, ids[0], ids[1]) == 0);
    CHECK(isotopic(d, ids[0], ids[1]));
  }
  CHECK(tried > 0);
  CHECK(spurious > 0);
}

TEST_CASE("essential and simple checks") {
  auto s = oracle::torus_schema();
  Drawing d(s);
  int x = d.add_curve("x", {{s->occurrence("y"), 0}});
  CHECK(is_essential(d, x));
  auto g2p = load_schema_file("genus2-p2");
  Drawing e(g2p);
  // loop around a single puncture: crosses its slit once
  int around = e.add_curve("around", {{g2p->occurrence("_p0"), 0}});
  CHECK_FALSE(is_essential(e, around));
  int both = e.add_curve("both", {{g2p->occurrence("_p0"), 0}, {g2p->occurrence("_p1"), 0}});
  CHECK(is_essential(e, both));
}

TEST_CASE("corpus intersection tables") {
  auto fig = load_config("figure1");
  Drawing d = build_drawing(fig);
  auto I = [&](const std::string& a, const std::string& b) {
    return geometric_intersection(d, d.find(a), d.find(b));
  };
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      std::string ai = "a" + std::to_string(i), bj = "b" + std::to_string(j);
      CHECK(I(ai, bj) == (i == j ? 1 : 0));
      if (i < j) {
        CHECK(I(ai, "a" + std::to_string(j)) == 0);
        CHECK(I("b" + std::to_string(i), bj) == 0);
      }
    }
    CHECK(I("d", "a" + std::to_string(i)) == 0);
    CHECK(I("d", "b" + std::to_string(i)) == 0);
  }
  // the chain: consecutive curves meet once, the others not at all
  for (std::size_t i = 0; i < fig.chain.size(); ++i)
    for (std::size_t j = i + 1; j < fig.chain.size(); ++j)
      CHECK(I(fig.chain[i], fig.chain[j]) == (j == i + 1 ? 1 : 0));

  auto hd = classes_and_pairing(d, {d.find("a1"), d.find("b1"), d.find("a2"), d.find("d")});
  CHECK(std::labs(pairing(hd.classes.at("a1"), hd.classes.at("b1"))) == 1);
  CHECK(pairing(hd.classes.at("a1"), hd.classes.at("a2")) == 0);
  CHECK(pairing(hd.classes.at("b1"), hd.classes.at("d")) == 0);
}

TEST_CASE("corpus chains and families") {
  for (const auto& name : list_configs()) {
    CAPTURE(name);
    auto c = load_config(name);
    Drawing d = build_drawing(c);
    for (int k = 0; k < d.num_curves(); ++k) {
      check_simple(d, k);
      CHECK(is_essential(d, k));
    }
    for (std::size_t i = 0; i < c.chain.size(); ++i)
      for (std::size_t j = i + 1; j < c.chain.size(); ++j)
        CHECK(geometric_intersection(d, d.find(c.chain[i]), d.find(c.chain[j])) == (j == i + 1 ? 1 : 0));
    for (const auto& fam : c.pants)
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          CHECK(geometric_intersection(d, d.find(fam[i]), d.find(fam[j])) == 0);
          CHECK_FALSE(isotopic(d, d.find(fam[i]), d.find(fam[j])));
        }
    if (c.test_set) CHECK_NOTHROW(check_filling(d, *c.test_set));
  }
}

TEST_CASE("a non-filling test set is rejected") {
  auto c = load_config("genus2");
  Drawing d = build_drawing(c);
  CHECK(code_of([&] { check_filling(d, TestSet{{"Dx1"}, {"Dy1"}}); }) == Errc::TestSetNotFilling);
}

TEST_CASE("worked example: i(a, T a) = 8") {
  auto c = load_config("example23");
  Drawing d = build_drawing(c);
  const MultiTwist& t = c.multitwists.at("C");
  int a = d.find("a");
  auto prof = crossing_profile(d, a, t);
  CHECK(prof.multiplicity("c1") == 2);
  CHECK(prof.multiplicity("c2") == 1);
  CHECK(prof.multiplicity("c3") == 1);
  CHECK(x_value(prof) == 2);
  auto img = apply_sequence(d, {t}, a);
  int ta = d.add_curve("Ta", img.word);
  CHECK(geometric_intersection(d, a, ta) == 8);
  CurveTerm terms[] = {{2, 2}, {1, 1}, {1, 1}};
  CHECK(hidden_formula(prof, terms) == 8);
}

TEST_CASE("crossing profile edge cases") {
  Drawing d(oracle::torus_schema());
  int x = add_line(d, {1, 0}, "x");
  add_line(d, {0, 1}, "y");
  int xc = d.add_copy(x, "xc");
  (void)xc;
  auto empty = crossing_profile(d, x, one("xc", 2));
  CHECK(empty.sequence.empty());
  CHECK(x_value(empty) == 0);
  auto single = crossing_profile(d, x, one("y", -3));
  CHECK(single.sequence.size() == 1);
  CHECK(single.arc_flags == std::vector<int>{1});
}

TEST_CASE("multitwists on intersecting curves are rejected") {
  auto c = load_config("genus2");
  Drawing d = build_drawing(c);
  MultiTwist bad{{"Dx1", 1}, {"Dy1", 1}};
  CHECK(code_of([&] { apply_sequence(d, {bad}, d.find("g1")); }) == Errc::NotDisjoint);
}

TEST_CASE("mapping class equality") {
  Drawing d(oracle::torus_schema());
  add_line(d, {1, 0}, "a");
  add_line(d, {0, 1}, "b");
  TestSet ts{{"a"}, {"b"}};
  auto A = one("a", 1), B = one("b", 1);
  CHECK(mapping_classes_equal(d, {A, B, A}, {B, A, B}, ts));
  CHECK_FALSE(mapping_classes_equal(d, {A}, {B}, ts));

  auto g = load_config("genus2");
  Drawing e = build_drawing(g);
  CHECK_FALSE(mapping_classes_equal(e, {one("Dx1", 1)}, {one("Dx2", 1)}, *g.test_set));
  CHECK(mapping_classes_equal(e, {one("Dx1", 1), one("Dx2", 1)}, {one("Dx2", 1), one("Dx1", 1)}, *g.test_set));

  auto fig = load_config("figure1");
  Drawing f = build_drawing(fig);
  auto TA = fig.multitwists.at("A"), TB = fig.multitwists.at("B");
  CHECK(mapping_classes_equal(f, {TA, TB, TA}, {TB, TA, TB}, *fig.test_set));
}

TEST_CASE("orbit sizes") {
  auto fig = load_config("figure1");
  Drawing f = build_drawing(fig);
  auto TA = fig.multitwists.at("A"), TB = fig.multitwists.at("B");
  auto o = orbit_sizes(f, {TA, TB, TA}, {"a1", "b3", "d"});
  CHECK(o.at("a1").size == 2);
  CHECK(o.at("b3").size == 2);
  CHECK(o.at("d").size == 1);
  CHECK(orbit_sizes(f, {}, {"a1"}).at("a1").size == 1);

  Drawing d(oracle::torus_schema());
  add_line(d, {1, 0}, "x");
  add_line(d, {0, 1}, "y");
  auto grow = orbit_sizes(d, {one("y", 1)}, {"x"}, 32);
  CHECK(grow.at("x").over_cap);
}

TEST_CASE("bigon removal order does not change the result") {
  auto c = load_config("genus2");
  Drawing base = build_drawing(c);
  std::mt19937_64 rng(99);
  int done = 0;
  for (int round = 0; round < 40 && done < 12; ++round) {
    WalkOptions opt;
    opt.max_length = 7;
    auto wa = random_curve(base.schema_ptr(), rng, opt, "p");
    auto wb = random_curve(base.schema_ptr(), rng, opt, "q");
    if (!wa.curve || !wb.curve) continue;
    // twist them so that they meet in many spurious points
    Drawing d = base;
    int p = d.add_curve("p", wa.curve->word);
    int q = d.add_curve("q", wb.curve->word);
    auto h = random_word(rng, c.chain, 2);
    int hp = d.add_curve("hp", apply_sequence(d, h, p).word);
    int hq = d.add_curve("hq", apply_sequence(d, h, q).word);
    Drawing pair = extract(d, {hp, hq});
    Drawing ref = pair;
    reduce(ref, {0}, {1});
    const int want = Arrangement(ref, {0}, {1}).count(0, 1);
    CHECK(want == geometric_intersection(d, p, q));
    CHECK(algebraic_intersection(pair, 0, 1) == algebraic_intersection(d, p, q));
    for (int k = 0; k < 5; ++k) {
      Drawing e = pair;
      std::mt19937_64 order(1000 + 17 * k + round);
      reduce(e, {0}, {1}, &order);
      Arrangement arr(e, {0}, {1});
      CHECK(arr.count(0, 1) == want);
      CHECK(arr.algebraic(0, 1) == algebraic_intersection(pair, 0, 1));
      CHECK(find_bigons(arr).empty());
    }
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("twists preserve intersections and invert") {
  auto c = load_config("genus2");
  Drawing base = build_drawing(c);
  std::mt19937_64 rng(2024);
  int done = 0;
  for (int round = 0; round < 40 && done < 15; ++round) {
    WalkOptions opt;
    auto wa = random_curve(base.schema_ptr(), rng, opt, "p");
    auto wb = random_curve(base.schema_ptr(), rng, opt, "q");
    if (!wa.curve || !wb.curve) continue;
    Drawing d = base;
    int p = d.add_curve("p", wa.curve->word);
    int q = d.add_curve("q", wb.curve->word);
    auto h = random_word(rng, c.chain, 1 + static_cast<int>(rng() % 3));
    int hp = d.add_curve("hp", apply_sequence(d, h, p).word);
    int hq = d.add_curve("hq", apply_sequence(d, h, q).word);
    CHECK(geometric_intersection(d, hp, hq) == geometric_intersection(d, p, q));
    CHECK(algebraic_intersection(d, hp, hq) == algebraic_intersection(d, p, q));
    std::vector<MultiTwist> inv;
    for (auto it = h.rbegin(); it != h.rend(); ++it) inv.push_back(it->inverse());
    int back = d.add_curve("back", apply_sequence(d, inv, hp).word);
    CHECK(isotopic(d, back, p, true));
    ++done;
  }
  CHECK(done >= 10);
}

}  // TEST_SUITE
