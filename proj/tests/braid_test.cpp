#include <algorithm>
#include <random>

#include "doctest.h"
#include "mtw/braid.hpp"
#include "mtw/corpus.hpp"
#include "mtw/engine.hpp"
#include "mtw/sweep.hpp"

using namespace mtw;

namespace {

IntersectionData corpus_data(const std::string& config, Drawing* out = nullptr) {
  auto c = load_config(config);
  Drawing d = build_drawing(c);
  std::vector<int> ids(d.num_curves());
  for (int k = 0; k < d.num_curves(); ++k) ids[k] = k;
  auto data = intersection_data(d, ids);
  if (out) *out = d;
  return data;
}

// Geometric table from (a, b, v) rows; unlisted pairs among `curves` are 0.
IntersectionData abstract(const std::vector<std::string>& curves,
                          std::initializer_list<std::tuple<const char*, const char*, long>> rows) {
  IntersectionData d;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) d.set_geometric(curves[i], curves[j], 0);
  for (auto& [a, b, v] : rows) d.set_geometric(a, b, v);
  return d;
}

MultiTwist one(const std::string& c, long n) { return MultiTwist({TwistComponent{CurveRef(c), n}}); }

MultiTwist with(MultiTwist t, const std::string& c, long n) {
  auto v = t.components();
  v.push_back({CurveRef(c), n});
  return MultiTwist(v);
}

MultiTwist renamed(const MultiTwist& t, const std::string& prefix) {
  std::vector<TwistComponent> v;
  for (auto& c : t.components()) v.push_back({CurveRef(prefix + c.curve.id), c.exponent});
  return MultiTwist(v);
}

IntersectionData renamed(const IntersectionData& d, const std::string& prefix) {
  IntersectionData out;
  for (auto& [k, v] : d.geometric_table()) out.set_geometric(prefix + k.first, prefix + k.second, v);
  return out;
}

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("table of curve types") {
  auto rows = enumerate_table();
  REQUIRE(rows.size() == 5);
  auto has = [&](long i, std::optional<long> n, long x, CurveTypeTag tag) {
    return std::any_of(rows.begin(), rows.end(), [&](const TableRow& r) {
      return r.i_ab == i && r.abs_n == n && r.x == x && r.tag == tag;
    });
  };
  CHECK(has(0, std::nullopt, 0, CurveTypeTag::T1));
  CHECK(has(1, 2, 0, CurveTypeTag::T2));
  CHECK(has(1, 1, 1, CurveTypeTag::T3));
  CHECK(has(1, 1, 0, CurveTypeTag::T4));
  CHECK(has(2, 1, 0, CurveTypeTag::T5));
  CHECK_FALSE(std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.i_ab == 2 && r.abs_n == 2; }));
  // a larger box adds nothing
  CHECK(enumerate_table(8, 8, 8).size() == 5);
}

TEST_CASE("classify_curve rows") {
  SUBCASE("T3") {
    MultiTwist tB{{"b", 1}, {"b2", 1}, {"b3", -1}};
    auto d = abstract({"a", "b", "b2", "b3"}, {{"a", "b", 1}, {"a", "b2", 1}, {"a", "b3", 1}});
    auto t = classify_curve("a", "b", tB, d, make_profile("a", tB, {"b", "b2", "b3"}));
    CHECK(t.tag == CurveTypeTag::T3);
    CHECK(t.x == 1);
  }
  SUBCASE("T2") {
    MultiTwist tB{{"b", 2}, {"b2", -1}};
    auto d = abstract({"a", "b", "b2"}, {{"a", "b", 1}, {"a", "b2", 1}});
    CHECK(classify_curve("a", "b", tB, d, make_profile("a", tB, {"b", "b2"})).tag == CurveTypeTag::T2);
  }
  SUBCASE("T4") {
    MultiTwist tB{{"b", 1}, {"b2", -2}};
    auto d = abstract({"a", "b", "b2"}, {{"a", "b", 1}, {"a", "b2", 1}});
    CHECK(classify_curve("a", "b", tB, d, make_profile("a", tB, {"b", "b2"})).tag == CurveTypeTag::T4);
  }
  SUBCASE("T5") {
    MultiTwist tB{{"b", 1}, {"c", -1}, {"e", -1}};
    auto d = abstract({"a", "b", "c", "e"}, {{"a", "b", 2}, {"a", "c", 1}, {"a", "e", 1}});
    CHECK(classify_curve("a", "b", tB, d, make_profile("a", tB, {"b", "c", "b", "e"})).tag == CurveTypeTag::T5);
  }
  SUBCASE("T1") {
    MultiTwist tB{{"b", 3}};
    auto d = abstract({"a", "b"}, {});
    CHECK(classify_curve("a", "b", tB, d, make_profile("a", tB, {})).tag == CurveTypeTag::T1);
  }
  SUBCASE("invalid") {
    MultiTwist tB{{"b", 2}};
    auto d = abstract({"a", "b"}, {{"a", "b", 2}});
    auto t = classify_curve("a", "b", tB, d, make_profile("a", tB, {"b", "b"}));
    CHECK(t.tag == CurveTypeTag::Invalid);
    CHECK(t.i_ab == 2);
    CHECK(t.abs_n == 2);
  }
  SUBCASE("profile mismatch") {
    MultiTwist tB{{"b", 1}};
    auto d = abstract({"a", "b"}, {{"a", "b", 1}});
    CHECK_THROWS_AS(classify_curve("a", "b", tB, d, make_profile("a", tB, {"b", "b"})), Error);
    CHECK_THROWS_AS(classify_curve("a", "b", tB, d, make_profile("z", tB, {"b"})), Error);
  }
}

TEST_CASE("pair_and_reindex") {
  auto data = corpus_data("figure1");
  auto fig = load_config("figure1");
  auto p = pair_and_reindex(fig.multitwists.at("A"), fig.multitwists.at("B"), data);
  REQUIRE(p.ok());
  REQUIRE(p.pairs.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(p.pairs[i].a.id == "a" + std::to_string(i + 1));
    CHECK(p.pairs[i].b.id == "b" + std::to_string(i + 1));
  }
  CHECK(p.pairs[3].n == -1);

  auto same = pair_and_reindex(fig.multitwists.at("A"), fig.multitwists.at("A"), data);
  CHECK(same.ok());
  CHECK(same.pairs.empty());
  CHECK(same.common.size() == 4);

  auto d = abstract({"a", "b"}, {{"a", "b", 1}});
  CHECK(pair_and_reindex(one("a", 1), one("b", 2), d).failure == PairingFailure::ExponentMismatch);
  auto e = abstract({"a", "b"}, {{"a", "b", 2}});
  CHECK(pair_and_reindex(one("a", 1), one("b", 1), e).failure == PairingFailure::NoMatching);
  auto f = abstract({"a", "b", "a2", "b2"}, {{"a", "b", 1}, {"a2", "b2", 1}, {"a", "b2", 1}});
  CHECK(pair_and_reindex(MultiTwist{{"a", 1}, {"a2", 1}}, MultiTwist{{"b", 1}, {"b2", 1}}, f).failure ==
        PairingFailure::ResidualIntersection);
}

TEST_CASE("split_common") {
  auto fig = load_config("figure1");
  for (long m : {-2L, 2L}) {
    auto s = split_common(with(fig.multitwists.at("A"), "d", m), with(fig.multitwists.at("B"), "d", m));
    CHECK(same_multitwist(s.common, one("d", m)));
    CHECK(same_multitwist(s.a, fig.multitwists.at("A")));
    CHECK(same_multitwist(s.b, fig.multitwists.at("B")));
  }
  CHECK(split_common(one("a", 1), one("b", 1)).common.empty());
  try {
    split_common(one("d", 2), one("d", 3));
    FAIL("no clash");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CommonCurveExponentClash);
  }
}

TEST_CASE("delete_braided_pair") {
  auto data = corpus_data("figure1");
  auto fig = load_config("figure1");
  auto [a, b] = delete_braided_pair(fig.multitwists.at("A"), fig.multitwists.at("B"), {"a1", "b1", 1}, data);
  CHECK(a.size() == 3);
  CHECK_FALSE(a.contains("a1"));
  CHECK_FALSE(b.contains("b1"));
  auto v = decide_braided(a, b, data);
  CHECK(v.braided);
  CHECK(v.decomposition.pairs.size() == 3);

  auto [e1, e2] = delete_braided_pair(one("a1", 1), one("b1", 1), {"a1", "b1", 1}, data);
  CHECK(e1.empty());
  CHECK(e2.empty());

  auto d = abstract({"a", "b1", "b2"}, {{"a", "b1", 1}, {"a", "b2", 1}});
  try {
    delete_braided_pair(one("a", 1), MultiTwist{{"b1", 1}, {"b2", 1}}, {"a", "b1", 1}, d);
    FAIL("deleted a pair with two partners");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
}

TEST_CASE("decide_braided on the corpus") {
  Drawing d(load_schema_file("genus5"));
  auto data = corpus_data("figure1", &d);
  auto fig = load_config("figure1");
  auto A = fig.multitwists.at("A"), B = fig.multitwists.at("B");
  auto v = decide_braided(A, B, data);
  REQUIRE(v.braided);
  CHECK(v.decomposition.pairs.size() == 4);
  CHECK(v.decomposition.common.empty());
  CHECK_FALSE(check_decomposition(v.decomposition, data));

  for (long m : {-2L, -1L, 1L, 2L}) {
    auto w = decide_braided(with(A, "d", m), with(B, "d", m), data);
    CAPTURE(m);
    REQUIRE(w.braided);
    CHECK(w.decomposition.pairs.size() == 4);
    CHECK(same_multitwist(w.decomposition.common, one("d", m)));
    auto ag = certify_with_oracle(d, with(A, "d", m), with(B, "d", m), *fig.test_set);
    CHECK(ag.agree);
  }

  auto clash = decide_braided(with(A, "d", 1), with(B, "d", 2), data);
  CHECK_FALSE(clash.braided);
  CHECK(clash.reason == NotBraidedReason::ExponentClash);

  auto g = abstract({"a", "b"}, {{"a", "b", 2}});
  auto nb = decide_braided(one("a", 1), one("b", 1), g);
  CHECK_FALSE(nb.braided);
  CHECK(nb.reason == NotBraidedReason::Residue);
  CHECK(same_multitwist(nb.residue_a, one("a", 1)));
  CHECK(same_multitwist(nb.residue_b, one("b", 1)));

  CHECK_THROWS_AS(decide_braided(MultiTwist{{"a1", 1}, {"b1", 1}}, B, data), Error);
}

TEST_CASE("single twists: braided iff i = 1 and equal exponents +-1") {
  Drawing d(load_schema_file("genus2"));
  auto data = corpus_data("genus2", &d);
  auto g = load_config("genus2");
  struct Case {
    const char *a, *b;
    long i;
  };
  for (Case c : {Case{"Dx1", "Dx2", 0}, Case{"Dx1", "Dy1", 1}, Case{"Dx1", "e2", 2}}) {
    CHECK(data.geometric(c.a, c.b) == c.i);
    for (long m : {-2L, -1L, 1L, 2L}) {
      for (long n : {-2L, -1L, 1L, 2L}) {
        CAPTURE(c.a); CAPTURE(c.b); CAPTURE(m); CAPTURE(n);
        auto ag = certify_with_oracle(d, one(c.a, m), one(c.b, n), *g.test_set, true);
        bool expect = c.i == 1 && m == n && std::labs(m) == 1;
        CHECK(ag.verdict.braided == expect);
        CHECK(ag.oracle == expect);
        if (expect) CHECK(ag.pairs_mapped == std::optional<bool>(true));
      }
    }
  }
}

TEST_CASE("verdict invariant under relabeling, permutation and swap") {
  auto c = load_config("figure1");
  auto data = corpus_data("figure1");
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    auto inst = random_braid_instance(c, rng);
    auto v = decide_braided(inst.a, inst.b, data);
    auto sw = decide_braided(inst.b, inst.a, data);
    CHECK(sw.braided == v.braided);
    auto pa = inst.a.components(), pb = inst.b.components();
    std::shuffle(pa.begin(), pa.end(), rng);
    std::shuffle(pb.begin(), pb.end(), rng);
    CHECK(decide_braided(MultiTwist(pa), MultiTwist(pb), data).braided == v.braided);
    auto rv = decide_braided(renamed(inst.a, "z."), renamed(inst.b, "z."), renamed(data, "z."));
    CHECK(rv.braided == v.braided);
    if (v.braided) {
      CHECK(rv.decomposition.pairs.size() == v.decomposition.pairs.size());
      CHECK_FALSE(check_decomposition(v.decomposition, data));
    }
  }
}

TEST_CASE("deletion order does not matter") {
  auto c = load_config("figure1");
  auto data = corpus_data("figure1");
  std::mt19937_64 rng(8);
  for (int round = 0; round < 200; ++round) {
    auto inst = random_braid_instance(c, rng);
    auto v = decide_braided(inst.a, inst.b, data);
    std::vector<std::pair<std::string, std::string>> order;
    for (auto& x : inst.a.components())
      for (auto& y : inst.b.components())
        if (data.geometric(x.curve, y.curve) == 1) order.push_back({x.curve.id, y.curve.id});
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      auto w = decide_braided(inst.a, inst.b, data, &order);
      CHECK(w.braided == v.braided);
      CHECK(same_multitwist(w.residue_a, v.residue_a));
      CHECK(same_multitwist(w.residue_b, v.residue_b));
      if (v.braided) CHECK(w.decomposition.pairs == v.decomposition.pairs);
    }
  }
}

TEST_CASE("factor_braid_hom") {
  auto data = corpus_data("figure1");
  SUBCASE("chain with a cyclic part") {
    BraidHomSpec s{3, {MultiTwist{{"a1", 1}, {"d", 1}}, MultiTwist{{"b1", 1}, {"d", 1}}}};
    auto r = factor_braid_hom(s, data);
    REQUIRE(r.factorization);
    REQUIRE(r.factorization->chains.size() == 1);
    CHECK(r.factorization->chains[0].curves == std::vector<CurveRef>{"a1", "b1"});
    CHECK(r.factorization->chains[0].sign == 1);
    CHECK(same_multitwist(r.factorization->cyclic, one("d", 1)));
    for (int i = 0; i < 2; ++i) CHECK(same_multitwist(reassemble(*r.factorization, i + 1), s.images[i]));
  }
  SUBCASE("trivial images") {
    auto r = factor_braid_hom({3, {MultiTwist{}, MultiTwist{}}}, data);
    REQUIRE(r.factorization);
    CHECK(r.factorization->chains.empty());
    CHECK(r.factorization->cyclic.empty());
  }
  SUBCASE("two chains") {
    BraidHomSpec s{3, {MultiTwist{{"a1", 1}, {"a2", 1}}, MultiTwist{{"b1", 1}, {"b2", 1}}}};
    auto r = factor_braid_hom(s, data);
    REQUIRE(r.factorization);
    CHECK(r.factorization->chains.size() == 2);
    CHECK(r.factorization->cyclic.empty());
  }
  SUBCASE("longer chain") {
    BraidHomSpec s{5, {one("a1", -1), one("b1", -1), one("g1", -1), one("b2", -1)}};
    auto r = factor_braid_hom(s, data);
    REQUIRE(r.factorization);
    REQUIRE(r.factorization->chains.size() == 1);
    CHECK(r.factorization->chains[0].curves.size() == 4);
    CHECK(r.factorization->chains[0].sign == -1);
    for (int i = 0; i < 4; ++i) CHECK(same_multitwist(reassemble(*r.factorization, i + 1), s.images[i]));
  }
  SUBCASE("relation fails") {
    auto r = factor_braid_hom({3, {one("a1", 1), one("a2", 1)}}, data);
    REQUIRE(r.rejection);
    CHECK(r.rejection->code == Errc::RelationFails);
    CHECK(r.rejection->i == 1);
  }
  SUBCASE("commutation fails") {
    auto r = factor_braid_hom({4, {one("a1", 1), one("b1", 1), one("a1", 1)}}, data);
    REQUIRE(r.rejection);
    CHECK(r.rejection->code == Errc::CommutationFails);
    CHECK(r.rejection->i == 1);
    CHECK(r.rejection->j == 3);
    CHECK(r.rejection->disjointness);
  }
}

}  // TEST_SUITE
