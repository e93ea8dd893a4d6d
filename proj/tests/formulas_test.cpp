#include <random>

#include "doctest.h"
#include "mtw/formulas.hpp"

using namespace mtw;

namespace {

std::shared_ptr<const IntersectionForm> symplectic(std::size_t genus) {
  std::vector<std::vector<long>> m(2 * genus, std::vector<long>(2 * genus, 0));
  for (std::size_t k = 0; k < genus; ++k) {
    m[2 * k][2 * k + 1] = 1;
    m[2 * k + 1][2 * k] = -1;
  }
  return std::make_shared<IntersectionForm>(m);
}

HomologyClass cls(std::shared_ptr<const IntersectionForm> f, std::vector<long> v) {
  return HomologyClass{std::move(v), std::move(f)};
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("positive bound") {
  PositiveTerm t[] = {{1, 1, 1}};
  auto r = positive_bound_check(1, 2, t);
  CHECK(r.holds);
  CHECK(r.slack == 0);
  r = positive_bound_check(4, 4, {});
  CHECK(r.holds);
  CHECK(r.slack == 0);
  PositiveTerm same[] = {{5, 0, 0}};
  CHECK(positive_bound_check(0, 0, same).holds);
  CHECK_FALSE(positive_bound_check(0, 3, t).holds);
}

TEST_CASE("ivanov bound") {
  IvanovTerm ex[] = {{2, 2, 2}, {-1, 1, 1}, {1, 1, 1}};
  auto r = ivanov_bound_check(0, 8, ex);
  CHECK(r.holds);
  CHECK(r.slack == 8);
  IvanovTerm cube[] = {{3, 2, 2}};
  CHECK(ivanov_bound_check(0, 10, cube).holds);
  CHECK_FALSE(ivanov_bound_check(0, 3, cube).holds);
  CHECK(ivanov_bound_check(5, 5, {}).holds);
}

TEST_CASE("hidden formula") {
  MultiTwist c{{"c1", 2}, {"c2", -1}, {"c3", 1}};
  auto p = make_profile("a", c, {"c2", "c1", "c1", "c3"});
  CurveTerm terms[] = {{2, 2}, {1, 1}, {1, 1}};
  CHECK(hidden_formula(p, terms) == 8);

  CHECK(hidden_formula(make_profile("a", MultiTwist{}, {}), {}) == 0);

  auto one = make_profile("a", MultiTwist{{"c", 1}}, {"c"});
  CurveTerm t1[] = {{1, 1}};
  CHECK(hidden_formula(one, t1) == 1);

  auto three = make_profile("a", MultiTwist{{"c", 3}}, {"c", "c"});
  CurveTerm t3[] = {{3, 2}};
  CHECK(hidden_formula(three, t3) == 12);
}

TEST_CASE("hidden formula rejects inconsistent data") {
  MultiTwist c{{"c1", 2}, {"c2", -1}};
  auto p = make_profile("a", c, {"c1", "c2"});
  CurveTerm wrong_count[] = {{2, 2}, {1, 1}};
  CHECK_THROWS_AS(hidden_formula(p, wrong_count), Error);
  CurveTerm wrong_n[] = {{3, 1}, {1, 1}};
  CHECK_THROWS_AS(hidden_formula(p, wrong_n), Error);
  CurveTerm short_list[] = {{2, 1}};
  CHECK_THROWS_AS(hidden_formula(p, short_list), Error);
}

TEST_CASE("homology action on the torus") {
  auto f = symplectic(1);
  auto x = cls(f, {1, 0}), y = cls(f, {0, 1});
  CHECK(pairing(x, y) == 1);
  CHECK(pairing(y, x) == -1);
  CHECK(pairing(x, x) == 0);
  ClassMap m{{"y", y}, {"x", x}};
  CHECK(twist_homology(MultiTwist{{"y", 1}}, x, m) == cls(f, {1, 1}));
  CHECK(twist_homology(MultiTwist{{"y", 2}}, x, m) == cls(f, {1, 2}));
  CHECK(twist_homology(MultiTwist{{"y", 5}}, y, m) == y);
  CHECK(algebraic_pair_after_twist(MultiTwist{{"y", 1}}, x, y, m) == 1);
  CHECK(algebraic_pair_after_twist(MultiTwist{}, x, y, m) == 1);
  CHECK_THROWS_AS(twist_homology(MultiTwist{{"z", 1}}, x, m), Error);
}

TEST_CASE("homology identities on random genus-3 data") {
  auto f = symplectic(3);
  std::mt19937_64 rng(5);
  auto vec = [&] {
    std::vector<long> v(6);
    for (auto& e : v) e = std::uniform_int_distribution<long>(-3, 3)(rng);
    return cls(f, v);
  };
  for (int round = 0; round < 300; ++round) {
    ClassMap m;
    std::vector<TwistComponent> comps;
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int j = 0; j < k; ++j) {
      std::string id = "c" + std::to_string(j);
      m.emplace(id, vec());
      comps.push_back({CurveRef(id), std::uniform_int_distribution<long>(-3, 3)(rng)});
    }
    // classes of disjoint curves pair to zero; keep only such families
    bool disjoint = true;
    for (auto& [a, va] : m)
      for (auto& [b, vb] : m) disjoint = disjoint && pairing(va, vb) == 0;
    if (!disjoint) continue;
    MultiTwist t(comps);
    auto v = vec(), w = vec();
    auto tv = twist_homology(t, v, m);
    CHECK(algebraic_pair_after_twist(t, v, w, m) == pairing(tv, w));
    CHECK(twist_homology(t.inverse(), tv, m) == v);
    CHECK(pairing(v, v) == 0);
    // linearity
    std::vector<long> sum(6);
    for (int i = 0; i < 6; ++i) sum[i] = v.coordinates[i] + w.coordinates[i];
    auto tw = twist_homology(t, w, m);
    std::vector<long> tsum(6);
    for (int i = 0; i < 6; ++i) tsum[i] = tv.coordinates[i] + tw.coordinates[i];
    CHECK(twist_homology(t, cls(f, sum), m).coordinates == tsum);
  }
}

TEST_CASE("intersection form validation") {
  CHECK_THROWS_AS(IntersectionForm({{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(IntersectionForm({{0, 1}}), Error);
}

}  // TEST_SUITE
