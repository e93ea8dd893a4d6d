#include "doctest.h"
#include "mtw/corpus.hpp"
#include "mtw/io.hpp"

using namespace mtw;

TEST_SUITE("io") {

TEST_CASE("multitwist and intersection data round-trip") {
  MultiTwist t{{"a", 2}, {"b", -1}};
  json j = t;
  CHECK(j.get<MultiTwist>() == t);

  IntersectionData d;
  d.set_geometric("a", "b", 3);
  d.set_algebraic("a", "b", -1);
  json k = d;
  auto back = k.get<IntersectionData>();
  CHECK(back.geometric("b", "a") == 3);
  CHECK(back.algebraic({"b", 1}, {"a", 1}) == std::optional<long>(1));
  CHECK(dump(json(back)) == dump(k));

  auto bare = json::parse(R"([["a", "b", 2]])").get<IntersectionData>();
  CHECK(bare.geometric("a", "b") == 2);
}

TEST_CASE("profile flags are recomputed") {
  auto p = make_profile("a", MultiTwist{{"c1", 2}, {"c2", -1}, {"c3", 1}}, {"c2", "c1", "c1", "c3"});
  json j = p;
  auto back = j.get<CrossingProfile>();
  CHECK(back.arc_flags == p.arc_flags);
  j["arc_flags"] = json::array({1, 1, 1, 1});
  CHECK_THROWS_AS(j.get<CrossingProfile>(), Error);
}

TEST_CASE("corpus files are canonical") {
  for (const auto& name : list_configs()) {
    CAPTURE(name);
    std::string path = corpus_dir() + "/configs/" + name + ".json";
    json j = read_json_file(path);
    std::string once = canonicalize(j);
    CHECK(canonicalize(json::parse(once)) == once);
    CHECK(once == dump(j));
    auto c = parse_config(j);
    CHECK(dump(config_to_json(c)) == once);
  }
  for (const char* s : {"torus", "genus2", "genus3", "genus5", "genus2-p2"}) {
    json j = read_json_file(corpus_dir() + "/schemas/" + s + ".json");
    CHECK(canonicalize(j) == dump(j));
  }
}

TEST_CASE("curve words use occurrence labels") {
  auto s = load_schema_file("genus2");
  auto c = curve_from_json(*s, json::parse(R"({"name": "a", "word": [["x1-", 0], ["y1", 0], ["y1", 1]]})"));
  CHECK(c.word.size() == 3);
  CHECK(curve_to_json(*s, c)["word"] == json::parse(R"([["x1-", 0], ["y1", 0], ["y1", 1]])"));
  CHECK_THROWS(curve_from_json(*s, json::parse(R"({"name": "a", "word": [["q", 0]]})")));
}

}  // TEST_SUITE
