#include "mtw/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#ifndef MTW_DEFAULT_CORPUS_DIR
#define MTW_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace mtw {

namespace fs = std::filesystem;

std::string corpus_dir() {
  if (const char* env = std::getenv("MTW_CORPUS_DIR"); env && *env) return env;
  return MTW_DEFAULT_CORPUS_DIR;
}

namespace {

std::string resolve(const std::string& name, const char* sub) {
  bool bare = name.find('/') == std::string::npos && !name.ends_with(".json");
  if (!bare) return name;
  fs::path p = fs::path(corpus_dir()) / sub / (name + ".json");
  if (!fs::exists(p)) throw Error(Errc::InvalidInput, "no corpus entry " + p.string());
  return p.string();
}

}  // namespace

std::shared_ptr<const Schema> load_schema(const json& j) {
  return std::make_shared<const Schema>(Schema::load(j.get<SchemaDescription>()));
}

std::shared_ptr<const Schema> load_schema_file(const std::string& name_or_path) {
  return load_schema(read_json_file(resolve(name_or_path, "schemas")));
}

CorpusConfig parse_config(const json& j) {
  CorpusConfig c;
  c.name = j.value("name", std::string());
  const json& s = j.at("schema");
  if (s.is_string()) {
    c.schema_name = s.get<std::string>();
    c.schema = load_schema_file(c.schema_name);
  } else {
    c.schema = load_schema(s);
    c.schema_name = c.schema->name();
  }
  for (const auto& x : j.value("curves", json::array())) c.curves.push_back(curve_from_json(*c.schema, x));
  for (const auto& x : j.value("derived", json::array())) {
    DerivedCurve d{x.at("name").get<std::string>(), x.at("base").get<std::string>(), {}};
    for (const auto& t : x.at("apply")) d.apply.push_back(t.get<MultiTwist>());
    c.derived.push_back(std::move(d));
  }
  if (j.contains("test_set")) {
    const auto& t = j.at("test_set");
    c.test_set = TestSet{t.at("red").get<std::vector<std::string>>(), t.at("blue").get<std::vector<std::string>>()};
  }
  c.chain = j.value("chain", std::vector<std::string>{});
  c.pants = j.value("pants", std::vector<std::vector<std::string>>{});
  if (j.contains("multitwists"))
    for (const auto& [k, v] : j.at("multitwists").items()) c.multitwists[k] = v.get<MultiTwist>();
  return c;
}

json config_to_json(const CorpusConfig& c) {
  json j;
  j["name"] = c.name;
  if (!c.schema_name.empty()) j["schema"] = c.schema_name;
  else j["schema"] = c.schema->description();
  json curves = json::array();
  for (const auto& x : c.curves) curves.push_back(curve_to_json(*c.schema, x));
  j["curves"] = curves;
  if (!c.derived.empty()) {
    json d = json::array();
    for (const auto& x : c.derived) d.push_back(json{{"name", x.name}, {"base", x.base}, {"apply", x.apply}});
    j["derived"] = d;
  }
  if (c.test_set) j["test_set"] = json{{"red", c.test_set->red}, {"blue", c.test_set->blue}};
  if (!c.chain.empty()) j["chain"] = c.chain;
  if (!c.pants.empty()) j["pants"] = c.pants;
  if (!c.multitwists.empty()) {
    json m = json::object();
    for (const auto& [k, v] : c.multitwists) m[k] = v;
    j["multitwists"] = m;
  }
  return j;
}

CorpusConfig load_config(const std::string& name_or_path) {
  return parse_config(read_json_file(resolve(name_or_path, "configs")));
}

std::vector<std::string> list_configs() {
  std::vector<std::string> out;
  fs::path dir = fs::path(corpus_dir()) / "configs";
  if (!fs::exists(dir)) throw Error(Errc::InvalidInput, "corpus directory missing: " + dir.string());
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

Drawing build_drawing(const CorpusConfig& c) {
  Drawing d(c.schema);
  d.add_curves(c.curves);
  d.validate();
  for (const auto& x : c.derived) {
    EmbeddedCurve img = apply_sequence(d, x.apply, d.find(x.base));
    d.add_curve(x.name, img.word);
  }
  return d;
}

std::string canonicalize(const json& j) {
  if (j.contains("polygons")) {
    auto s = load_schema(j);
    return dump(json(s->description()));
  }
  if (j.contains("components")) return dump(json(j.get<MultiTwist>()));
  if (j.contains("sequence")) return dump(json(j.get<CrossingProfile>()));
  if (j.contains("schema")) {
    auto c = parse_config(j);
    build_drawing(c);  // rejects words that do not draw
    return dump(config_to_json(c));
  }
  if (j.is_array() || j.contains("geometric")) return dump(json(j.get<IntersectionData>()));
  throw Error(Errc::InvalidInput, "unrecognized document");
}

}  // namespace mtw
