#pragma once

// Shipped schemas and curve configurations. A configuration names a schema
// and lists curves in one shared slot numbering, plus optional derived
// curves (images of listed curves), a filling test set, curve pools for
// random instances and named multitwists.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mtw/engine.hpp"
#include "mtw/io.hpp"

namespace mtw {

// MTW_CORPUS_DIR when set, else the directory fixed at build time.
std::string corpus_dir();

std::shared_ptr<const Schema> load_schema(const json& j);
// A name without '/' or ".json" is looked up in <corpus>/schemas.
std::shared_ptr<const Schema> load_schema_file(const std::string& name_or_path);

struct DerivedCurve {
  std::string name, base;
  std::vector<MultiTwist> apply;  // product, last factor acts first
};

struct CorpusConfig {
  std::string name;
  std::string schema_name;
  std::shared_ptr<const Schema> schema;
  std::vector<EmbeddedCurve> curves;
  std::vector<DerivedCurve> derived;
  std::optional<TestSet> test_set;
  std::vector<std::string> chain;               // twist curves for random maps
  std::vector<std::vector<std::string>> pants;  // disjoint families
  std::map<std::string, MultiTwist> multitwists;
};

CorpusConfig parse_config(const json& j);
json config_to_json(const CorpusConfig& c);
// A name without '/' or ".json" is looked up in <corpus>/configs.
CorpusConfig load_config(const std::string& name_or_path);
std::vector<std::string> list_configs();

// Drawing with the listed curves followed by the derived ones.
Drawing build_drawing(const CorpusConfig& c);

// Parses and re-emits a schema or configuration file in canonical form.
std::string canonicalize(const json& j);

}  // namespace mtw
