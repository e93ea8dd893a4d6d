#pragma once

// Seeded property sweeps over random instances on corpus configurations.
// Instance k draws from its own generator seeded by (seed, k), so reports
// do not depend on the worker count.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mtw/braid.hpp"
#include "mtw/corpus.hpp"

namespace mtw {

inline const std::vector<std::string> kAllChecks = {"braid-agreement", "hidden", "homology", "ivanov",
                                                    "positive"};

struct SweepConfig {
  int samples = 100;
  std::uint64_t seed = 1;
  long max_exponent = 3;
  int max_crossings = 6;     // length of the random walk for test curves
  int max_twist_curves = 6;
  int max_map_length = 1;    // twists in the random map moving the twist curves
  std::vector<std::string> configs = {"torus", "genus2"};
  std::vector<std::string> checks = {"hidden", "ivanov", "positive", "homology"};
  int workers = 1;
  std::optional<int> only;  // run a single instance index
};

// Throws InvalidInput for samples < 1, non-positive bounds or unknown checks.
void validate(const SweepConfig& cfg);

enum class Outcome { Pass, Fail, Skip };

struct CheckResult {
  Outcome outcome = Outcome::Skip;
  std::string detail;
};

struct InstanceResult {
  int index = 0;
  std::string config;
  std::map<std::string, CheckResult> checks;
  int rejected_draws = 0;
  json summary;  // the drawn instance and measured values
};

struct SweepReport {
  SweepConfig config;
  std::vector<InstanceResult> instances;  // sorted by index
};

std::uint64_t instance_seed(std::uint64_t seed, int index);

InstanceResult run_instance(const SweepConfig& cfg, int index);
SweepReport run_sweep(const SweepConfig& cfg);

json report_json(const SweepReport& r);
std::string report_human(const SweepReport& r);

// A pair of multitwists on the chain of a configuration: disjoint
// consecutive-chain pairs, optionally perturbed so that about half of the
// instances are not braided.
struct BraidInstance {
  MultiTwist a, b;
  std::string label;
};
BraidInstance random_braid_instance(const CorpusConfig& c, std::mt19937_64& rng);

struct Agreement {
  BraidVerdict verdict;
  bool oracle = false;
  bool agree = false;
  // With diagnostics and a braided verdict: the type of each a_i, the orbit
  // size of each pair curve under tA tB tA, and whether tA tB sends each a_i
  // to b_i.
  std::map<std::string, CurveType> types;
  std::map<std::string, OrbitSize> orbits;
  std::optional<bool> pairs_mapped;
};

// decide_braided on measured data against the Alexander method.
Agreement certify_with_oracle(const Drawing& d, const MultiTwist& tA, const MultiTwist& tB,
                              const TestSet& test, bool diagnostics = false);
json agreement_to_json(const Agreement& a);

}  // namespace mtw
