#include "mtw/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mtw/engine.hpp"

namespace mtw {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Exit occurrences of a closed walk without immediate backtracking.
std::optional<std::vector<int>> walk(const Schema& s, std::mt19937_64& rng, int length) {
  std::vector<int> occs;
  int p = uniform(rng, 0, s.num_polygons() - 1);
  const auto& first = s.polygon(p);
  occs.push_back(first[uniform(rng, 0, static_cast<int>(first.size()) - 1)]);
  for (int k = 1; k < length; ++k) {
    int in = Schema::partner(occs.back());
    const auto& poly = s.polygon(s.polygon_of(in));
    int next;
    do {
      next = poly[uniform(rng, 0, static_cast<int>(poly.size()) - 1)];
    } while (next == in);
    occs.push_back(next);
  }
  int in = Schema::partner(occs.back());
  if (s.polygon_of(in) != s.polygon_of(occs.front()) || in == occs.front()) return std::nullopt;
  return occs;
}

}  // namespace

WalkResult random_curve(const std::shared_ptr<const Schema>& schema, std::mt19937_64& rng,
                        const WalkOptions& opt, const std::string& name) {
  WalkResult out;
  const Schema& s = *schema;
  for (int w = 0; w < opt.max_walks; ++w) {
    auto occs = walk(s, rng, uniform(rng, opt.min_length, opt.max_length));
    if (!occs) {
      ++out.rejected;
      continue;
    }
    // strands of this curve on each edge, in word order
    std::map<int, std::vector<int>> by_edge;
    for (int j = 0; j < static_cast<int>(occs->size()); ++j) by_edge[Schema::edge_of((*occs)[j])].push_back(j);
    for (int t = 0; t < opt.max_slot_orders; ++t) {
      std::vector<Crossing> word(occs->size());
      for (auto& [e, idx] : by_edge) {
        std::vector<int> slots(idx.size());
        std::iota(slots.begin(), slots.end(), 0);
        std::shuffle(slots.begin(), slots.end(), rng);
        for (std::size_t k = 0; k < idx.size(); ++k) word[idx[k]] = {(*occs)[idx[k]], slots[k]};
      }
      try {
        Drawing d(schema);
        int c = d.add_curve(name, word);
        check_simple(d, c);
        if (is_essential(d, c)) {
          out.curve = d.curve(c);
          return out;
        }
      } catch (const Error&) {
      }
      ++out.rejected;
    }
  }
  return out;
}

long random_exponent(std::mt19937_64& rng, long max_abs) {
  long v = std::uniform_int_distribution<long>(1, max_abs)(rng);
  return std::bernoulli_distribution(0.5)(rng) ? v : -v;
}

std::vector<MultiTwist> random_word(std::mt19937_64& rng, const std::vector<std::string>& pool,
                                    int length) {
  std::vector<MultiTwist> out;
  if (pool.empty()) return out;
  for (int k = 0; k < length; ++k) {
    const auto& c = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
    out.push_back(MultiTwist({TwistComponent{CurveRef(c), random_exponent(rng, 1)}}));
  }
  return out;
}

}  // namespace mtw
