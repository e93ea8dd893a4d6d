#pragma once

// Random curves and maps for seeded sweeps.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mtw/drawing.hpp"
#include "mtw/model.hpp"

namespace mtw {

std::uint64_t splitmix64(std::uint64_t x);

struct WalkOptions {
  int min_length = 1;
  int max_length = 6;
  int max_walks = 400;      // walks tried before giving up
  int max_slot_orders = 48; // slot assignments tried per walk
};

struct WalkResult {
  std::optional<EmbeddedCurve> curve;
  int rejected = 0;  // walks and slot orders that gave no simple essential curve
};

// Random walk of edge crossings closed up into a cyclic word, then strand
// orders per edge until the curve is simple and essential.
WalkResult random_curve(const std::shared_ptr<const Schema>& schema, std::mt19937_64& rng,
                        const WalkOptions& opt, const std::string& name);

// Random exponent in [-max_abs, max_abs] without 0.
long random_exponent(std::mt19937_64& rng, long max_abs);

// Product of `length` single twists along pool curves with exponent +-1.
std::vector<MultiTwist> random_word(std::mt19937_64& rng, const std::vector<std::string>& pool,
                                    int length);

}  // namespace mtw
