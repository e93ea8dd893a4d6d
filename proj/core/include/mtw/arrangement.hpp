#pragma once

// Overlay of two families of curves (each family pairwise disjoint as drawn).
// Chords are straight segments between boundary points of a convex polygon,
// so two chords cross iff their endpoints interleave, and the order of
// crossings along a chord follows from the endpoint order.

#include <vector>

#include "mtw/drawing.hpp"

namespace mtw {

struct ChordCrossing {
  int red_curve, red_chord;
  int blue_curve, blue_chord;
  int red_order, blue_order;  // rank along each chord from its entry point
  int sign;                   // +1 when blue passes from the right of red to its left
  int polygon;
};

struct CornerVisit {
  int crossing;
  int in_curve, in_dir;    // boundary arrives along in_curve (dir +1 = curve orientation)
  int out_curve, out_dir;  // and leaves along out_curve
};

struct Region {
  int euler = 0;      // with punctures filled in
  int punctures = 0;
  int pieces = 0;
  std::vector<CornerVisit> corners;
  std::vector<std::pair<int, int>> sides;  // (curve, +1 left / -1 right), sorted, unique
  bool touches(int curve) const;
  int side_of(int curve) const;  // 0 when both or neither
};

class Arrangement {
 public:
  Arrangement(const Drawing& drawing, std::vector<int> red, std::vector<int> blue);

  const std::vector<ChordCrossing>& crossings() const { return crossings_; }
  const std::vector<Region>& regions() const { return regions_; }
  // Crossing ids on chord j of curve c, ordered from the chord's entry.
  const std::vector<int>& along(int c, int j) const;
  const std::vector<int>& red() const { return red_; }
  const std::vector<int>& blue() const { return blue_; }

  int count(int a, int b) const;
  int total() const { return static_cast<int>(crossings_.size()); }
  // Signed count for the ordered pair (a, b).
  int algebraic(int a, int b) const;
  // Curves crossed by c, in order along c (cyclic, starting from chord 0).
  std::vector<int> sequence(int c) const;

 private:
  std::vector<int> red_, blue_;
  std::vector<ChordCrossing> crossings_;
  std::vector<Region> regions_;
  std::vector<std::vector<std::vector<int>>> along_;  // curve -> chord -> crossings
  std::vector<int> slot_of_curve_;                     // curve -> index into along_
};

struct Bigon {
  int region;
  int first, second;  // crossing ids
};

std::vector<Bigon> find_bigons(const Arrangement& arr);

}  // namespace mtw
