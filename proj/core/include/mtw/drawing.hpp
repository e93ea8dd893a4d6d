#pragma once

// Curves drawn on a schema. A curve is a cyclic word of edge crossings; each
// crossing names the occurrence the curve leaves through and its slot, the
// rank of the strand along the edge direction among all strands of the
// drawing. Chord j runs from crossing j (entered through the partner
// occurrence) to crossing j+1.

#include <memory>
#include <string>
#include <vector>

#include "mtw/schema.hpp"

namespace mtw {

struct Crossing {
  int occ;
  int slot;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct EmbeddedCurve {
  std::string name;
  std::vector<Crossing> word;
};

// Ordering key used while strands are inserted; committed to dense slots.
struct SlotKey {
  long long major;
  long long minor;
  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
};

struct PendingCrossing {
  int occ;
  SlotKey key;
};

class Drawing {
 public:
  explicit Drawing(std::shared_ptr<const Schema> schema);

  const Schema& schema() const { return *schema_; }
  std::shared_ptr<const Schema> schema_ptr() const { return schema_; }

  int num_curves() const { return static_cast<int>(curves_.size()); }
  const EmbeddedCurve& curve(int c) const { return curves_[c]; }
  // Index of the curve with this name; throws InvalidInput when missing.
  int find(const std::string& name) const;
  int strands(int edge) const { return strand_count_[edge]; }

  // Adds curves whose slots are ranks among themselves; their strands are
  // placed after the existing ones on every edge.
  int add_curve(const std::string& name, const std::vector<Crossing>& word);
  // Adds a set of curves sharing one slot numbering (as in a file).
  std::vector<int> add_curves(const std::vector<EmbeddedCurve>& curves);
  // Parallel copy on the right-hand side of curve c.
  int add_copy(int c, const std::string& name, bool reversed = false);
  void rename(int c, const std::string& name) { curves_[c].name = name; }

  // Replaces the words of some curves. Other strands keep key (2 slot, 0);
  // slots are renumbered afterwards.
  void replace(const std::vector<std::pair<int, std::vector<PendingCrossing>>>& words);
  void append(const std::string& name, const std::vector<PendingCrossing>& word);

  static SlotKey key_of(const Crossing& x) { return {2LL * x.slot, 0}; }

  // Boundary position (counterclockwise, within the polygon) of the point
  // where a strand at (occ, slot) meets occurrence occ.
  long long position(int occ, int slot) const;
  long long corner_position(int occ) const { return offset_[occ]; }
  long long polygon_size(int p) const { return polygon_size_[p]; }

  // Polygon of chord j of curve c; throws InvalidCurve when consecutive
  // crossings do not share a polygon.
  int chord_polygon(int c, int j) const;

  // Checks slot density, traversability and non-empty words.
  void validate() const;

  // Drops innermost back-and-forth crossings of the same edge occurrence.
  // Returns the number of crossings removed.
  int remove_backtracks(int c);

  // Signed crossing counts with each schema edge.
  std::vector<long> edge_vector(int c) const;

 private:
  void commit(std::vector<std::vector<PendingCrossing>>& pending);
  void recompute_offsets();

  std::shared_ptr<const Schema> schema_;
  std::vector<EmbeddedCurve> curves_;
  std::vector<int> strand_count_;
  std::vector<long long> offset_;        // per occurrence: position of its start corner
  std::vector<long long> polygon_size_;  // number of boundary positions
};

// Reversal keeps the chord structure: the word is read backwards and every
// crossing leaves through the partner occurrence.
std::vector<Crossing> reversed_word(const std::vector<Crossing>& word);

}  // namespace mtw
