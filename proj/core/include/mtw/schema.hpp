#pragma once

// Polygon schemas: polygons with paired directed edges and marked points.
// Occurrence ids: 2e for label "x" (edge traversed along its direction when
// walking the polygon counterclockwise), 2e+1 for "x-".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtw {

struct PunctureSpec {
  int polygon = 0;
  // Corner k is the start point of the k-th edge occurrence. Without a
  // corner the puncture sits in the interior of the polygon.
  std::optional<int> corner;

  friend bool operator==(const PunctureSpec&, const PunctureSpec&) = default;
};

struct SchemaDescription {
  std::string name;
  std::vector<std::vector<std::string>> polygons;
  std::vector<PunctureSpec> punctures;
  std::optional<int> genus;  // checked against the Euler count when present

  friend bool operator==(const SchemaDescription&, const SchemaDescription&) = default;
};

class Schema {
 public:
  static Schema load(const SchemaDescription& description);

  const SchemaDescription& description() const { return desc_; }
  const std::string& name() const { return desc_.name; }

  int num_edges() const { return static_cast<int>(edge_names_.size()); }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  // Throws InvalidInput for unknown labels.
  int occurrence(std::string_view label) const;
  std::string occurrence_label(int occ) const;

  static int partner(int occ) { return occ ^ 1; }
  static int edge_of(int occ) { return occ >> 1; }
  static bool forward(int occ) { return (occ & 1) == 0; }

  int num_polygons() const { return static_cast<int>(polygons_.size()); }
  const std::vector<int>& polygon(int p) const { return polygons_[p]; }
  int polygon_of(int occ) const { return occ_polygon_[occ]; }
  int index_in_polygon(int occ) const { return occ_index_[occ]; }

  int num_vertices() const { return static_cast<int>(vertex_punctured_.size()); }
  int corner_vertex(int p, int k) const { return corner_vertex_[p][k]; }
  bool punctured(int v) const { return vertex_punctured_[v]; }

  int genus() const { return genus_; }
  int num_punctures() const { return num_punctures_; }
  // Euler characteristic of the surface with punctures removed.
  int euler_characteristic() const { return closed_euler_ - num_punctures_; }

 private:
  SchemaDescription desc_;
  std::vector<std::string> edge_names_;
  std::vector<std::vector<int>> polygons_;
  std::vector<int> occ_polygon_, occ_index_;
  std::vector<std::vector<int>> corner_vertex_;
  std::vector<bool> vertex_punctured_;
  int genus_ = 0, num_punctures_ = 0, closed_euler_ = 0;
};

}  // namespace mtw
