#include "mtw/schema.hpp"

#include <map>
#include <numeric>

#include "mtw/error.hpp"

namespace mtw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Schema Schema::load(const SchemaDescription& description) {
  Schema s;
  s.desc_ = description;
  if (description.polygons.empty()) throw Error(Errc::BadPairing, "schema has no polygons");

  std::vector<std::vector<std::string>> polys = description.polygons;
  for (auto& poly : polys) {
    if (poly.empty()) throw Error(Errc::BadPairing, "empty polygon");
  }

  // Interior punctures become slits: pairs "p", "p-" placed before the
  // polygon's first edge. The far end of a slit is a vertex of its own.
  std::vector<std::pair<int, int>> corner_punctures;  // (polygon, corner) after slits
  std::vector<std::vector<std::string>> slits(polys.size());
  int slit_id = 0;
  for (const auto& pu : description.punctures) {
    if (pu.polygon < 0 || pu.polygon >= static_cast<int>(polys.size())) {
      throw Error(Errc::BadPairing, "puncture refers to a missing polygon");
    }
    if (pu.corner) {
      int n = static_cast<int>(polys[pu.polygon].size());
      if (*pu.corner < 0 || *pu.corner >= n) throw Error(Errc::BadPairing, "puncture corner out of range");
      continue;
    }
    auto& sl = slits[pu.polygon];
    corner_punctures.push_back({pu.polygon, static_cast<int>(sl.size()) + 1});
    std::string label = "_p" + std::to_string(slit_id++);
    sl.push_back(label);
    sl.push_back(label + "-");
  }
  for (const auto& pu : description.punctures) {
    if (pu.corner) {
      corner_punctures.push_back(
          {pu.polygon, *pu.corner + static_cast<int>(slits[pu.polygon].size())});
    }
  }
  for (std::size_t p = 0; p < polys.size(); ++p) {
    polys[p].insert(polys[p].begin(), slits[p].begin(), slits[p].end());
  }

  std::map<std::string, int> edge_index;
  std::map<std::string, std::vector<bool>> seen;  // base -> directions encountered
  for (auto& poly : polys) {
    for (auto& label : poly) {
      bool rev = label.size() > 1 && label.back() == '-';
      std::string base = rev ? label.substr(0, label.size() - 1) : label;
      if (base.empty()) throw Error(Errc::BadPairing, "empty edge label");
      seen[base].push_back(rev);
    }
  }
  for (auto& [base, dirs] : seen) {
    if (dirs.size() != 2) {
      throw Error(Errc::BadPairing, "edge '" + base + "' occurs " + std::to_string(dirs.size()) +
                                        " times");
    }
    if (dirs[0] == dirs[1]) {
      throw Error(Errc::NonOrientable, "edge '" + base + "' is glued with the same direction");
    }
  }
  // Edge numbering follows first appearance so ids are stable.
  for (auto& poly : polys) {
    for (auto& label : poly) {
      bool rev = label.back() == '-' && label.size() > 1;
      std::string base = rev ? label.substr(0, label.size() - 1) : label;
      if (!edge_index.count(base)) {
        edge_index[base] = static_cast<int>(s.edge_names_.size());
        s.edge_names_.push_back(base);
      }
    }
  }
  const int E = s.num_edges();
  s.occ_polygon_.assign(2 * E, -1);
  s.occ_index_.assign(2 * E, -1);
  for (std::size_t p = 0; p < polys.size(); ++p) {
    std::vector<int> occs;
    for (std::size_t k = 0; k < polys[p].size(); ++k) {
      const auto& label = polys[p][k];
      bool rev = label.back() == '-' && label.size() > 1;
      std::string base = rev ? label.substr(0, label.size() - 1) : label;
      int occ = 2 * edge_index[base] + (rev ? 1 : 0);
      occs.push_back(occ);
      s.occ_polygon_[occ] = static_cast<int>(p);
      s.occ_index_[occ] = static_cast<int>(k);
    }
    s.polygons_.push_back(std::move(occs));
  }

  UnionFind poly_uf(static_cast<int>(polys.size()));
  for (int e = 0; e < E; ++e) poly_uf.unite(s.occ_polygon_[2 * e], s.occ_polygon_[2 * e + 1]);
  for (std::size_t p = 1; p < polys.size(); ++p) {
    if (poly_uf.find(0) != poly_uf.find(static_cast<int>(p))) {
      throw Error(Errc::Disconnected, "polygon " + std::to_string(p) + " is not glued to polygon 0");
    }
  }

  // Endpoint ids: 2e = tail of e, 2e+1 = head of e.
  UnionFind vuf(2 * E);
  for (auto& occs : s.polygons_) {
    const int n = static_cast<int>(occs.size());
    for (int k = 0; k < n; ++k) {
      int occ = occs[k], nxt = occs[(k + 1) % n];
      int end_here = forward(occ) ? 2 * edge_of(occ) + 1 : 2 * edge_of(occ);
      int start_next = forward(nxt) ? 2 * edge_of(nxt) : 2 * edge_of(nxt) + 1;
      vuf.unite(end_here, start_next);
    }
  }
  std::map<int, int> vid;
  for (int x = 0; x < 2 * E; ++x) {
    int r = vuf.find(x);
    if (!vid.count(r)) vid.emplace(r, static_cast<int>(vid.size()));
  }
  const int V = static_cast<int>(vid.size());
  s.vertex_punctured_.assign(V, false);
  s.corner_vertex_.resize(s.polygons_.size());
  for (std::size_t p = 0; p < s.polygons_.size(); ++p) {
    for (int occ : s.polygons_[p]) {
      int start = forward(occ) ? 2 * edge_of(occ) : 2 * edge_of(occ) + 1;
      s.corner_vertex_[p].push_back(vid[vuf.find(start)]);
    }
  }
  for (auto [p, k] : corner_punctures) {
    int v = s.corner_vertex_[p][k];
    if (s.vertex_punctured_[v]) throw Error(Errc::BadPairing, "vertex punctured twice");
    s.vertex_punctured_[v] = true;
    ++s.num_punctures_;
  }
  s.closed_euler_ = V - E + static_cast<int>(polys.size());
  if (s.closed_euler_ % 2 != 0 || s.closed_euler_ > 2) {
    throw Error(Errc::BadPairing, "Euler characteristic " + std::to_string(s.closed_euler_) +
                                      " is not that of a closed orientable surface");
  }
  s.genus_ = (2 - s.closed_euler_) / 2;
  if (description.genus && *description.genus != s.genus_) {
    throw Error(Errc::BadPairing, "declared genus " + std::to_string(*description.genus) +
                                      " but the gluing gives genus " + std::to_string(s.genus_));
  }
  return s;
}

int Schema::occurrence(std::string_view label) const {
  bool rev = label.size() > 1 && label.back() == '-';
  std::string_view base = rev ? label.substr(0, label.size() - 1) : label;
  for (int e = 0; e < num_edges(); ++e) {
    if (edge_names_[e] == base) return 2 * e + (rev ? 1 : 0);
  }
  throw Error(Errc::InvalidInput, "unknown edge label '" + std::string(label) + "'");
}

std::string Schema::occurrence_label(int occ) const {
  return forward(occ) ? edge_names_[edge_of(occ)] : edge_names_[edge_of(occ)] + "-";
}

}  // namespace mtw
