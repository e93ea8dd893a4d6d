#include "mtw/arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "mtw/error.hpp"

namespace mtw {

bool Region::touches(int curve) const {
  for (auto& s : sides) {
    if (s.first == curve) return true;
  }
  return false;
}

int Region::side_of(int curve) const {
  int found = 0;
  for (auto& s : sides) {
    if (s.first != curve) continue;
    if (found != 0) return 0;
    found = s.second;
  }
  return found;
}

namespace {

struct Chord {
  int curve, index, family;
  long long u, v;  // entry and exit positions
  std::vector<int> xs;  // crossing ids, sorted along the chord
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

long long ccw(long long from, long long to, long long M) { return ((to - from) % M + M) % M; }

// Within one family no two chords may interleave.
void check_family(const std::vector<Chord>& chords, const std::vector<int>& ids, const Drawing& d) {
  std::vector<std::pair<long long, int>> ends;
  for (int id : ids) {
    ends.push_back({std::min(chords[id].u, chords[id].v), id});
    ends.push_back({std::max(chords[id].u, chords[id].v), id});
  }
  std::sort(ends.begin(), ends.end());
  std::vector<int> stack;
  std::vector<char> open(chords.size(), 0);
  for (auto& [pos, id] : ends) {
    if (!open[id]) {
      open[id] = 1;
      stack.push_back(id);
    } else {
      if (stack.empty() || stack.back() != id) {
        int other = stack.empty() ? id : stack.back();
        throw Error(Errc::NotGeneralPosition,
                    "curves '" + d.curve(chords[id].curve).name + "' and '" +
                        d.curve(chords[other].curve).name + "' cross inside one family");
      }
      stack.pop_back();
    }
  }
}

}  // namespace

Arrangement::Arrangement(const Drawing& drawing, std::vector<int> red, std::vector<int> blue)
    : red_(std::move(red)), blue_(std::move(blue)) {
  const Schema& schema = drawing.schema();
  const int E = schema.num_edges();
  slot_of_curve_.assign(drawing.num_curves(), -1);
  std::vector<int> family(drawing.num_curves(), -1);
  for (int c : red_) family[c] = 0;
  for (int c : blue_) {
    if (family[c] == 0) throw Error(Errc::InvalidInput, "curve in both families");
    family[c] = 1;
  }
  std::vector<int> selected;
  for (int c : red_) selected.push_back(c);
  for (int c : blue_) selected.push_back(c);
  for (int c : selected) {
    slot_of_curve_[c] = static_cast<int>(along_.size());
    along_.emplace_back(drawing.curve(c).word.size());
  }

  // Selected strands per edge, for edge segment numbering.
  std::vector<std::vector<int>> sel_slots(E);
  for (int c : selected) {
    for (auto& x : drawing.curve(c).word) sel_slots[Schema::edge_of(x.occ)].push_back(x.slot);
  }
  for (auto& v : sel_slots) std::sort(v.begin(), v.end());
  std::vector<int> seg_base(E + 1, 0);
  for (int e = 0; e < E; ++e) seg_base[e + 1] = seg_base[e] + static_cast<int>(sel_slots[e].size()) + 1;
  const int num_segments = seg_base[E];

  // Chords grouped by polygon.
  std::vector<std::vector<Chord>> chords(schema.num_polygons());
  for (int c : selected) {
    const auto& w = drawing.curve(c).word;
    const int L = static_cast<int>(w.size());
    for (int j = 0; j < L; ++j) {
      int p = drawing.chord_polygon(c, j);
      const Crossing& in = w[j];
      const Crossing& out = w[(j + 1) % L];
      chords[p].push_back({c, j, family[c], drawing.position(Schema::partner(in.occ), in.slot),
                           drawing.position(out.occ, out.slot), {}});
    }
  }

  struct Piece {
    std::vector<int> segments;
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> sides;
    std::vector<CornerVisit> corners;
  };
  std::vector<Piece> pieces;

  for (int p = 0; p < schema.num_polygons(); ++p) {
    auto& ch = chords[p];
    const long long M = drawing.polygon_size(p);
    std::vector<int> reds, blues;
    for (int i = 0; i < static_cast<int>(ch.size()); ++i) (ch[i].family == 0 ? reds : blues).push_back(i);
    check_family(ch, reds, drawing);
    check_family(ch, blues, drawing);

    // Crossings.
    const int first_crossing = static_cast<int>(crossings_.size());
    for (int ri : reds) {
      const Chord& r = ch[ri];
      const long long span = ccw(r.u, r.v, M);
      for (int bi : blues) {
        const Chord& b = ch[bi];
        bool bu_right = ccw(r.u, b.u, M) < span;
        bool bv_right = ccw(r.u, b.v, M) < span;
        if (bu_right == bv_right) continue;
        int id = static_cast<int>(crossings_.size());
        crossings_.push_back({r.curve, r.index, b.curve, b.index, 0, 0, bu_right ? 1 : -1, p});
        ch[ri].xs.push_back(id);
        ch[bi].xs.push_back(id);
      }
    }
    // Order along chords: by the position of the other chord's endpoint on
    // the counterclockwise arc from this chord's entry.
    for (auto& c : ch) {
      const long long span = ccw(c.u, c.v, M);
      std::vector<std::pair<long long, int>> keyed;
      for (int id : c.xs) {
        const ChordCrossing& x = crossings_[id];
        bool is_red = c.family == 0;
        int oc = is_red ? x.blue_curve : x.red_curve;
        int oj = is_red ? x.blue_chord : x.red_chord;
        const auto& w = drawing.curve(oc).word;
        const int L = static_cast<int>(w.size());
        long long ou = drawing.position(Schema::partner(w[oj].occ), w[oj].slot);
        long long ov = drawing.position(w[(oj + 1) % L].occ, w[(oj + 1) % L].slot);
        long long du = ccw(c.u, ou, M), dv = ccw(c.u, ov, M);
        keyed.push_back({du < span ? du : dv, id});
      }
      std::sort(keyed.begin(), keyed.end());
      c.xs.clear();
      for (int k = 0; k < static_cast<int>(keyed.size()); ++k) {
        int id = keyed[k].second;
        c.xs.push_back(id);
        if (c.family == 0) crossings_[id].red_order = k; else crossings_[id].blue_order = k;
      }
      along_[slot_of_curve_[c.curve]][c.index] = c.xs;
    }

    // Planar map of the polygon.
    struct BNode {
      long long pos;
      int corner;  // occurrence index in polygon, or -1
      int chord;   // chord id for strand points
      bool is_entry;
    };
    std::vector<BNode> bnodes;
    const auto& occs = schema.polygon(p);
    for (int k = 0; k < static_cast<int>(occs.size()); ++k) {
      bnodes.push_back({drawing.corner_position(occs[k]), k, -1, false});
    }
    for (int i = 0; i < static_cast<int>(ch.size()); ++i) {
      bnodes.push_back({ch[i].u, -1, i, true});
      bnodes.push_back({ch[i].v, -1, i, false});
    }
    std::sort(bnodes.begin(), bnodes.end(), [](const BNode& a, const BNode& b) { return a.pos < b.pos; });
    const int B = static_cast<int>(bnodes.size());
    const int X = static_cast<int>(crossings_.size()) - first_crossing;
    const int num_nodes = B + X;

    // Half-edges come in twin pairs (h, h ^ 1).
    struct Half {
      int to;
      int curve;  // -1 for boundary arcs
      int dir;
      int bnode;  // boundary arcs: the start node of the counterclockwise arc
    };
    std::vector<Half> half;
    std::vector<std::vector<int>> rot(num_nodes);
    std::vector<int> arc_next(B), arc_prev(B);
    for (int i = 0; i < B; ++i) {
      int h = static_cast<int>(half.size());
      half.push_back({(i + 1) % B, -1, 1, i});
      half.push_back({i, -1, -1, i});
      arc_next[i] = h;
      arc_prev[(i + 1) % B] = h + 1;
    }
    std::vector<int> chord_out(B, -1);
    std::vector<int> bnode_of_entry(ch.size()), bnode_of_exit(ch.size());
    for (int i = 0; i < B; ++i) {
      if (bnodes[i].chord < 0) continue;
      (bnodes[i].is_entry ? bnode_of_entry : bnode_of_exit)[bnodes[i].chord] = i;
    }
    // For each crossing: outgoing half-edges (red fwd, red back, blue fwd, blue back).
    std::vector<std::array<int, 4>> xout(X, {-1, -1, -1, -1});
    for (int i = 0; i < static_cast<int>(ch.size()); ++i) {
      const Chord& c = ch[i];
      std::vector<int> seq;  // node ids
      seq.push_back(bnode_of_entry[i]);
      for (int id : c.xs) seq.push_back(B + (id - first_crossing));
      seq.push_back(bnode_of_exit[i]);
      int base = c.family == 0 ? 0 : 2;
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        int h = static_cast<int>(half.size());
        half.push_back({seq[k + 1], c.curve, 1, -1});
        half.push_back({seq[k], c.curve, -1, -1});
        if (k == 0) chord_out[seq[0]] = h;
        if (k + 2 == seq.size()) chord_out[seq[k + 1]] = h + 1;
        if (k > 0) xout[seq[k] - B][base + 0] = h;
        if (k + 2 < seq.size()) xout[seq[k + 1] - B][base + 1] = h + 1;
      }
    }
    for (int i = 0; i < B; ++i) {
      if (bnodes[i].chord < 0) {
        rot[i] = {arc_next[i], arc_prev[i]};
      } else {
        rot[i] = {arc_next[i], chord_out[i], arc_prev[i]};
      }
    }
    for (int x = 0; x < X; ++x) {
      // blue moves to the left of red exactly when the sign is positive
      bool blue_fwd_goes_left = crossings_[first_crossing + x].sign > 0;
      int b_left = blue_fwd_goes_left ? xout[x][2] : xout[x][3];
      int b_right = blue_fwd_goes_left ? xout[x][3] : xout[x][2];
      rot[B + x] = {xout[x][0], b_left, xout[x][1], b_right};
    }
    std::vector<int> rot_index(half.size(), -1);
    std::vector<int> origin(half.size(), -1);
    for (int n = 0; n < num_nodes; ++n) {
      for (int k = 0; k < static_cast<int>(rot[n].size()); ++k) {
        if (rot[n][k] < 0) throw Error(Errc::NotGeneralPosition, "incomplete rotation system");
        rot_index[rot[n][k]] = k;
        origin[rot[n][k]] = n;
      }
    }
    auto next = [&](int h) {
      int n = half[h].to;
      int t = h ^ 1;
      int deg = static_cast<int>(rot[n].size());
      return rot[n][(rot_index[t] + deg - 1) % deg];
    };

    // Boundary arc -> edge segment / vertex.
    std::vector<int> arc_segment(B, -1);
    {
      int occ_k = -1, t = 0;
      // bnodes[0] is at position 0, the corner of occurrence 0
      for (int i = 0; i < B; ++i) {
        if (bnodes[i].corner >= 0) {
          occ_k = bnodes[i].corner;
          t = 0;
        } else {
          ++t;
        }
        int occ = occs[occ_k];
        int e = Schema::edge_of(occ);
        int nsel = static_cast<int>(sel_slots[e].size());
        int seg = Schema::forward(occ) ? t : nsel - t;
        arc_segment[i] = seg_base[e] + seg;
      }
    }

    std::vector<char> visited(half.size(), 0);
    for (int i = 0; i < B; ++i) visited[arc_next[i] ^ 1] = 1;  // outer face
    for (int start = 0; start < static_cast<int>(half.size()); ++start) {
      if (visited[start]) continue;
      Piece piece;
      int h = start;
      do {
        visited[h] = 1;
        const Half& he = half[h];
        int nh = next(h);
        if (he.curve < 0) {
          int i = he.bnode;
          piece.segments.push_back(arc_segment[i]);
          if (bnodes[i].corner >= 0) piece.vertices.push_back(schema.corner_vertex(p, bnodes[i].corner));
        } else {
          piece.sides.push_back({he.curve, he.dir});
        }
        if (he.to >= B) {
          const Half& hn = half[nh];
          piece.corners.push_back({first_crossing + (he.to - B), he.curve, he.dir, hn.curve, hn.dir});
        }
        h = nh;
      } while (h != start);
      pieces.push_back(std::move(piece));
    }
  }

  // Glue pieces across edge segments.
  const int P = static_cast<int>(pieces.size());
  UnionFind uf(P);
  std::vector<int> seg_owner(num_segments, -1);
  for (int i = 0; i < P; ++i) {
    for (int s : pieces[i].segments) {
      if (seg_owner[s] < 0) seg_owner[s] = i; else uf.unite(seg_owner[s], i);
    }
  }
  std::map<int, int> region_of_root;
  std::vector<std::set<int>> seg_sets, vert_sets;
  std::vector<std::set<std::pair<int, int>>> side_sets;
  for (int i = 0; i < P; ++i) {
    int r = uf.find(i);
    auto [it, inserted] = region_of_root.emplace(r, static_cast<int>(regions_.size()));
    if (inserted) {
      regions_.emplace_back();
      seg_sets.emplace_back();
      vert_sets.emplace_back();
      side_sets.emplace_back();
    }
    int g = it->second;
    Region& reg = regions_[g];
    reg.pieces += 1;
    seg_sets[g].insert(pieces[i].segments.begin(), pieces[i].segments.end());
    vert_sets[g].insert(pieces[i].vertices.begin(), pieces[i].vertices.end());
    side_sets[g].insert(pieces[i].sides.begin(), pieces[i].sides.end());
    reg.corners.insert(reg.corners.end(), pieces[i].corners.begin(), pieces[i].corners.end());
  }
  for (std::size_t g = 0; g < regions_.size(); ++g) {
    Region& reg = regions_[g];
    int punct = 0;
    for (int v : vert_sets[g]) punct += schema.punctured(v) ? 1 : 0;
    reg.punctures = punct;
    reg.euler = static_cast<int>(vert_sets[g].size()) - static_cast<int>(seg_sets[g].size()) + reg.pieces;
    reg.sides.assign(side_sets[g].begin(), side_sets[g].end());
  }
}

const std::vector<int>& Arrangement::along(int c, int j) const {
  int s = c < static_cast<int>(slot_of_curve_.size()) ? slot_of_curve_[c] : -1;
  if (s < 0) throw Error(Errc::InvalidInput, "curve not part of the arrangement");
  return along_[s][j];
}

int Arrangement::count(int a, int b) const {
  int n = 0;
  for (auto& x : crossings_) {
    if ((x.red_curve == a && x.blue_curve == b) || (x.red_curve == b && x.blue_curve == a)) ++n;
  }
  return n;
}

int Arrangement::algebraic(int a, int b) const {
  int s = 0;
  for (auto& x : crossings_) {
    if (x.red_curve == a && x.blue_curve == b) s += x.sign;
    else if (x.red_curve == b && x.blue_curve == a) s -= x.sign;
  }
  return s;
}

std::vector<int> Arrangement::sequence(int c) const {
  int s = slot_of_curve_[c];
  std::vector<int> out;
  for (auto& chord : along_[s]) {
    for (int id : chord) {
      const auto& x = crossings_[id];
      out.push_back(x.red_curve == c ? x.blue_curve : x.red_curve);
    }
  }
  return out;
}

std::vector<Bigon> find_bigons(const Arrangement& arr) {
  std::vector<Bigon> out;
  const auto& regions = arr.regions();
  for (int g = 0; g < static_cast<int>(regions.size()); ++g) {
    const Region& r = regions[g];
    if (r.euler != 1 || r.punctures != 0 || r.corners.size() != 2) continue;
    int a = r.corners[0].crossing, b = r.corners[1].crossing;
    if (a == b) continue;
    const auto& xa = arr.crossings()[a];
    const auto& xb = arr.crossings()[b];
    if (xa.red_curve != xb.red_curve || xa.blue_curve != xb.blue_curve) continue;
    out.push_back({g, a, b});
  }
  return out;
}

}  // namespace mtw
