#include "mtw/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mtw/error.hpp"

namespace mtw {

namespace {

// Handedness of the twist helix relative to the crossing sign convention.
// Pinned by the torus check tau_(0,1)(1,0) = (1,1).
constexpr int kTwistHand = -1;

// Strands added beside strand s share the gap with strands added beside its
// neighbour. Minor keys near -kHug hug the lower strand, near +kHug the upper.
constexpr long long kHug = 1LL << 50;

struct Place {
  int chord;
  int order;
};

Place place_on(const ChordCrossing& x, int curve) {
  if (x.red_curve == curve) return {x.red_chord, x.red_order};
  return {x.blue_chord, x.blue_order};
}

// Word crossings passed when moving from a to b along a curve of length L.
int passed(Place a, Place b, int L, int dir) {
  if (dir > 0) {
    int cnt = ((b.chord - a.chord) % L + L) % L;
    if (cnt == 0 && b.order < a.order) cnt = L;
    return cnt;
  }
  int cnt = ((a.chord - b.chord) % L + L) % L;
  if (cnt == 0 && b.order > a.order) cnt = L;
  return cnt;
}


struct Push {
  Place from, to;  // the pushed side runs forward along P from `from` to `to`
  int removed;     // word crossings of P on that side
  std::vector<PendingCrossing> copies;
};

// Replacement for the side of P on bigon b: a parallel copy of the fixed
// side, drawn just beyond the fixed curve.
Push push_across(const Drawing& d, const Arrangement& arr, const Bigon& b, int P) {
  const Region& r = arr.regions()[b.region];
  const CornerVisit& v1 = r.corners[0].out_curve == P ? r.corners[0] : r.corners[1];
  const CornerVisit& v2 = r.corners[0].out_curve == P ? r.corners[1] : r.corners[0];
  const int F = v1.in_curve;
  const int d1 = v1.out_dir;
  const ChordCrossing& start = arr.crossings()[d1 > 0 ? v1.crossing : v2.crossing];
  const ChordCrossing& end = arr.crossings()[d1 > 0 ? v2.crossing : v1.crossing];
  const int beta_dir = d1 > 0 ? -v1.in_dir : v1.in_dir;
  const int away = -r.side_of(F);
  if (away == 0) throw Error(Errc::InvalidCurve, "bigon touches its fixed side twice");

  const auto& fw = d.curve(F).word;
  const int LP = static_cast<int>(d.curve(P).word.size());
  const int LF = static_cast<int>(fw.size());
  Push push{place_on(start, P), place_on(end, P), 0, {}};
  push.removed = passed(push.from, push.to, LP, 1);
  const Place fs = place_on(start, F), fe = place_on(end, F);
  const int cnt_f = passed(fs, fe, LF, beta_dir);
  for (int i = 0; i < cnt_f; ++i) {
    int idx = beta_dir > 0 ? (fs.chord + 1 + i) % LF : ((fs.chord - i) % LF + LF) % LF;
    const Crossing& x = fw[idx];
    int exit = beta_dir > 0 ? x.occ : Schema::partner(x.occ);
    int toward = away * (Schema::forward(x.occ) ? 1 : -1);
    push.copies.push_back({exit, {2LL * x.slot + toward, -toward * kHug}});
  }
  return push;
}

// Applies pushes with pairwise disjoint sides to the word of P.
std::vector<PendingCrossing> pushed_word(const Drawing& d, int P, std::vector<Push> pushes) {
  const auto& pw = d.curve(P).word;
  const int L = static_cast<int>(pw.size());
  std::sort(pushes.begin(), pushes.end(), [](const Push& a, const Push& b) {
    return std::pair(a.from.chord, a.from.order) < std::pair(b.from.chord, b.from.order);
  });
  std::vector<char> removed(L, 0);
  std::vector<std::vector<const Push*>> after(L);
  for (const Push& p : pushes) {
    for (int i = 1; i <= p.removed; ++i) removed[(p.from.chord + i) % L] = 1;
    after[p.from.chord].push_back(&p);
  }
  std::vector<PendingCrossing> out;
  for (int i = 0; i < L; ++i) {
    if (!removed[i]) out.push_back({pw[i].occ, Drawing::key_of(pw[i])});
    for (const Push* p : after[i]) out.insert(out.end(), p->copies.begin(), p->copies.end());
  }
  if (out.empty()) throw Error(Errc::InvalidCurve, "curve '" + d.curve(P).name + "' is contractible");
  return out;
}

std::vector<int> ids_of(const Drawing& d, const MultiTwist& t) {
  std::vector<int> ids;
  for (auto& c : t.components()) ids.push_back(d.find(c.curve.id));
  return ids;
}

}  // namespace

Drawing extract(const Drawing& d, const std::vector<int>& curves) {
  Drawing out(d.schema_ptr());
  std::vector<EmbeddedCurve> cs;
  for (int c : curves) cs.push_back(d.curve(c));
  if (!cs.empty()) out.add_curves(cs);
  return out;
}

int reduce(Drawing& d, const std::vector<int>& red, const std::vector<int>& blue,
           std::mt19937_64* rng) {
  int removed = 0;
  int expected = -1;
  while (true) {
    Arrangement arr(d, red, blue);
    // Straight chords may shed further crossings, never add them.
    if (expected >= 0 && arr.total() > expected) {
      throw Error(Errc::InvalidCurve, "bigon removal left " + std::to_string(arr.total()) +
                                          " crossings, expected " + std::to_string(expected));
    }
    auto bigons = find_bigons(arr);
    if (bigons.empty()) break;
    std::vector<std::pair<int, std::vector<PendingCrossing>>> words;
    int count = 0;
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, bigons.size() - 1);
      const Bigon& b = bigons[pick(*rng)];
      int P = arr.crossings()[b.first].red_curve;
      words.push_back({P, pushed_word(d, P, {push_across(d, arr, b, P)})});
      count = 1;
    } else {
      // Bigons are disjoint faces, so those sharing no crossing can be
      // removed together. A side covering all of P goes alone.
      std::map<int, std::vector<Push>> by_curve;
      std::set<int> used;
      for (const Bigon& b : bigons) {
        if (used.count(b.first) || used.count(b.second)) continue;
        int P = arr.crossings()[b.first].red_curve;
        Push p = push_across(d, arr, b, P);
        auto& list = by_curve[P];
        const int L = static_cast<int>(d.curve(P).word.size());
        if (!list.empty() && (p.removed == L || list.front().removed == L)) continue;
        used.insert(b.first);
        used.insert(b.second);
        list.push_back(std::move(p));
        ++count;
      }
      for (auto& [P, list] : by_curve) words.push_back({P, pushed_word(d, P, std::move(list))});
    }
    expected = arr.total() - 2 * count;
    d.replace(words);
    removed += count;
  }
  return removed;
}

void check_simple(const Drawing& d, int c) { Arrangement arr(d, {c}, {}); }

bool is_essential(const Drawing& d, int c) {
  Arrangement arr(d, {c}, {});
  for (const Region& r : arr.regions()) {
    if (r.euler == 1 && r.punctures <= 1) return false;
  }
  return true;
}

void make_disjoint(Drawing& d, const std::vector<int>& curves) {
  for (std::size_t i = 1; i < curves.size(); ++i) {
    std::vector<int> done(curves.begin(), curves.begin() + static_cast<long>(i));
    reduce(d, {curves[i]}, done);
    Arrangement arr(d, {curves[i]}, done);
    if (arr.total() != 0) {
      int other = arr.crossings().front().blue_curve;
      throw Error(Errc::NotDisjoint, "curves '" + d.curve(curves[i]).name + "' and '" +
                                         d.curve(other).name + "' intersect");
    }
  }
}

int geometric_intersection(const Drawing& d, int x, int y) {
  if (x == y) return 0;
  Drawing e = extract(d, {x, y});
  reduce(e, {0}, {1});
  return Arrangement(e, {0}, {1}).total();
}

int algebraic_intersection(const Drawing& d, int x, int y) {
  if (x == y) return 0;
  return Arrangement(d, {x}, {y}).algebraic(x, y);
}

bool isotopic(const Drawing& d, int x, int y, bool oriented) {
  if (x == y) return true;
  Drawing e = extract(d, {x, y});
  reduce(e, {0}, {1});
  Arrangement arr(e, {0}, {1});
  if (arr.total() != 0) return false;
  for (const Region& r : arr.regions()) {
    if (r.euler != 0 || r.punctures != 0) continue;
    int sx = r.side_of(0), sy = r.side_of(1);
    if (sx == 0 || sy == 0) continue;
    return !oriented || sx != sy;
  }
  return false;
}

IntersectionData intersection_data(const Drawing& d, const std::vector<int>& curves) {
  IntersectionData out;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      CurveRef a(d.curve(curves[i]).name), b(d.curve(curves[j]).name);
      out.set_geometric(a, b, geometric_intersection(d, curves[i], curves[j]));
      out.set_algebraic(a, b, algebraic_intersection(d, curves[i], curves[j]));
    }
  }
  return out;
}

void twist_along(Drawing& d, const std::vector<int>& moving, int c, long n) {
  if (n == 0) return;
  std::vector<int> mv;
  for (int x : moving) {
    if (x != c) mv.push_back(x);
  }
  if (mv.empty()) return;
  Arrangement arr(d, mv, {c});
  if (arr.total() == 0) return;

  const auto& cw = d.curve(c).word;
  const int Lc = static_cast<int>(cw.size());
  long long W = 1;
  for (int j = 0; j < Lc; ++j) W = std::max<long long>(W, static_cast<long long>(arr.along(c, j).size()) + 1);
  const long T = std::abs(n) * Lc;
  const int dir = kTwistHand * (n > 0 ? 1 : -1);

  std::vector<std::pair<int, std::vector<PendingCrossing>>> words;
  for (int x : mv) {
    const auto& xw = d.curve(x).word;
    std::vector<PendingCrossing> out;
    for (int j = 0; j < static_cast<int>(xw.size()); ++j) {
      out.push_back({xw[j].occ, Drawing::key_of(xw[j])});
      for (int id : arr.along(x, j)) {
        const ChordCrossing& cr = arr.crossings()[id];
        const long long tie = dir > 0 ? W - 1 - cr.blue_order : cr.blue_order;
        // The helix climbs away from c on its left, one rung per edge
        // crossing of c, in direction dir along c.
        std::vector<PendingCrossing> rungs;
        rungs.reserve(static_cast<std::size_t>(T));
        for (long t = 0; t < T; ++t) {
          long e = dir > 0 ? (cr.blue_chord + 1 + t) % Lc : ((cr.blue_chord - t) % Lc + Lc) % Lc;
          const Crossing& ce = cw[e];
          int delta = Schema::forward(ce.occ) ? 1 : -1;
          int exit = dir > 0 ? ce.occ : Schema::partner(ce.occ);
          rungs.push_back({exit, {2LL * ce.slot + delta, -delta * (kHug - (t * W + tie))}});
        }
        if (cr.sign > 0) {
          // x arrives from the left of c: walk the helix downwards.
          std::reverse(rungs.begin(), rungs.end());
          for (auto& r : rungs) r.occ = Schema::partner(r.occ);
        }
        out.insert(out.end(), rungs.begin(), rungs.end());
      }
    }
    words.push_back({x, std::move(out)});
  }
  d.replace(words);
}

void apply_multitwist(Drawing& d, const std::vector<int>& moving, const MultiTwist& t) {
  std::vector<int> ids = ids_of(d, t);
  make_disjoint(d, ids);
  for (std::size_t k = 0; k < ids.size(); ++k) twist_along(d, moving, ids[k], t.components()[k].exponent);
}

namespace {

EmbeddedCurve apply_sequence_word(const Drawing& d, const std::vector<MultiTwist>& seq,
                                  const EmbeddedCurve& x) {
  std::vector<int> used;
  for (auto& t : seq) {
    for (int id : ids_of(d, t)) {
      if (std::find(used.begin(), used.end(), id) == used.end()) used.push_back(id);
    }
  }
  Drawing e = extract(d, used);
  int xi = e.add_curve(x.name, x.word);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->empty()) continue;
    std::vector<int> ids = ids_of(e, *it);
    make_disjoint(e, ids);
    reduce(e, {xi}, ids);
    for (std::size_t k = 0; k < ids.size(); ++k) twist_along(e, {xi}, ids[k], it->components()[k].exponent);
    e.remove_backtracks(xi);
  }
  return e.curve(xi);
}

bool isotopic_words(const std::shared_ptr<const Schema>& s, const EmbeddedCurve& a,
                    const EmbeddedCurve& b, bool oriented) {
  Drawing e(s);
  int x = e.add_curve(a.name, a.word);
  int y = e.add_curve(b.name + "'", b.word);
  return isotopic(e, x, y, oriented);
}

}  // namespace

EmbeddedCurve apply_sequence(const Drawing& d, const std::vector<MultiTwist>& seq, int x) {
  return apply_sequence_word(d, seq, d.curve(x));
}

CrossingProfile crossing_profile(const Drawing& d, int x, const MultiTwist& t) {
  std::vector<int> ids = ids_of(d, t);
  Drawing e = extract(d, ids);
  std::vector<int> local(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) local[k] = static_cast<int>(k);
  int xi = e.add_curve(d.curve(x).name, d.curve(x).word);
  make_disjoint(e, local);
  reduce(e, {xi}, local);
  Arrangement arr(e, {xi}, local);
  std::vector<CurveRef> seq;
  for (int c : arr.sequence(xi)) seq.push_back(CurveRef(e.curve(c).name));
  return make_profile(CurveRef(d.curve(x).name), t, std::move(seq));
}

bool homology_available(const Schema& s) {
  return s.num_polygons() == 1 && s.num_vertices() == 1 && s.num_punctures() == 0;
}

HomologyData classes_and_pairing(const Drawing& d, const std::vector<int>& curves) {
  const Schema& s = d.schema();
  if (!homology_available(s)) {
    throw Error(Errc::InvalidInput, "edge classes need a one-polygon, one-vertex closed schema");
  }
  const int E = s.num_edges();
  std::vector<std::vector<long>> m(E, std::vector<long>(E, 0));
  for (int e = 0; e < E; ++e) {
    for (int f = e + 1; f < E; ++f) {
      Drawing dual(d.schema_ptr());
      int a = dual.add_curve("D" + std::to_string(e), {{2 * e, 0}});
      int b = dual.add_curve("D" + std::to_string(f), {{2 * f, 0}});
      long v = Arrangement(dual, {a}, {b}).algebraic(a, b);
      m[e][f] = v;
      m[f][e] = -v;
    }
  }
  HomologyData h;
  h.form = std::make_shared<IntersectionForm>(std::move(m));
  for (int c : curves) h.classes[d.curve(c).name] = class_of(d, c, h);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      long drawn = algebraic_intersection(d, curves[i], curves[j]);
      long formal = pairing(h.classes[d.curve(curves[i]).name], h.classes[d.curve(curves[j]).name]);
      if (drawn != formal) {
        throw Error(Errc::InvalidInput, "pairing of '" + d.curve(curves[i]).name + "' and '" +
                                            d.curve(curves[j]).name + "' disagrees with the drawing");
      }
    }
  }
  return h;
}

HomologyClass class_of(const Drawing& d, int c, const HomologyData& h) {
  return HomologyClass{d.edge_vector(c), h.form};
}

void check_filling(const Drawing& d, const TestSet& test) {
  std::vector<int> ids;
  for (auto& n : test.red) ids.push_back(d.find(n));
  for (auto& n : test.blue) ids.push_back(d.find(n));
  if (ids.empty()) throw Error(Errc::TestSetNotFilling, "empty test set");
  Drawing e = extract(d, ids);
  std::vector<int> red, blue;
  for (std::size_t k = 0; k < ids.size(); ++k) (k < test.red.size() ? red : blue).push_back(static_cast<int>(k));
  make_disjoint(e, red);
  make_disjoint(e, blue);
  reduce(e, red, blue);
  Arrangement arr(e, red, blue);
  for (const Region& r : arr.regions()) {
    if (r.euler != 1 || r.punctures > 1) {
      throw Error(Errc::TestSetNotFilling, "a complementary region has Euler characteristic " +
                                               std::to_string(r.euler) + " and " +
                                               std::to_string(r.punctures) + " punctures");
    }
  }
}

bool mapping_classes_equal(const Drawing& d, const std::vector<MultiTwist>& f,
                           const std::vector<MultiTwist>& g, const TestSet& test) {
  check_filling(d, test);
  const bool closed = homology_available(d.schema());
  std::vector<std::string> names = test.red;
  names.insert(names.end(), test.blue.begin(), test.blue.end());
  for (auto& n : names) {
    int id = d.find(n);
    EmbeddedCurve a = apply_sequence_word(d, f, d.curve(id));
    EmbeddedCurve b = apply_sequence_word(d, g, d.curve(id));
    if (closed) {
      Drawing e(d.schema_ptr());
      int x = e.add_curve("f", a.word);
      int y = e.add_curve("g", b.word);
      if (e.edge_vector(x) != e.edge_vector(y)) return false;
    }
    if (!isotopic_words(d.schema_ptr(), a, b, true)) return false;
  }
  return true;
}

std::map<std::string, OrbitSize> orbit_sizes(const Drawing& d, const std::vector<MultiTwist>& f,
                                             const std::vector<std::string>& curves, int cap) {
  std::map<std::string, OrbitSize> out;
  for (auto& n : curves) {
    const EmbeddedCurve& start = d.curve(d.find(n));
    EmbeddedCurve cur = start;
    OrbitSize o{cap, true};
    for (int k = 1; k <= cap; ++k) {
      cur = apply_sequence_word(d, f, cur);
      if (isotopic_words(d.schema_ptr(), start, cur, false)) {
        o = {k, false};
        break;
      }
    }
    out[n] = o;
  }
  return out;
}

}  // namespace mtw
