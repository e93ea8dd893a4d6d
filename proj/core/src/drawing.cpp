#include "mtw/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mtw/error.hpp"

namespace mtw {

std::vector<Crossing> reversed_word(const std::vector<Crossing>& word) {
  std::vector<Crossing> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out.push_back({Schema::partner(it->occ), it->slot});
  }
  return out;
}

Drawing::Drawing(std::shared_ptr<const Schema> schema)
    : schema_(std::move(schema)), strand_count_(schema_->num_edges(), 0) {
  recompute_offsets();
}

int Drawing::find(const std::string& name) const {
  for (int c = 0; c < num_curves(); ++c) {
    if (curves_[c].name == name) return c;
  }
  throw Error(Errc::InvalidInput, "no curve named '" + name + "'");
}

void Drawing::recompute_offsets() {
  const Schema& s = *schema_;
  offset_.assign(2 * s.num_edges(), 0);
  polygon_size_.assign(s.num_polygons(), 0);
  for (int p = 0; p < s.num_polygons(); ++p) {
    long long pos = 0;
    for (int occ : s.polygon(p)) {
      offset_[occ] = pos;
      pos += strand_count_[Schema::edge_of(occ)] + 1;
    }
    polygon_size_[p] = pos;
  }
}

long long Drawing::position(int occ, int slot) const {
  int n = strand_count_[Schema::edge_of(occ)];
  return offset_[occ] + 1 + (Schema::forward(occ) ? slot : n - 1 - slot);
}

int Drawing::chord_polygon(int c, int j) const {
  const auto& w = curves_[c].word;
  const int L = static_cast<int>(w.size());
  int entry = Schema::partner(w[j].occ);
  int exit = w[(j + 1) % L].occ;
  int p = schema_->polygon_of(entry);
  if (p != schema_->polygon_of(exit)) {
    throw Error(Errc::InvalidCurve, "curve '" + curves_[c].name + "' jumps between polygons after crossing " +
                                        std::to_string(j));
  }
  return p;
}

void Drawing::commit(std::vector<std::vector<PendingCrossing>>& pending) {
  const int E = schema_->num_edges();
  struct Item {
    SlotKey key;
    int curve;
    int index;
  };
  std::vector<std::vector<Item>> per_edge(E);
  for (int c = 0; c < static_cast<int>(pending.size()); ++c) {
    for (int i = 0; i < static_cast<int>(pending[c].size()); ++i) {
      const auto& pc = pending[c][i];
      if (pc.occ < 0 || pc.occ >= 2 * E) throw Error(Errc::InvalidCurve, "occurrence out of range");
      per_edge[Schema::edge_of(pc.occ)].push_back({pc.key, c, i});
    }
  }
  for (int c = 0; c < static_cast<int>(pending.size()); ++c) {
    curves_[c].word.resize(pending[c].size());
    for (std::size_t i = 0; i < pending[c].size(); ++i) curves_[c].word[i].occ = pending[c][i].occ;
  }
  for (int e = 0; e < E; ++e) {
    auto& items = per_edge[e];
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.key < b.key; });
    for (std::size_t r = 0; r < items.size(); ++r) {
      if (r > 0 && items[r].key == items[r - 1].key) {
        throw Error(Errc::NotGeneralPosition, "two strands share a slot on edge '" +
                                                  schema_->edge_name(e) + "'");
      }
      curves_[items[r].curve].word[items[r].index].slot = static_cast<int>(r);
    }
    strand_count_[e] = static_cast<int>(items.size());
  }
  recompute_offsets();
}

namespace {
std::vector<PendingCrossing> as_pending(const std::vector<Crossing>& word) {
  std::vector<PendingCrossing> out;
  out.reserve(word.size());
  for (auto& x : word) out.push_back({x.occ, Drawing::key_of(x)});
  return out;
}
}  // namespace

int Drawing::add_curve(const std::string& name, const std::vector<Crossing>& word) {
  return add_curves({EmbeddedCurve{name, word}}).front();
}

std::vector<int> Drawing::add_curves(const std::vector<EmbeddedCurve>& curves) {
  std::vector<std::vector<PendingCrossing>> pending;
  for (auto& c : curves_) pending.push_back(as_pending(c.word));
  std::vector<int> ids;
  for (auto& c : curves) {
    if (c.word.empty()) throw Error(Errc::InvalidCurve, "curve '" + c.name + "' has an empty word");
    std::vector<PendingCrossing> w;
    for (auto& x : c.word) {
      if (x.occ < 0 || x.occ >= 2 * schema_->num_edges()) {
        throw Error(Errc::InvalidCurve, "occurrence out of range in '" + c.name + "'");
      }
      if (x.slot < 0) throw Error(Errc::NotGeneralPosition, "negative slot in '" + c.name + "'");
      w.push_back({x.occ, {2LL * (strand_count_[Schema::edge_of(x.occ)] + x.slot), 0}});
    }
    ids.push_back(static_cast<int>(curves_.size()));
    curves_.push_back({c.name, {}});
    pending.push_back(std::move(w));
  }
  commit(pending);
  for (int id : ids) {
    for (int j = 0; j < static_cast<int>(curves_[id].word.size()); ++j) chord_polygon(id, j);
  }
  return ids;
}

int Drawing::add_copy(int c, const std::string& name, bool reversed) {
  std::vector<PendingCrossing> w;
  for (auto& x : curves_[c].word) {
    // The right-hand side of a curve leaving through occ is the clockwise
    // direction along occ.
    int right = Schema::forward(x.occ) ? -1 : 1;
    w.push_back({x.occ, {2LL * x.slot + right, 0}});
  }
  if (reversed) {
    std::vector<PendingCrossing> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({Schema::partner(it->occ), it->key});
    w = std::move(r);
  }
  append(name, w);
  return num_curves() - 1;
}

void Drawing::replace(const std::vector<std::pair<int, std::vector<PendingCrossing>>>& words) {
  std::vector<std::vector<PendingCrossing>> pending;
  for (auto& c : curves_) pending.push_back(as_pending(c.word));
  for (auto& [c, w] : words) {
    if (w.empty()) throw Error(Errc::InvalidCurve, "curve '" + curves_[c].name + "' became empty");
    pending[c] = w;
  }
  commit(pending);
}

void Drawing::append(const std::string& name, const std::vector<PendingCrossing>& word) {
  if (word.empty()) throw Error(Errc::InvalidCurve, "curve '" + name + "' has an empty word");
  std::vector<std::vector<PendingCrossing>> pending;
  for (auto& c : curves_) pending.push_back(as_pending(c.word));
  pending.push_back(word);
  curves_.push_back({name, {}});
  commit(pending);
}

void Drawing::validate() const {
  const int E = schema_->num_edges();
  std::vector<std::vector<int>> seen(E);
  for (int c = 0; c < num_curves(); ++c) {
    if (curves_[c].word.empty()) throw Error(Errc::InvalidCurve, "empty curve");
    for (auto& x : curves_[c].word) seen[Schema::edge_of(x.occ)].push_back(x.slot);
    for (int j = 0; j < static_cast<int>(curves_[c].word.size()); ++j) chord_polygon(c, j);
  }
  for (int e = 0; e < E; ++e) {
    auto& v = seen[e];
    std::sort(v.begin(), v.end());
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (v[i] != i) throw Error(Errc::NotGeneralPosition, "slots on edge '" + schema_->edge_name(e) +
                                                               "' are not 0..n-1");
    }
  }
}

int Drawing::remove_backtracks(int c) {
  auto word = curves_[c].word;
  int removed = 0;
  bool changed = true;
  while (changed && word.size() >= 2) {
    changed = false;
    std::map<int, std::set<int>> own;  // edge -> slots of this curve
    for (auto& x : word) own[Schema::edge_of(x.occ)].insert(x.slot);
    const int L = static_cast<int>(word.size());
    for (int j = 0; j < L; ++j) {
      const Crossing& a = word[j];
      const Crossing& b = word[(j + 1) % L];
      if (b.occ != Schema::partner(a.occ)) continue;
      auto& slots = own[Schema::edge_of(a.occ)];
      int lo = std::min(a.slot, b.slot), hi = std::max(a.slot, b.slot);
      auto it = slots.upper_bound(lo);
      if (it != slots.end() && *it < hi) continue;
      if (L == 2) throw Error(Errc::InvalidCurve, "curve '" + curves_[c].name + "' is contractible");
      std::vector<Crossing> next;
      for (int k = 0; k < L; ++k) {
        if (k != j && k != (j + 1) % L) next.push_back(word[k]);
      }
      word = std::move(next);
      removed += 2;
      changed = true;
      break;
    }
  }
  if (removed > 0) {
    std::vector<PendingCrossing> w;
    for (auto& x : word) w.push_back({x.occ, key_of(x)});
    replace({{c, w}});
  }
  return removed;
}

std::vector<long> Drawing::edge_vector(int c) const {
  std::vector<long> v(schema_->num_edges(), 0);
  for (auto& x : curves_[c].word) v[Schema::edge_of(x.occ)] += Schema::forward(x.occ) ? 1 : -1;
  return v;
}

}  // namespace mtw
