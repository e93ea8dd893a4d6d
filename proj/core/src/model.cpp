#include "mtw/model.hpp"

#include <algorithm>
#include <set>

namespace mtw {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::MissingIntersectionEntry: return "MissingIntersectionEntry";
    case Errc::InconsistentProfile: return "InconsistentProfile";
    case Errc::MissingClass: return "MissingClass";
    case Errc::NonOrientable: return "NonOrientable";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadPairing: return "BadPairing";
    case Errc::InvalidCurve: return "InvalidCurve";
    case Errc::NotGeneralPosition: return "NotGeneralPosition";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::TestSetNotFilling: return "TestSetNotFilling";
    case Errc::OverCap: return "OverCap";
    case Errc::CommonCurveExponentClash: return "CommonCurveExponentClash";
    case Errc::ProfileMismatch: return "ProfileMismatch";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::RelationFails: return "RelationFails";
    case Errc::CommutationFails: return "CommutationFails";
    case Errc::ChainInconsistent: return "ChainInconsistent";
  }
  return "Unknown";
}

MultiTwist::MultiTwist(std::vector<TwistComponent> components) {
  std::set<std::string> seen;
  for (auto& c : components) {
    if (c.exponent == 0) continue;
    if (!seen.insert(c.curve.id).second) {
      throw Error(Errc::InvalidInput, "curve '" + c.curve.id + "' repeated in multitwist");
    }
    components_.push_back(std::move(c));
  }
}

MultiTwist::MultiTwist(std::initializer_list<std::pair<const char*, long>> components)
    : MultiTwist([&] {
        std::vector<TwistComponent> v;
        for (auto& [id, n] : components) v.push_back({CurveRef(id), n});
        return v;
      }()) {}

bool MultiTwist::contains(const CurveRef& c) const { return exponent(c) != 0; }

long MultiTwist::exponent(const CurveRef& c) const {
  for (auto& comp : components_) {
    if (comp.curve == c) return comp.exponent;
  }
  return 0;
}

MultiTwist MultiTwist::inverse() const {
  MultiTwist r = *this;
  for (auto& c : r.components_) c.exponent = -c.exponent;
  return r;
}

MultiTwist MultiTwist::sorted() const {
  MultiTwist r = *this;
  std::sort(r.components_.begin(), r.components_.end(),
            [](const TwistComponent& a, const TwistComponent& b) { return a.curve < b.curve; });
  return r;
}

std::vector<CurveRef> MultiTwist::curves() const {
  std::vector<CurveRef> out;
  for (auto& c : components_) out.push_back(c.curve);
  return out;
}

bool same_multitwist(const MultiTwist& a, const MultiTwist& b) {
  return a.sorted() == b.sorted();
}

namespace {
std::pair<std::string, std::string> key(const CurveRef& a, const CurveRef& b) {
  return a.id < b.id ? std::pair{a.id, b.id} : std::pair{b.id, a.id};
}
}  // namespace

void IntersectionData::set_geometric(const CurveRef& a, const CurveRef& b, long value) {
  if (value < 0) throw Error(Errc::InvalidInput, "negative geometric intersection");
  if (a == b) {
    if (value != 0) throw Error(Errc::InvalidInput, "i(a, a) must be 0");
    return;
  }
  geometric_[key(a, b)] = value;
}

void IntersectionData::set_algebraic(const CurveRef& a, const CurveRef& b, long value) {
  if (a == b) {
    if (value != 0) throw Error(Errc::InvalidInput, "algebraic(a, a) must be 0");
    return;
  }
  if (a.id < b.id) {
    algebraic_[{a.id, b.id}] = value;
  } else {
    algebraic_[{b.id, a.id}] = -value;
  }
}

bool IntersectionData::has_geometric(const CurveRef& a, const CurveRef& b) const {
  return a == b || geometric_.count(key(a, b)) > 0;
}

long IntersectionData::geometric(const CurveRef& a, const CurveRef& b) const {
  if (a == b) return 0;
  auto it = geometric_.find(key(a, b));
  if (it == geometric_.end()) {
    throw Error(Errc::MissingIntersectionEntry, "no entry for (" + a.id + ", " + b.id + ")");
  }
  return it->second;
}

std::optional<long> IntersectionData::algebraic(const OrientedCurve& x,
                                                const OrientedCurve& y) const {
  if (x.curve == y.curve) return 0;
  long sign = x.orientation * y.orientation;
  if (x.curve.id < y.curve.id) {
    auto it = algebraic_.find({x.curve.id, y.curve.id});
    if (it == algebraic_.end()) return std::nullopt;
    return sign * it->second;
  }
  auto it = algebraic_.find({y.curve.id, x.curve.id});
  if (it == algebraic_.end()) return std::nullopt;
  return -sign * it->second;
}

std::vector<CurveRef> IntersectionData::curves() const {
  std::set<std::string> ids;
  for (auto& [k, v] : geometric_) {
    ids.insert(k.first);
    ids.insert(k.second);
  }
  for (auto& [k, v] : algebraic_) {
    ids.insert(k.first);
    ids.insert(k.second);
  }
  return {ids.begin(), ids.end()};
}

std::optional<std::string> IntersectionData::check_invariants() const {
  for (auto& [k, v] : algebraic_) {
    auto it = geometric_.find(k);
    if (it == geometric_.end()) continue;
    if (std::labs(v) > it->second) {
      return "|algebraic(" + k.first + ", " + k.second + ")| exceeds geometric";
    }
    if ((std::labs(v) - it->second) % 2 != 0) {
      return "algebraic and geometric parity differ for (" + k.first + ", " + k.second + ")";
    }
  }
  return std::nullopt;
}

std::size_t CrossingProfile::multiplicity(const CurveRef& c) const {
  return static_cast<std::size_t>(std::count(sequence.begin(), sequence.end(), c));
}

CrossingProfile make_profile(CurveRef base, MultiTwist against, std::vector<CurveRef> sequence) {
  CrossingProfile p{std::move(base), std::move(against), std::move(sequence), {}};
  const std::size_t m = p.sequence.size();
  p.arc_flags.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    long n1 = p.against.exponent(p.sequence[i]);
    long n2 = p.against.exponent(p.sequence[(i + 1) % m]);
    if (n1 == 0 || n2 == 0) {
      throw Error(Errc::InconsistentProfile, "crossing with a curve outside the multitwist");
    }
    p.arc_flags[i] = (n1 > 0) == (n2 > 0) ? 1 : 0;
  }
  return p;
}

std::optional<std::string> check_profile(const CrossingProfile& profile,
                                         const IntersectionData* data) {
  const std::size_t m = profile.sequence.size();
  if (profile.arc_flags.size() != m) return "arc count differs from crossing count";
  for (std::size_t i = 0; i < m; ++i) {
    long n1 = profile.against.exponent(profile.sequence[i]);
    long n2 = profile.against.exponent(profile.sequence[(i + 1) % m]);
    if (n1 == 0 || n2 == 0) return "crossing with curve outside the multitwist";
    int want = (n1 > 0) == (n2 > 0) ? 1 : 0;
    if (profile.arc_flags[i] != want) return "arc flag " + std::to_string(i) + " is wrong";
  }
  if (data != nullptr) {
    for (auto& c : profile.against.components()) {
      long i_ac = data->geometric(profile.base, c.curve);
      if (static_cast<long>(profile.multiplicity(c.curve)) != i_ac) {
        return "multiplicity of " + c.curve.id + " differs from i(" + profile.base.id + ", " +
               c.curve.id + ")";
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate_multitwist(const MultiTwist& t, const IntersectionData& data) {
  ValidationReport report;
  const auto& comps = t.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (data.geometric(comps[i].curve, comps[j].curve) != 0) {
        report.valid = false;
        report.intersecting.emplace_back(comps[i].curve, comps[j].curve);
      }
    }
  }
  return report;
}

long x_value(const CrossingProfile& profile) {
  long x = 0;
  for (int f : profile.arc_flags) x += f;
  return x;
}

}  // namespace mtw
