#include "mtw/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "mtw/formulas.hpp"

namespace mtw {

std::string_view type_name(CurveTypeTag tag) {
  switch (tag) {
    case CurveTypeTag::T1: return "T1";
    case CurveTypeTag::T2: return "T2";
    case CurveTypeTag::T3: return "T3";
    case CurveTypeTag::T4: return "T4";
    case CurveTypeTag::T5: return "T5";
    case CurveTypeTag::Invalid: return "Invalid";
  }
  return "?";
}

std::string_view failure_name(PairingFailure f) {
  switch (f) {
    case PairingFailure::None: return "none";
    case PairingFailure::ExponentMismatch: return "exponent-mismatch";
    case PairingFailure::NoMatching: return "no-matching";
    case PairingFailure::ResidualIntersection: return "residual-intersection";
  }
  return "?";
}

std::vector<TableRow> enumerate_table(long max_i, long max_n, long max_x) {
  std::vector<TableRow> rows;
  bool zero_row = false;
  for (long i = 0; i <= max_i; ++i) {
    // larger exponents and X first, matching the usual numbering
    for (long n = max_n; n >= 1; --n) {
      for (long x = max_x; x >= 0; --x) {
        long residual = i - (n * i - 1) * i - x;
        if (residual < 0) continue;
        if (i == 0) {
          if (zero_row) continue;
          zero_row = true;
          rows.push_back({CurveTypeTag::Invalid, 0, std::nullopt, x, residual});
          continue;
        }
        rows.push_back({CurveTypeTag::Invalid, i, n, x, residual});
      }
    }
  }
  static const CurveTypeTag tags[] = {CurveTypeTag::T1, CurveTypeTag::T2, CurveTypeTag::T3,
                                      CurveTypeTag::T4, CurveTypeTag::T5};
  for (std::size_t k = 0; k < rows.size() && k < 5; ++k) rows[k].tag = tags[k];
  return rows;
}

std::optional<std::string> check_decomposition(const BraidDecomposition& d,
                                               const IntersectionData& data) {
  for (std::size_t p = 0; p < d.pairs.size(); ++p) {
    const auto& pr = d.pairs[p];
    if (pr.n != 1 && pr.n != -1) return "pair " + pr.a.id + "," + pr.b.id + " has exponent " + std::to_string(pr.n);
    if (data.geometric(pr.a, pr.b) != 1)
      return "i(" + pr.a.id + "," + pr.b.id + ") != 1";
    for (std::size_t q = 0; q < d.pairs.size(); ++q) {
      if (q == p) continue;
      const auto& o = d.pairs[q];
      for (const auto& [x, y] : {std::pair{pr.a, o.a}, std::pair{pr.a, o.b}, std::pair{pr.b, o.b}})
        if (data.geometric(x, y) != 0) return "i(" + x.id + "," + y.id + ") != 0";
    }
    for (const auto& c : d.common.components())
      for (const auto& x : {pr.a, pr.b})
        if (data.geometric(x, c.curve) != 0) return "i(" + x.id + "," + c.curve.id + ") != 0";
  }
  return std::nullopt;
}

Split split_common(const MultiTwist& tA, const MultiTwist& tB) {
  std::vector<TwistComponent> a, b, common;
  for (const auto& c : tA.components()) {
    if (!tB.contains(c.curve)) {
      a.push_back(c);
      continue;
    }
    long e = tB.exponent(c.curve);
    if (e != c.exponent)
      throw Error(Errc::CommonCurveExponentClash,
                  c.curve.id + " has exponents " + std::to_string(c.exponent) + " and " + std::to_string(e));
    common.push_back(c);
  }
  for (const auto& c : tB.components())
    if (!tA.contains(c.curve)) b.push_back(c);
  return {MultiTwist(std::move(a)), MultiTwist(std::move(b)), MultiTwist(std::move(common))};
}

Pairing pair_and_reindex(const MultiTwist& tA, const MultiTwist& tB, const IntersectionData& data) {
  Pairing out;
  Split s;
  try {
    s = split_common(tA, tB);
  } catch (const Error& e) {
    out.failure = PairingFailure::ExponentMismatch;
    out.detail = e.what();
    return out;
  }
  out.common = s.common;
  std::multiset<long> ea, eb;
  for (const auto& c : s.a.components()) ea.insert(c.exponent);
  for (const auto& c : s.b.components()) eb.insert(c.exponent);
  if (ea != eb) {
    out.failure = PairingFailure::ExponentMismatch;
    out.detail = "exponent multisets differ";
    return out;
  }
  const MultiTwist sa = s.a.sorted(), sb = s.b.sorted();
  const auto& A = sa.components();
  const auto& B = sb.components();
  // candidate edges: i = 1, equal exponent +-1
  std::vector<std::vector<int>> adj(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      if (A[i].exponent == B[j].exponent && std::labs(A[i].exponent) == 1 &&
          data.geometric(A[i].curve, B[j].curve) == 1)
        adj[i].push_back(static_cast<int>(j));
  std::vector<int> match_b(B.size(), -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
    for (int j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_b[j] < 0 || augment(match_b[j], seen)) {
        match_b[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < A.size(); ++i) {
    std::vector<char> seen(B.size(), 0);
    if (!augment(static_cast<int>(i), seen)) {
      out.failure = PairingFailure::NoMatching;
      out.detail = "no partner for " + A[i].curve.id;
      return out;
    }
  }
  std::vector<int> match_a(A.size(), -1);
  for (std::size_t j = 0; j < B.size(); ++j) match_a[match_b[j]] = static_cast<int>(j);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      if (static_cast<int>(j) != match_a[i] && data.geometric(A[i].curve, B[j].curve) != 0) {
        out.failure = PairingFailure::ResidualIntersection;
        out.detail = "i(" + A[i].curve.id + "," + B[j].curve.id + ") != 0 outside the matching";
        return out;
      }
  for (std::size_t i = 0; i < A.size(); ++i)
    out.pairs.push_back({A[i].curve, B[match_a[i]].curve, A[i].exponent});
  return out;
}

CurveType classify_curve(const CurveRef& a, const CurveRef& b, const MultiTwist& tB,
                         const IntersectionData& data, const CrossingProfile& profile) {
  if (!(profile.base == a)) throw Error(Errc::ProfileMismatch, "profile base is " + profile.base.id);
  if (!same_multitwist(profile.against, tB)) throw Error(Errc::ProfileMismatch, "profile is against another multitwist");
  if (!tB.contains(b)) throw Error(Errc::PreconditionViolated, b.id + " is not a component");
  if (auto bad = check_profile(profile, &data)) throw Error(Errc::ProfileMismatch, *bad);

  CurveType t;
  t.i_ab = data.geometric(a, b);
  t.abs_n = std::labs(tB.exponent(b));
  t.x = x_value(profile);

  long rhs = t.x;
  long others = 0;
  int twos = 0, rest = 0;
  for (const auto& c : tB.components()) {
    long i = data.geometric(a, c.curve);
    long n = std::labs(c.exponent);
    long term = (n * i - 1) * i;
    rhs += term;
    if (c.curve == b || i == 0) continue;
    others += term;
    if (i == 1 && n == 2) ++twos;
    else if (i != 1 || n != 1) ++rest;
  }
  if (rhs != t.i_ab) return t;
  for (const auto& row : enumerate_table()) {
    if (row.i_ab != t.i_ab || row.x != t.x) continue;
    if (row.abs_n && *row.abs_n != t.abs_n) continue;
    if (others != row.residual || rest != 0 || twos != row.residual) continue;
    t.tag = row.tag;
    break;
  }
  return t;
}

namespace {

bool meets_only(const CurveRef& x, const CurveRef& partner, const MultiTwist& t,
                const IntersectionData& data) {
  for (const auto& c : t.components())
    if (!(c.curve == partner) && data.geometric(x, c.curve) != 0) return false;
  return true;
}

bool deletable(const MultiTwist& tA, const MultiTwist& tB, const BraidPair& p,
               const IntersectionData& data) {
  if (!tA.contains(p.a) || !tB.contains(p.b) || tB.contains(p.a) || tA.contains(p.b)) return false;
  long ea = tA.exponent(p.a), eb = tB.exponent(p.b);
  if (ea != eb || std::labs(ea) != 1) return false;
  if (data.geometric(p.a, p.b) != 1) return false;
  return meets_only(p.a, p.b, tB, data) && meets_only(p.b, p.a, tA, data);
}

MultiTwist without(const MultiTwist& t, const CurveRef& c) {
  std::vector<TwistComponent> out;
  for (const auto& x : t.components())
    if (!(x.curve == c)) out.push_back(x);
  return MultiTwist(std::move(out));
}

}  // namespace

std::pair<MultiTwist, MultiTwist> delete_braided_pair(const MultiTwist& tA, const MultiTwist& tB,
                                                      const BraidPair& pair,
                                                      const IntersectionData& data) {
  if (!deletable(tA, tB, pair, data))
    throw Error(Errc::PreconditionViolated, "pair " + pair.a.id + "," + pair.b.id + " cannot be deleted");
  return {without(tA, pair.a), without(tB, pair.b)};
}

BraidVerdict decide_braided(const MultiTwist& tA, const MultiTwist& tB, const IntersectionData& data,
                            const std::vector<std::pair<std::string, std::string>>* pair_order) {
  for (const auto* t : {&tA, &tB}) {
    auto v = validate_multitwist(*t, data);
    if (!v.valid)
      throw Error(Errc::InvalidInput, "components " + v.intersecting.front().first.id + " and " +
                                          v.intersecting.front().second.id + " intersect");
  }
  BraidVerdict out;
  Split s;
  try {
    s = split_common(tA, tB);
  } catch (const Error& e) {
    out.reason = NotBraidedReason::ExponentClash;
    out.residue_a = tA;
    out.residue_b = tB;
    out.detail = e.what();
    return out;
  }
  MultiTwist a = s.a.sorted(), b = s.b.sorted();
  std::vector<BraidPair> pairs;
  if (pair_order) {
    for (const auto& [x, y] : *pair_order) {
      BraidPair p{CurveRef(x), CurveRef(y), a.exponent(CurveRef(x))};
      if (!deletable(a, b, p, data)) continue;
      std::tie(a, b) = delete_braided_pair(a, b, p, data);
      pairs.push_back(p);
    }
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& ca : a.components()) {
      for (const auto& cb : b.components()) {
        BraidPair p{ca.curve, cb.curve, ca.exponent};
        if (!deletable(a, b, p, data)) continue;
        std::tie(a, b) = delete_braided_pair(a, b, p, data);
        pairs.push_back(p);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  if (a.empty() && b.empty()) {
    out.braided = true;
    std::sort(pairs.begin(), pairs.end(), [](const BraidPair& x, const BraidPair& y) { return x.a < y.a; });
    out.decomposition = {s.common, std::move(pairs)};
    return out;
  }
  out.reason = NotBraidedReason::Residue;
  out.residue_a = a;
  out.residue_b = b;
  out.detail = std::to_string(a.size()) + "+" + std::to_string(b.size()) + " components left after deletion";
  return out;
}

MultiTwist reassemble(const Factorization& f, int generator) {
  std::vector<TwistComponent> comps = f.cyclic.components();
  for (const auto& ch : f.chains)
    comps.push_back({ch.curves.at(static_cast<std::size_t>(generator - 1)), ch.sign});
  return MultiTwist(std::move(comps)).sorted();
}

FactorResult factor_braid_hom(const BraidHomSpec& spec, const IntersectionData& data) {
  const int n = spec.strands;
  if (n < 2 || static_cast<int>(spec.images.size()) != n - 1)
    throw Error(Errc::InvalidInput, "need n >= 2 strands and n - 1 images");
  for (const auto& t : spec.images) {
    auto v = validate_multitwist(t, data);
    if (!v.valid) throw Error(Errc::InvalidInput, "an image is not a multitwist");
  }
  FactorResult out;
  auto reject = [&](Errc code, int i, int j, bool disj, std::string detail) {
    out.rejection = Rejection{code, i, j, disj, std::move(detail)};
    return out;
  };

  if (n == 2) {
    out.factorization = Factorization{{}, spec.images[0].sorted()};
    return out;
  }

  std::vector<BraidDecomposition> dec;
  for (int i = 0; i + 1 < n - 1; ++i) {
    auto v = decide_braided(spec.images[i], spec.images[i + 1], data);
    if (!v.braided) return reject(Errc::RelationFails, i + 1, i + 2, false, v.detail);
    if (!dec.empty() && !same_multitwist(dec.front().common, v.decomposition.common))
      return reject(Errc::RelationFails, i + 1, i + 2, false, "common part differs from the first relation");
    dec.push_back(std::move(v.decomposition));
  }
  const MultiTwist common = dec.front().common.sorted();

  // Far generators commute when their non-common supports are disjoint and
  // distinct. Anything else is rejected with the flag set.
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 2; j < n - 1; ++j) {
      for (const auto& x : spec.images[i].components()) {
        if (common.contains(x.curve)) continue;
        for (const auto& y : spec.images[j].components()) {
          if (common.contains(y.curve)) continue;
          if (x.curve == y.curve || data.geometric(x.curve, y.curve) != 0)
            return reject(Errc::CommutationFails, i + 1, j + 1, true,
                          "supports meet at " + x.curve.id + "," + y.curve.id);
        }
      }
    }
  }

  Factorization f;
  f.cyclic = common;
  for (const auto& p : dec.front().pairs) {
    Chain ch;
    ch.sign = p.n;
    ch.curves = {p.a, p.b};
    for (std::size_t k = 1; k < dec.size(); ++k) {
      auto it = std::find_if(dec[k].pairs.begin(), dec[k].pairs.end(),
                             [&](const BraidPair& q) { return q.a == ch.curves.back(); });
      int idx = static_cast<int>(f.chains.size()) + 1;
      if (it == dec[k].pairs.end())
        return reject(Errc::ChainInconsistent, idx, 0, false, ch.curves.back().id + " does not continue");
      if (it->n != ch.sign)
        return reject(Errc::ChainInconsistent, idx, 0, false, "sign changes along the chain");
      ch.curves.push_back(it->b);
    }
    f.chains.push_back(std::move(ch));
  }
  for (std::size_t c = 0; c < f.chains.size(); ++c) {
    const auto& cv = f.chains[c].curves;
    for (std::size_t k = 0; k < cv.size(); ++k)
      for (std::size_t l = k + 1; l < cv.size(); ++l) {
        long want = l == k + 1 ? 1 : 0;
        if (cv[k] == cv[l] || data.geometric(cv[k], cv[l]) != want)
          return reject(Errc::ChainInconsistent, static_cast<int>(c) + 1, 0, false,
                        "i(" + cv[k].id + "," + cv[l].id + ") != " + std::to_string(want));
      }
  }
  for (int g = 1; g <= n - 1; ++g)
    if (!same_multitwist(reassemble(f, g), spec.images[g - 1]))
      return reject(Errc::ChainInconsistent, 0, 0, false,
                    "image of sigma_" + std::to_string(g) + " is not rebuilt by the chains");
  out.factorization = std::move(f);
  return out;
}

}  // namespace mtw
