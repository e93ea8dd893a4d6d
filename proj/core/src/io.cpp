#include "mtw/io.hpp"

#include <fstream>

namespace mtw {

void to_json(json& j, const PunctureSpec& p) {
  j = json{{"polygon", p.polygon}};
  if (p.corner) j["corner"] = *p.corner;
}

void from_json(const json& j, PunctureSpec& p) {
  p.polygon = j.value("polygon", 0);
  if (j.contains("corner")) p.corner = j.at("corner").get<int>();
  else p.corner.reset();
}

void to_json(json& j, const SchemaDescription& s) {
  j = json{{"name", s.name}, {"polygons", s.polygons}, {"punctures", s.punctures}};
  if (s.genus) j["genus"] = *s.genus;
}

void from_json(const json& j, SchemaDescription& s) {
  s.name = j.value("name", std::string());
  s.polygons = j.at("polygons").get<std::vector<std::vector<std::string>>>();
  s.punctures = j.value("punctures", std::vector<PunctureSpec>{});
  if (j.contains("genus")) s.genus = j.at("genus").get<int>();
  else s.genus.reset();
}

void to_json(json& j, const MultiTwist& t) {
  json comps = json::array();
  for (const auto& c : t.components()) comps.push_back(json::array({c.curve.id, c.exponent}));
  j = json{{"components", comps}};
}

void from_json(const json& j, MultiTwist& t) {
  const json& comps = j.is_array() ? j : j.at("components");
  std::vector<TwistComponent> v;
  for (const auto& c : comps) {
    if (!c.is_array() || c.size() != 2) throw Error(Errc::InvalidInput, "component must be [curve, exponent]");
    v.push_back({CurveRef(c[0].get<std::string>()), c[1].get<long>()});
  }
  t = MultiTwist(std::move(v));
}

namespace {

json triples(const std::map<std::pair<std::string, std::string>, long>& table, bool upper_only) {
  json out = json::array();
  for (const auto& [k, v] : table) {
    if (upper_only && k.first > k.second) continue;
    out.push_back(json::array({k.first, k.second, v}));
  }
  return out;
}

}  // namespace

void to_json(json& j, const IntersectionData& d) {
  j = json{{"geometric", triples(d.geometric_table(), true)},
           {"algebraic", triples(d.algebraic_table(), true)}};
}

void from_json(const json& j, IntersectionData& d) {
  d = IntersectionData();
  auto read = [](const json& list, auto&& set) {
    for (const auto& t : list) {
      if (!t.is_array() || t.size() != 3) throw Error(Errc::InvalidInput, "intersection entry must be [a, b, value]");
      set(CurveRef(t[0].get<std::string>()), CurveRef(t[1].get<std::string>()), t[2].get<long>());
    }
  };
  if (j.is_array()) {
    read(j, [&](auto a, auto b, long v) { d.set_geometric(a, b, v); });
    return;
  }
  if (j.contains("geometric")) read(j.at("geometric"), [&](auto a, auto b, long v) { d.set_geometric(a, b, v); });
  if (j.contains("algebraic")) read(j.at("algebraic"), [&](auto a, auto b, long v) { d.set_algebraic(a, b, v); });
}

void to_json(json& j, const CrossingProfile& p) {
  std::vector<std::string> seq;
  for (const auto& c : p.sequence) seq.push_back(c.id);
  j = json{{"base", p.base.id}, {"against", p.against}, {"sequence", seq}, {"arc_flags", p.arc_flags},
           {"x", x_value(p)}};
}

void from_json(const json& j, CrossingProfile& p) {
  std::vector<CurveRef> seq;
  for (const auto& s : j.at("sequence")) seq.emplace_back(s.get<std::string>());
  p = make_profile(CurveRef(j.at("base").get<std::string>()), j.at("against").get<MultiTwist>(), std::move(seq));
  if (j.contains("arc_flags") && j.at("arc_flags").get<std::vector<int>>() != p.arc_flags)
    throw Error(Errc::InconsistentProfile, "arc flags disagree with the exponent signs");
}

json curve_to_json(const Schema& s, const EmbeddedCurve& c) {
  json word = json::array();
  for (const auto& x : c.word) word.push_back(json::array({s.occurrence_label(x.occ), x.slot}));
  return json{{"name", c.name}, {"word", word}};
}

EmbeddedCurve curve_from_json(const Schema& s, const json& j) {
  EmbeddedCurve c;
  c.name = j.at("name").get<std::string>();
  for (const auto& x : j.at("word")) {
    if (!x.is_array() || x.size() != 2) throw Error(Errc::InvalidInput, "word entry must be [label, slot]");
    c.word.push_back({s.occurrence(x[0].get<std::string>()), x[1].get<int>()});
  }
  return c;
}

json verdict_to_json(const BraidVerdict& v) {
  json j{{"verdict", v.braided ? "braided" : "not-braided"}};
  if (v.braided) {
    json pairs = json::array();
    for (const auto& p : v.decomposition.pairs) pairs.push_back(json{{"a", p.a.id}, {"b", p.b.id}, {"n", p.n}});
    j["decomposition"] = json{{"common", v.decomposition.common}, {"pairs", pairs}};
  } else {
    j["witness"] = json{{"a", v.residue_a}, {"b", v.residue_b},
                        {"reason", v.reason == NotBraidedReason::ExponentClash ? "exponent-clash" : "residue"},
                        {"detail", v.detail}};
  }
  return j;
}

json factor_to_json(const FactorResult& r) {
  if (r.rejection) {
    const auto& x = *r.rejection;
    return json{{"result", "rejected"},
                {"rejection", json{{"code", std::string(errc_name(x.code))}, {"i", x.i}, {"j", x.j},
                                   {"disjointness_criterion", x.disjointness}, {"detail", x.detail}}}};
  }
  json chains = json::array();
  for (const auto& c : r.factorization->chains) {
    std::vector<std::string> ids;
    for (const auto& x : c.curves) ids.push_back(x.id);
    chains.push_back(json{{"curves", ids}, {"sign", c.sign}});
  }
  return json{{"result", "factored"}, {"chains", chains}, {"cyclic", r.factorization->cyclic}};
}

json type_to_json(const CurveType& t) {
  return json{{"type", std::string(type_name(t.tag))}, {"i_ab", t.i_ab}, {"abs_n", t.abs_n}, {"x", t.x}};
}

json table_to_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row{{"type", std::string(type_name(r.tag))}, {"i_ab", r.i_ab}, {"x", r.x}, {"residual", r.residual}};
    row["abs_n"] = r.abs_n ? json(*r.abs_n) : json(nullptr);
    out.push_back(row);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace mtw
