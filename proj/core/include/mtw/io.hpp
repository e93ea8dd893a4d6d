#pragma once

// JSON shapes for schemas, curves, multitwists, intersection tables,
// profiles and analysis results. Objects are emitted with sorted keys so a
// parse/dump cycle is a fixed point.

#include <string>

#include <nlohmann/json.hpp>

#include "mtw/braid.hpp"
#include "mtw/drawing.hpp"
#include "mtw/model.hpp"
#include "mtw/schema.hpp"

namespace mtw {

using json = nlohmann::json;

inline constexpr int kReportVersion = 1;

void to_json(json& j, const PunctureSpec& p);
void from_json(const json& j, PunctureSpec& p);
void to_json(json& j, const SchemaDescription& s);
void from_json(const json& j, SchemaDescription& s);

void to_json(json& j, const MultiTwist& t);
void from_json(const json& j, MultiTwist& t);

// {"geometric": [[a, b, v], ...], "algebraic": [[a, b, v], ...]}; a bare
// list of triples reads as the geometric table.
void to_json(json& j, const IntersectionData& d);
void from_json(const json& j, IntersectionData& d);

// Flags are recomputed on read; given flags that disagree throw
// InconsistentProfile.
void to_json(json& j, const CrossingProfile& p);
void from_json(const json& j, CrossingProfile& p);

// Words use occurrence labels: [["x", 0], ["y-", 1], ...].
json curve_to_json(const Schema& s, const EmbeddedCurve& c);
EmbeddedCurve curve_from_json(const Schema& s, const json& j);

json verdict_to_json(const BraidVerdict& v);
json factor_to_json(const FactorResult& r);
json type_to_json(const CurveType& t);
json table_to_json(const std::vector<TableRow>& rows);

// Pretty printed, sorted keys, trailing newline.
std::string dump(const json& j);

json read_json_file(const std::string& path);

}  // namespace mtw
