#pragma once

// Shared vocabulary: curves, multitwists, intersection tables and crossing
// profiles. Everything here is a plain value type.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtw/error.hpp"

namespace mtw {

struct CurveRef {
  std::string id;
  // Index of the curve inside a Drawing, when the curve is embedded.
  std::optional<int> handle;

  CurveRef() = default;
  CurveRef(std::string id_) : id(std::move(id_)) {}
  CurveRef(const char* id_) : id(id_) {}
  CurveRef(std::string id_, int handle_) : id(std::move(id_)), handle(handle_) {}

  friend bool operator==(const CurveRef& a, const CurveRef& b) {
    return a.id == b.id;
  }
  friend std::strong_ordering operator<=>(const CurveRef& a, const CurveRef& b) {
    return a.id <=> b.id;
  }
};

struct OrientedCurve {
  CurveRef curve;
  int orientation = 1;  // +1 or -1 relative to the stored orientation

  OrientedCurve reversed() const { return {curve, -orientation}; }
  friend bool operator==(const OrientedCurve&, const OrientedCurve&) = default;
};

struct TwistComponent {
  CurveRef curve;
  long exponent = 0;
  friend bool operator==(const TwistComponent& a, const TwistComponent& b) {
    return a.curve == b.curve && a.exponent == b.exponent;
  }
};

class MultiTwist {
 public:
  MultiTwist() = default;
  // Zero exponents are dropped; a repeated curve is an InvalidInput error.
  explicit MultiTwist(std::vector<TwistComponent> components);
  MultiTwist(std::initializer_list<std::pair<const char*, long>> components);

  const std::vector<TwistComponent>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }

  bool contains(const CurveRef& c) const;
  // Exponent of c, or 0 when c is not a component.
  long exponent(const CurveRef& c) const;
  MultiTwist inverse() const;
  // Components sorted by curve id; used for equality up to ordering.
  MultiTwist sorted() const;
  std::vector<CurveRef> curves() const;

  friend bool operator==(const MultiTwist& a, const MultiTwist& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<TwistComponent> components_;
};

bool same_multitwist(const MultiTwist& a, const MultiTwist& b);

class IntersectionData {
 public:
  void set_geometric(const CurveRef& a, const CurveRef& b, long value);
  // value is the algebraic intersection of a and b with their stored
  // orientations.
  void set_algebraic(const CurveRef& a, const CurveRef& b, long value);

  bool has_geometric(const CurveRef& a, const CurveRef& b) const;
  // Throws MissingIntersectionEntry when absent (a == b is always 0).
  long geometric(const CurveRef& a, const CurveRef& b) const;
  std::optional<long> algebraic(const OrientedCurve& x, const OrientedCurve& y) const;

  // All curve ids mentioned in either table.
  std::vector<CurveRef> curves() const;
  const std::map<std::pair<std::string, std::string>, long>& geometric_table() const {
    return geometric_;
  }
  const std::map<std::pair<std::string, std::string>, long>& algebraic_table() const {
    return algebraic_;
  }

  // Checks symmetry, antisymmetry and |algebraic| <= geometric where both
  // are present. Returns a description of the first violation.
  std::optional<std::string> check_invariants() const;

 private:
  std::map<std::pair<std::string, std::string>, long> geometric_;
  std::map<std::pair<std::string, std::string>, long> algebraic_;
};

struct CrossingProfile {
  CurveRef base;
  MultiTwist against;
  std::vector<CurveRef> sequence;  // cyclic, in order along base
  std::vector<int> arc_flags;      // arc i runs from crossing i to crossing i+1

  std::size_t multiplicity(const CurveRef& c) const;
};

// Builds the profile and fills the arc flags from the exponent signs.
CrossingProfile make_profile(CurveRef base, MultiTwist against,
                             std::vector<CurveRef> sequence);

// Checks the profile invariants; with data, also that the multiplicity of
// each curve matches the geometric intersection with base.
std::optional<std::string> check_profile(const CrossingProfile& profile,
                                         const IntersectionData* data = nullptr);

struct ValidationReport {
  bool valid = true;
  std::vector<std::pair<CurveRef, CurveRef>> intersecting;
};

ValidationReport validate_multitwist(const MultiTwist& t, const IntersectionData& data);

long x_value(const CrossingProfile& profile);

}  // namespace mtw
