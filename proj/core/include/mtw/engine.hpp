#pragma once

// Curve operations on drawings: minimal position by bigon removal,
// intersection numbers, twists, isotopy and mapping-class comparison.
// Multitwist components name curves of the drawing they act on.

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mtw/arrangement.hpp"
#include "mtw/drawing.hpp"
#include "mtw/formulas.hpp"
#include "mtw/model.hpp"

namespace mtw {

// New drawing holding copies of the given curves with their relative strand
// order preserved. Curve i of the result is curves[i] of d.
Drawing extract(const Drawing& d, const std::vector<int>& curves);

// Removes bigons between the red and the blue family until none is left.
// Only red curves move. With rng, bigons are removed one at a time in a
// random order. Returns the number of bigons removed.
int reduce(Drawing& d, const std::vector<int>& red, const std::vector<int>& blue,
           std::mt19937_64* rng = nullptr);

// Throws NotGeneralPosition when c crosses itself.
void check_simple(const Drawing& d, int c);
bool is_essential(const Drawing& d, int c);

// Isotopes the curves so that they are drawn pairwise disjoint; throws
// NotDisjoint when two of them must intersect.
void make_disjoint(Drawing& d, const std::vector<int>& curves);

int geometric_intersection(const Drawing& d, int x, int y);
// Signed count with the stored orientations; no minimality needed.
int algebraic_intersection(const Drawing& d, int x, int y);

bool isotopic(const Drawing& d, int x, int y, bool oriented = false);

// Geometric and algebraic tables over all pairs of the given curves.
IntersectionData intersection_data(const Drawing& d, const std::vector<int>& curves);

// Twists the moving curves (drawn pairwise disjoint) n times along c.
void twist_along(Drawing& d, const std::vector<int>& moving, int c, long n);

// Applies t to the moving curves. The curves of t must be drawn pairwise
// disjoint; NotDisjoint otherwise.
void apply_multitwist(Drawing& d, const std::vector<int>& moving, const MultiTwist& t);

// Image of curve x under the product seq[0] seq[1] ... seq[k-1] (the last
// factor acts first). Computed on a private copy of d.
EmbeddedCurve apply_sequence(const Drawing& d, const std::vector<MultiTwist>& seq, int x);

// Profile of x against t, with x in minimal position with all curves of t.
CrossingProfile crossing_profile(const Drawing& d, int x, const MultiTwist& t);

struct HomologyData {
  std::shared_ptr<const IntersectionForm> form;  // on the edge basis
  std::map<std::string, HomologyClass> classes;
};

// Classes as signed edge-crossing vectors with the pairing of the dual
// single-chord curves. Needs a one-polygon, one-vertex, unpunctured schema
// (InvalidInput otherwise). Checks the pairing against the drawn crossings
// of every pair of the given curves.
HomologyData classes_and_pairing(const Drawing& d, const std::vector<int>& curves);
HomologyClass class_of(const Drawing& d, int c, const HomologyData& h);
bool homology_available(const Schema& s);

struct TestSet {
  std::vector<std::string> red, blue;
};

// Throws TestSetNotFilling unless the reduced test set cuts the surface into
// disks and once-punctured disks.
void check_filling(const Drawing& d, const TestSet& test);

// Alexander method on the oriented images of the test set.
bool mapping_classes_equal(const Drawing& d, const std::vector<MultiTwist>& f,
                           const std::vector<MultiTwist>& g, const TestSet& test);

struct OrbitSize {
  int size = 0;
  bool over_cap = false;
};

std::map<std::string, OrbitSize> orbit_sizes(const Drawing& d, const std::vector<MultiTwist>& f,
                                             const std::vector<std::string>& curves, int cap = 32);

}  // namespace mtw
