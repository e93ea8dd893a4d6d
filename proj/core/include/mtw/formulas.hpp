#pragma once

// Intersection bounds, the hidden formula for i(a, tau_C a) and the action
// of multitwists on homology. Pure integer arithmetic over caller data.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mtw/model.hpp"

namespace mtw {

struct BoundResult {
  bool holds = false;
  long slack = 0;
};

struct PositiveTerm {
  long abs_n;
  long i_ac;
  long i_bc;
};

struct IvanovTerm {
  long n;
  long i_ac;
  long i_bc;
};

// i_ab >= | i_a_tb - sum |n| i_ac i_bc |, meant for same-sign multitwists.
BoundResult positive_bound_check(long i_ab, long i_a_tb, std::span<const PositiveTerm> terms);

// i_ab >= -i_a_tb + sum max(|n|-2, 0) i_ac i_bc, any signs.
BoundResult ivanov_bound_check(long i_ab, long i_a_tb, std::span<const IvanovTerm> terms);

struct CurveTerm {
  long abs_n;
  long i_ac;
};

// Predicted i(a, tau_C a). per_curve is aligned with profile.against.
long hidden_formula(const CrossingProfile& profile, std::span<const CurveTerm> per_curve);

class IntersectionForm {
 public:
  explicit IntersectionForm(std::vector<std::vector<long>> matrix);
  std::size_t dim() const { return m_.size(); }
  long operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const std::vector<std::vector<long>>& matrix() const { return m_; }

 private:
  std::vector<std::vector<long>> m_;
};

struct HomologyClass {
  std::vector<long> coordinates;
  std::shared_ptr<const IntersectionForm> form;

  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.coordinates == b.coordinates;
  }
};

long pairing(const HomologyClass& v, const HomologyClass& w);

using ClassMap = std::map<std::string, HomologyClass>;

HomologyClass twist_homology(const MultiTwist& t, const HomologyClass& v, const ClassMap& classes);

long algebraic_pair_after_twist(const MultiTwist& t, const HomologyClass& v,
                                const HomologyClass& w, const ClassMap& classes);

}  // namespace mtw
