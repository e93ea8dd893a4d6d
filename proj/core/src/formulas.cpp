#include "mtw/formulas.hpp"

#include <algorithm>
#include <cstdlib>

namespace mtw {

BoundResult positive_bound_check(long i_ab, long i_a_tb, std::span<const PositiveTerm> terms) {
  long sum = 0;
  for (auto& t : terms) sum += t.abs_n * t.i_ac * t.i_bc;
  long rhs = std::labs(i_a_tb - sum);
  return {i_ab >= rhs, i_ab - rhs};
}

BoundResult ivanov_bound_check(long i_ab, long i_a_tb, std::span<const IvanovTerm> terms) {
  long rhs = -i_a_tb;
  for (auto& t : terms) rhs += std::max(std::labs(t.n) - 2, 0L) * t.i_ac * t.i_bc;
  return {i_ab >= rhs, i_ab - rhs};
}

long hidden_formula(const CrossingProfile& profile, std::span<const CurveTerm> per_curve) {
  const auto& comps = profile.against.components();
  if (per_curve.size() != comps.size()) {
    throw Error(Errc::InconsistentProfile, "per-curve data does not match the multitwist");
  }
  if (auto bad = check_profile(profile)) throw Error(Errc::InconsistentProfile, *bad);
  long total = 0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& t = per_curve[j];
    if (t.abs_n != std::labs(comps[j].exponent)) {
      throw Error(Errc::InconsistentProfile, "exponent of " + comps[j].curve.id + " differs");
    }
    if (static_cast<long>(profile.multiplicity(comps[j].curve)) != t.i_ac) {
      throw Error(Errc::InconsistentProfile,
                  "crossing multiplicity of " + comps[j].curve.id + " differs");
    }
    total += (t.abs_n * t.i_ac - 1) * t.i_ac;
  }
  return total + x_value(profile);
}

IntersectionForm::IntersectionForm(std::vector<std::vector<long>> matrix) : m_(std::move(matrix)) {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i].size() != m_.size()) throw Error(Errc::InvalidInput, "form is not square");
  }
  for (std::size_t i = 0; i < m_.size(); ++i) {
    for (std::size_t j = 0; j < m_.size(); ++j) {
      if (m_[i][j] != -m_[j][i]) throw Error(Errc::InvalidInput, "form is not antisymmetric");
    }
  }
}

long pairing(const HomologyClass& v, const HomologyClass& w) {
  const auto& form = v.form ? v.form : w.form;
  if (!form || v.coordinates.size() != form->dim() || w.coordinates.size() != form->dim()) {
    throw Error(Errc::InvalidInput, "homology classes do not share a form");
  }
  long s = 0;
  for (std::size_t i = 0; i < form->dim(); ++i) {
    if (v.coordinates[i] == 0) continue;
    for (std::size_t j = 0; j < form->dim(); ++j) {
      s += v.coordinates[i] * (*form)(i, j) * w.coordinates[j];
    }
  }
  return s;
}

namespace {
const HomologyClass& class_of(const ClassMap& classes, const CurveRef& c) {
  auto it = classes.find(c.id);
  if (it == classes.end()) throw Error(Errc::MissingClass, "no class for " + c.id);
  return it->second;
}
}  // namespace

HomologyClass twist_homology(const MultiTwist& t, const HomologyClass& v, const ClassMap& classes) {
  HomologyClass out = v;
  for (auto& comp : t.components()) {
    const auto& c = class_of(classes, comp.curve);
    long k = comp.exponent * pairing(v, c);
    for (std::size_t i = 0; i < out.coordinates.size(); ++i) out.coordinates[i] += k * c.coordinates[i];
  }
  return out;
}

long algebraic_pair_after_twist(const MultiTwist& t, const HomologyClass& v,
                                const HomologyClass& w, const ClassMap& classes) {
  long s = pairing(v, w);
  for (auto& comp : t.components()) {
    const auto& c = class_of(classes, comp.curve);
    s += comp.exponent * pairing(v, c) * pairing(c, w);
  }
  return s;
}

}  // namespace mtw
