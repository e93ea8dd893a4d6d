#pragma once

// Deciding the braid relation for pairs of multitwists from intersection
// numbers and exponents, the curve-type table, and factoring braid group
// homomorphisms into chains plus a cyclic part.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtw/model.hpp"

namespace mtw {

enum class CurveTypeTag { T1, T2, T3, T4, T5, Invalid };
std::string_view type_name(CurveTypeTag tag);

struct CurveType {
  CurveTypeTag tag = CurveTypeTag::Invalid;
  long i_ab = 0;
  long abs_n = 0;
  long x = 0;
};

struct TableRow {
  CurveTypeTag tag;
  long i_ab;
  std::optional<long> abs_n;  // empty: any exponent
  long x;
  // What the other intersecting partners must contribute: 0 means each
  // meets the curve once with exponent +-1, 1 adds a single partner with
  // |n| = 2.
  long residual;
};

// Solves the identity i_ab = (|n| i_ab - 1) i_ab + X + (others) over the box
// i_ab in 0..4, |n| in 1..4, X in 0..4, where every other partner adds a
// nonnegative (|n_j| i_j - 1) i_j. Rows with i_ab = 0 collapse into one.
std::vector<TableRow> enumerate_table(long max_i = 4, long max_n = 4, long max_x = 4);

struct BraidPair {
  CurveRef a, b;
  long n = 0;
  friend bool operator==(const BraidPair&, const BraidPair&) = default;
};

struct BraidDecomposition {
  MultiTwist common;
  std::vector<BraidPair> pairs;
};

// Checks the decomposition's disjointness pattern against data; returns the
// first violation.
std::optional<std::string> check_decomposition(const BraidDecomposition& d,
                                               const IntersectionData& data);

struct Split {
  MultiTwist a, b, common;
};

// Components with the same curve and exponent go to common. A shared curve
// with different exponents throws CommonCurveExponentClash.
Split split_common(const MultiTwist& tA, const MultiTwist& tB);

enum class PairingFailure { None, ExponentMismatch, NoMatching, ResidualIntersection };
std::string_view failure_name(PairingFailure f);

struct Pairing {
  PairingFailure failure = PairingFailure::None;
  std::string detail;
  std::vector<BraidPair> pairs;
  MultiTwist common;
  bool ok() const { return failure == PairingFailure::None; }
};

Pairing pair_and_reindex(const MultiTwist& tA, const MultiTwist& tB, const IntersectionData& data);

// Type of a_i, paired with b_i, from its profile against tB.
CurveType classify_curve(const CurveRef& a, const CurveRef& b, const MultiTwist& tB,
                         const IntersectionData& data, const CrossingProfile& profile);

// Removes the pair (a, b) from both multitwists. Needs a to meet only b in
// tB, b to meet only a in tA, i(a, b) = 1 and equal exponents +-1.
std::pair<MultiTwist, MultiTwist> delete_braided_pair(const MultiTwist& tA, const MultiTwist& tB,
                                                      const BraidPair& pair,
                                                      const IntersectionData& data);

enum class NotBraidedReason { None, ExponentClash, Residue };

struct BraidVerdict {
  bool braided = false;
  BraidDecomposition decomposition;  // when braided
  NotBraidedReason reason = NotBraidedReason::None;
  MultiTwist residue_a, residue_b;   // witness when not braided
  std::string detail;
};

// pair_order, when given, lists (a id, b id) deletions to try first; used to
// check that the order does not matter.
BraidVerdict decide_braided(const MultiTwist& tA, const MultiTwist& tB, const IntersectionData& data,
                            const std::vector<std::pair<std::string, std::string>>* pair_order = nullptr);

struct BraidHomSpec {
  int strands = 0;
  std::vector<MultiTwist> images;  // sigma_1 .. sigma_{n-1}
};

struct Chain {
  std::vector<CurveRef> curves;  // one per generator
  long sign = 0;
};

struct Factorization {
  std::vector<Chain> chains;
  MultiTwist cyclic;
};

struct Rejection {
  Errc code;
  int i = 0, j = 0;           // 1-based generator or chain indices
  bool disjointness = false;  // rejected by the support-disjointness test
  std::string detail;
};

struct FactorResult {
  std::optional<Factorization> factorization;
  std::optional<Rejection> rejection;
};

FactorResult factor_braid_hom(const BraidHomSpec& spec, const IntersectionData& data);

// Image of sigma_i rebuilt from the factorization.
MultiTwist reassemble(const Factorization& f, int generator);

}  // namespace mtw
