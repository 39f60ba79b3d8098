#pragma once

#include "rootdata.hpp"

#include <string>
#include <vector>

namespace vok {

struct LieSummand {
  AlgebraId algebra;
  int level = 0;
  std::string name() const { return algebra.name() + "," + std::to_string(level); }
  bool operator<(const LieSummand& o) const {
    return algebra == o.algebra ? level < o.level : algebra < o.algebra;
  }
  bool operator==(const LieSummand& o) const {
    return algebra == o.algebra && level == o.level;
  }
};

struct CandidateAlgebra {
  std::vector<LieSummand> summands;  // sorted
  int total_dim = 0;
  std::string name() const;
};

// 3 dimFixed + 24 (1 - dimHalf) - dimV; negative results are flagged.
struct OrbifoldDim {
  long long value = 0;
  bool feasible = false;
};
OrbifoldDim orbifold_dim(long long dim_v, long long dim_fixed, long long dim_half);

Rat ratio_for_dim(long long d);  // (d - 24)/24, requires d > 24

// Simple types with h_vee/level equal to the ratio for dimension d, over all
// series through rank 9 plus E6/E7/E8 (one entry per isomorphism class; B2
// is listed as C2).  A type enters the pool if it could be a simple ideal of
// a semisimple algebra of total dimension d whose every ideal has the same
// ratio: dim = d, or dim + (smallest ratio-matching dim) <= d.
std::vector<LieSummand> ratio_pool(long long d);

// All multisets of ratio-matching summands with total dimension d.
std::vector<CandidateAlgebra> enumerate_candidates(long long d, int max_rank = 9);

// Involution fixed-point table, the rows the construction needs:
//   A8          -> B4            (outer diagram involution)
//   A2 + A2     -> A2            (factor swap)
//   F4          -> B4            (inner, sigma_{Lambda4})
//   A8          -> A7 + u(1)     (inner, exp(pi i (L1 + L2)))
//   E7 + A5     -> A7 + A2 + A2 + u(1)
// Required types outside what these rows can produce raise an error.
struct RequiredSubalgebra {
  std::vector<AlgebraId> simple_factors;
  int u1_count = 0;
};
bool subalgebra_filter(const CandidateAlgebra& cand, const RequiredSubalgebra& req);

// F4 level 6 x A2 level 2 pairs with integral total conformal weight.
struct IntegralPair {
  IVec f4_labels;
  IVec a2_labels;
  Rat h_total;
};
std::vector<IntegralPair> integral_pairs_f4a2();

// min over the W-orbit of lambda of (h | w lambda)
Rat min_pairing(const AlgebraId& g, const IVec& h, const IVec& lambda);

// The sigma_{Lambda4} battery on F4,6 A2,2.  Twisted weights use the VOA
// bilinear form, which on the weight-one algebra is level * (normalized
// form) summand by summand; here <h,h> = 6 (Lambda4|Lambda4).
struct F4CheckReport {
  RVec lambda4_inner;              // (L4|L1..L4)
  int sigma_order = 0;
  Rat root_pairing_min;            // min over the 48 roots of (L4|alpha)
  bool root_condition = false;     // min >= -1
  Rat h_norm_voa;                  // 6 (L4|L4)
  struct PairWeight {
    IntegralPair pair;
    Rat min_pair_orbit;            // orbit minimum
    Rat min_pair_full;             // full weight-system minimum
    Rat twisted_weight;            // h_total + min + <h,h>/2
  };
  std::vector<PairWeight> weights;
  bool all_positive = false;
  bool none_half = false;          // no twisted weight equals 1/2
  bool pairs_match_paper = false;  // the 18 pairs and totals
};
F4CheckReport f4_check();

struct E7A5CheckReport {
  Rat h_norm_voa;                  // 3/4 (L2|L2)_E7 + 1/4 (L3|L3)_A5
  bool h_norm_integral = false;
  bool order_two_witness = false;  // 2(h|L_i) integral for admissible fundamentals
  std::vector<std::string> half_integral_pairings;  // the non-integral (h|L_i)
  int dim_e7a5 = 0;                // 133 + 35
  int dim_fixed = 0;               // A7 A2 A2 u(1) = 63 + 8 + 8 + 1
  OrbifoldDim forward;             // 3*80 + 24 - 168
  bool forward_is_96 = false;
};
E7A5CheckReport e7a5_check();

}  // namespace vok
