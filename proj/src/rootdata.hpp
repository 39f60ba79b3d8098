#pragma once

#include "rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vok {

struct AlgebraId {
  char series = 'A';
  int rank = 0;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
  bool operator==(const AlgebraId& o) const { return series == o.series && rank == o.rank; }
  bool operator<(const AlgebraId& o) const {
    return series != o.series ? series < o.series : rank < o.rank;
  }
};

// "A8" -> {A,8}; rejects series/rank outside the standard existence ranges
// (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F4, G2; classical ranks capped at 9).
std::optional<AlgebraId> parse_algebra(const std::string& s);

// Exact data for a finite simple Lie algebra in the normalization
// <theta,theta> = 2.  Weights live in Dynkin-label coordinates throughout;
// the Cartan matrix convention is cartan[i][j] = 2(a_i,a_j)/(a_j,a_j), so a
// root beta = sum c_i a_i has labels c^T A and the simple reflection acts by
// s_i(w)_j = w_j - w_i A_ij.
struct RootDatum {
  AlgebraId id;
  IMat cartan;                 // cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
  RVec simple_root_norms;      // (a_i,a_i), long roots have norm 2
  IMat positive_roots;         // coefficients over simple roots
  RMat weight_gram;            // (L_i|L_j) = (A^-1 D)_ij, D = diag((a_j,a_j)/2)
  IVec rho;                    // all labels 1
  IVec theta_coeffs;           // marks: theta = sum marks_i a_i
  IVec comarks;                // marks_i (a_i,a_i)/2
  int dual_coxeter = 0;        // 1 + sum comarks
  int dimension = 0;           // rank + 2 |Delta+|
  Int weyl_order = 0;

  int rank() const { return id.rank; }

  Rat inner(const IVec& a, const IVec& b) const;       // (a|b) via weight_gram
  IVec root_labels(const IVec& root_coeffs) const;     // c^T A
  Rat root_norm(const IVec& root_coeffs) const;

  // <w, theta> paired against comarks; level admissibility is <w,theta> <= k
  Int theta_pairing(const IVec& labels) const;

  IVec reflect(const IVec& labels, int i) const;
  IVec dominant_rep(IVec labels) const;                // unique dominant W-orbit rep
  std::vector<IVec> weyl_orbit(const IVec& labels) const;
  IVec dual_weight(const IVec& labels) const;          // -w0(w)

  // All dominant weights mu <= lambda (lambda - mu in Q+); these index the
  // W-orbits making up the weight system of L(lambda).
  std::vector<IVec> dominant_weights_below(const IVec& labels) const;

  // min over the W-orbit of lambda of (h|w lambda), h and lambda dominant;
  // equals -(h|dominant_rep(-lambda)).
  Rat min_orbit_pairing(const IVec& h, const IVec& lambda) const;
  // Same minimum taken over the full weight system of L(lambda).
  Rat min_weight_system_pairing(const IVec& h, const IVec& lambda) const;
};

const RootDatum& root_datum(const AlgebraId& id);

// Weyl group as label-coordinate matrices (row-vector action w -> w M),
// with determinant signs; used by the generic Kac-Peterson sum.  Safe for
// |W| up to a few hundred thousand, guarded by the cap.
struct WeylElement {
  IMat mat;
  int sign;
};
std::vector<WeylElement> enumerate_weyl_group(const RootDatum& rd, size_t cap = 10'000'000);

RMat rat_mat_inverse(const RMat& m);

}  // namespace vok
