#pragma once

#include "affine.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <vector>

namespace vok {

// S and T matrices for an affine algebra at a level.  S is computed in
// floating point (determinant form for type A, alternating Weyl sum
// otherwise) and normalized by unitarity with a positive real vacuum row;
// structural data (label order, conjugation permutation) stays exact.
struct ModularData {
  AlgebraId algebra;
  int level = 0;
  std::vector<AffineWeight> labels;  // descending-lex tuples; vacuum first
  Eigen::MatrixXcd S;
  Eigen::VectorXcd T;                // diagonal entries exp(2 pi i (h - c/24))
  Rat c;                             // central charge
  std::vector<Rat> h;                // conformal weights per label

  int index_of_tuple(const IVec& tuple) const;
  int index_of_labels(const IVec& labels) const;

  double qdim(int label) const;          // Re(S_{0a}/S_{00})
  double glob_sum() const;               // sum of qdim^2
  double glob_s00() const;               // 1/S_00^2

  std::vector<int> conjugation_permutation() const;  // a -> index of conj module
};

ModularData build_modular_data(const AlgebraId& g, int k);

struct ModularChecks {
  double unitarity_residual;    // ||S S* - I||_max
  double symmetry_residual;     // ||S - S^T||_max
  double s2_vs_conjugation;     // ||S^2 - C||_max
  double st_cubed_residual;     // ||(ST)^3 - S^2||_max
  double vacuum_row_min_real;   // min Re S_{0a}
  double vacuum_row_max_imag;   // max |Im S_{0a}|
  bool pass(double tol) const;
};
ModularChecks check_modular_data(const ModularData& md);

// Glob(U) = Glob(V) / (qdim_V U)^2 for an extension U of V decomposing into
// the given V-sectors.  Both sides reported; the caller compares.
struct ExtensionCheck {
  double qdim_U;        // sum of branching qdims
  double glob_big;      // Glob(U) from its own modular data
  double glob_small;    // Glob(V)
  double predicted_big; // glob_small / qdim_U^2
  double residual;      // |glob_big - predicted_big|
};
ExtensionCheck extension_check(const ModularData& small, const ModularData& big,
                               const std::vector<IVec>& branching_labels);

}  // namespace vok
