#pragma once

#include "rootdata.hpp"

#include <string>
#include <vector>

namespace vok {

// Level-k dominant weight.  tuple() is the (a0, a1, ..., an) view; for type
// A_{n-1} that is the C_{n,m} label the level-rank maps act on.
struct AffineWeight {
  AlgebraId algebra;
  int level = 0;
  IVec labels;  // finite part, Dynkin labels
  int a0 = 0;   // level - <labels, theta>

  IVec tuple() const {
    IVec t;
    t.reserve(labels.size() + 1);
    t.push_back(a0);
    t.insert(t.end(), labels.begin(), labels.end());
    return t;
  }
  bool operator==(const AffineWeight& o) const {
    return algebra == o.algebra && level == o.level && labels == o.labels;
  }
};

AffineWeight make_affine(const AlgebraId& g, int level, const IVec& labels);

// Complete list of level-k dominant weights, ordered by descending
// lexicographic tuple (a0, a1, ...); the vacuum (k, 0, ...) is row 0 and
// every matrix downstream indexes labels in this order.
std::vector<AffineWeight> enumerate_level_weights(const AlgebraId& g, int k);

// h = (lambda, lambda + 2 rho) / (2 (k + hv)), exact.
Rat conformal_weight(const AlgebraId& g, int k, const IVec& labels);

// c = k dim / (k + hv), exact.
Rat central_charge(const AlgebraId& g, int k);

// Fusion with the level-k simple current k L_1 of type A: one cyclic shift
// of the tuple, rho_n(a_0,...,a_{n-1}) = (a_{n-1}, a_0, ..., a_{n-2}).
AffineWeight simple_current_rotate(const AffineWeight& a);

// Contragredient module: finite part replaced by -w0(lambda).
AffineWeight conjugate_module(const AffineWeight& a);

std::string tuple_str(const IVec& t);

}  // namespace vok
