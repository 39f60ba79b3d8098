#pragma once

#include "rootdata.hpp"

#include <vector>

namespace vok {

// Partitions as weakly decreasing positive parts; the empty partition is {}.
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

bool in_box(const Partition& p, int n, int m);  // h(p) <= n and p_1 <= m

// C_{n,m}: tuples (a_0..a_{n-1}) of nonnegatives summing to m.
bool in_C(const IVec& a, int n, int m);

// (a_1+...+a_{n-1}, a_2+...+a_{n-1}, ..., a_{n-1})
Partition d_map(int n, int m, const IVec& a);

// (m - p_1 + p_n, p_1 - p_2, ..., p_{n-1} - p_n), inverse of d_map
IVec w_map(int n, int m, const Partition& p);

Partition transpose(const Partition& p);

int degree(int n, int m, const IVec& a);  // |d_{n,m}(a)| mod n

// rho_m^{-|d(a)|/n}( w_{m,n}( d_{n,m}(a)^t ) ); requires degree 0.
IVec tau(int n, int m, const IVec& a);

std::vector<IVec> enumerate_C0(int n, int m);

struct LevelRankPair {
  IVec a;        // in C0_{n,m}
  IVec tau_a;    // in C0_{m,n}
};
std::vector<LevelRankPair> levelrank_pairs(int n, int m);

}  // namespace vok
