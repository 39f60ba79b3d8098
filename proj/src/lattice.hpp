#pragma once

#include "f2.hpp"
#include "rational.hpp"

#include <string>
#include <vector>

namespace vok {

using LVec = std::vector<long long>;   // basis coefficients of a lattice vector
using LMat = std::vector<LVec>;

// Even lattice with a distinguished basis; all vectors are handled as basis
// coefficient vectors, norms through the integer Gram matrix.
struct EvenLattice {
  std::string name;
  LMat gram;

  int rank() const { return static_cast<int>(gram.size()); }
  long long norm(const LVec& x) const { return pairing(x, x); }
  long long pairing(const LVec& x, const LVec& y) const;
};

EvenLattice build_An(int n);
EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b);
// "A8", "A2+A2", "A8+A8+A8"
std::optional<EvenLattice> parse_lattice(const std::string& spec);

// All x != 0 with x^T G x <= bound (and x itself, not -x, both included).
std::vector<LVec> vectors_up_to_norm(const EvenLattice& L, long long bound);

struct CosetClass {
  uint32_t key = 0;           // basis coefficients mod 2, bit i = coeff i
  LVec representative;        // minimal-norm vector in the coset
  long long min_norm = 0;
  long long min_vector_count = 0;  // lattice vectors of that norm in the coset
};

struct CosetTable {
  EvenLattice lattice;
  long long bound = 0;
  std::vector<CosetClass> classes;       // indexed by key, size 2^rank
  bool complete = false;                 // every class saw a vector <= bound

  const CosetClass& by_key(uint32_t key) const { return classes[key]; }
  std::vector<std::pair<long long, int>> norm_distribution() const;
};

// Exhaustive coset minima for L/2L; rank <= 10.
CosetTable cosets_mod2(const EvenLattice& L, long long bound);

// Quadratic space on L/2L: q(x) = <x,x>/2 mod 2, b(x,y) = <x,y> mod 2.
struct F2Quadratic {
  const EvenLattice* L;
  int dim;
  int q(uint32_t key) const;
  int b(uint32_t k1, uint32_t k2) const;
};
F2Quadratic f2_quadratic(const EvenLattice& L);

// Maximal totally singular subspace (greedy extension; maximality checked),
// plus a complementary one when it exists.
struct TotallySingularPair {
  F2Basis X;
  F2Basis Y;       // complementary: X + Y spans, X cap Y = 0
  bool have_Y = false;
};
TotallySingularPair max_totally_singular(const EvenLattice& L);

// Order-2 isometry data: N = (1 - P0)h cap L, M = (1 - sigma)L.
struct EigenlatticeData {
  LMat h0_basis;      // fixed sublattice basis (ker(1 - sigma) cap L)
  LMat n_basis;       // N = ker(1 + sigma) cap L
  LMat m_generators;  // (1 - sigma) of the lattice basis
  int rank_n = 0;
  bool m_inside_n = false;
};
EigenlatticeData eigenlattice_data(const EvenLattice& L, const LMat& sigma);

struct TwistedWeightClass {
  RVec coset_rep;      // in basis coordinates of L (rational)
  Rat n_lambda;        // minimal norm in the coset of P0(L) inside P0(L*)
  Rat weight;          // rank(N)/16 + n_lambda/2
};

// One class per element of P0(L*)/P0(L); sigma must be an order-2 isometry.
std::vector<TwistedWeightClass> twisted_weight_classes(const EvenLattice& L,
                                                       const LMat& sigma);

// The swap isometry on A2+A2 (block exchange), identity, and negation.
LMat swap_isometry(int block_rank);
LMat identity_isometry(int rank);
LMat negation_isometry(int rank);

// Phi = < mu_{1,2}(A8), eta(X), 2L >, Psi = < mu_{2,3}(A8), eta(Y), 2L >
// inside L = A8^3; the report checks total singularity, dimensions, span.
struct PhiPsiReport {
  int phi_dim = 0;          // dim of Phi/2L in L/2L
  int psi_dim = 0;
  bool phi_singular = false;
  bool psi_singular = false;
  bool spans = false;       // Phi + Psi = L
  bool mu_perp_eta = false; // mu_{i,j}(A8) orthogonal to eta(A8)
};
PhiPsiReport build_phi_psi(const F2Basis& X, const F2Basis& Y);

}  // namespace vok
