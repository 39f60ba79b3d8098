#pragma once

#include "lattice.hpp"
#include "rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace vok {

// The theta-twisted top space over A8/2A8: basis t_beta indexed by the 256
// cosets (keys in increasing order), the integer operator M with
// Omega_1 = 5/4 - M/192, the named eigenvectors, and the gamma-extended
// E_alpha transition action.
class TwistSpace {
 public:
  TwistSpace();

  static constexpr int kClasses = 256;

  const CosetTable& cosets() const { return cosets_; }
  const std::vector<LVec>& roots() const { return roots_; }  // 72 norm-2 vectors

  // index <-> coset key (identical by construction; kept for clarity)
  uint32_t key_of_index(int idx) const { return static_cast<uint32_t>(idx); }

  int add_class(uint32_t k1, uint32_t k2) const { return static_cast<int>(k1 ^ k2); }
  int class_of_vector(const LVec& v) const;

  // (even, odd) pairing counts of the 72 roots against the class
  std::pair<int, int> root_parity_counts(uint32_t key) const;

  const std::vector<std::array<long long, kClasses>>& matrix() const { return m_; }

  Rat omega_weight(long long m_eigenvalue) const {
    return Rat(5, 4) - Rat(m_eigenvalue, 192);
  }

  struct NamedVector {
    std::string name;
    std::array<long long, kClasses> coeff;
    int support_size() const;
  };
  // v0..v4 built from the minimal-norm families and the mu_{2n} parities
  std::vector<NamedVector> paper_vectors() const;

  // exact check M v = m v
  bool verify_eigen(const std::array<long long, kClasses>& v, long long m) const;

  // numeric spectrum (advisory): all 256 eigenvalues ascending
  std::vector<double> full_spectrum() const;

  // classes by minimal norm 2n
  std::vector<uint32_t> classes_of_norm(long long norm) const;

  // E_alpha on the (beta, gamma) index space; gamma tracked mod 2A8.
  struct Transition {
    long long coeff;
    uint32_t beta;
    uint32_t gamma;
    bool gamma_in_Y;  // whether the new gamma class lies in Y/2A8
  };
  std::vector<Transition> e_alpha_action(const LVec& alpha, uint32_t beta,
                                         uint32_t gamma) const;

  const F2Basis& Y() const { return y_; }

 private:
  EvenLattice a8_;
  CosetTable cosets_;
  std::vector<LVec> roots_;
  std::vector<std::array<long long, kClasses>> m_;
  F2Basis x_, y_;
};

const TwistSpace& twist_space();

// all pairwise sums a+b landing on the grid, sorted, deduplicated
std::vector<Rat> combine_twisted_weights(const std::vector<Rat>& a,
                                         const std::vector<Rat>& b, const Rat& grid);

}  // namespace vok
