#include "affine.hpp"
#include "invariants.hpp"
#include "lattice.hpp"
#include "levelrank.hpp"
#include "modular.hpp"
#include "rootdata.hpp"
#include "twist.hpp"
#include "classify.hpp"

#include <iostream>

using namespace vok;

int main() {
  // root data sanity
  for (const char* n : {"A8", "F4", "A2", "E6", "E7", "A5", "B4"}) {
    auto id = parse_algebra(n);
    const RootDatum& rd = root_datum(*id);
    std::cout << n << ": dim=" << rd.dimension << " hv=" << rd.dual_coxeter
              << " npos=" << rd.positive_roots.size() << "\n";
  }
  const RootDatum& f4 = root_datum(AlgebraId{'F', 4});
  IVec L4{0, 0, 0, 1};
  for (int i = 0; i < 4; ++i) {
    IVec li(4, 0);
    li[i] = 1;
    std::cout << "F4 (L4|L" << i + 1 << ") = " << rat_str(f4.inner(L4, li)) << "\n";
  }
  std::cout << "F4 orbit(L4) size = " << f4.weyl_orbit(L4).size() << "\n";

  // tau examples
  std::cout << "tau(9,0,0) = " << tuple_str(tau(3, 9, {9, 0, 0})) << "\n";
  std::cout << "tau(4,4,1) = " << tuple_str(tau(3, 9, {4, 4, 1})) << "\n";
  std::cout << "tau(1,4,4) = " << tuple_str(tau(3, 9, {1, 4, 4})) << "\n";
  std::cout << "C0(3,9) size = " << enumerate_C0(3, 9).size() << "\n";

  // conformal weights
  AlgebraId a8{'A', 8}, a2{'A', 2};
  IVec l3a1(8, 0);
  l3a1[0] = 3;
  IVec l3a2(8, 0);
  l3a2[1] = 3;
  std::cout << "h(A8,3,3L1) = " << rat_str(conformal_weight(a8, 3, l3a1)) << "\n";
  std::cout << "h(A8,3,3L2) = " << rat_str(conformal_weight(a8, 3, l3a2)) << "\n";
  std::cout << "h(A2,1,L1) = " << rat_str(conformal_weight(a2, 1, {1, 0})) << "\n";
  std::cout << "c(A2,9) = " << rat_str(central_charge(a2, 9))
            << " c(A8,3) = " << rat_str(central_charge(a8, 3)) << "\n";
  std::cout << "count(A8,3) = " << enumerate_level_weights(a8, 3).size() << "\n";

  // modular data small
  auto md21 = build_modular_data(a2, 1);
  auto chk = check_modular_data(md21);
  std::cout << "A2,1 |S01| = " << std::abs(md21.S(0, 1))
            << " unit=" << chk.unitarity_residual << " sym=" << chk.symmetry_residual
            << " s2c=" << chk.s2_vs_conjugation << " st3=" << chk.st_cubed_residual << "\n";

  // lattice cosets
  auto table = cosets_mod2(build_An(8), 10);
  std::cout << "A8 cosets complete=" << table.complete << " dist:";
  for (auto [norm, count] : table.norm_distribution())
    std::cout << " " << norm << ":" << count;
  std::cout << "\n";

  // twist space
  const TwistSpace& ts = twist_space();
  auto [even, odd] = ts.root_parity_counts(ts.classes_of_norm(2)[0]);
  std::cout << "C2 parity = (" << even << "," << odd << ")\n";
  for (const auto& v : ts.paper_vectors()) {
    std::cout << v.name << " support=" << v.support_size();
    for (long long m : {72, 8, 4, 20, 36})
      if (ts.verify_eigen(v.coeff, m))
        std::cout << " eigen=" << m << " weight=" << rat_str(ts.omega_weight(m));
    std::cout << "\n";
  }

  // twisted weights A2+A2 swap
  auto a2a2 = direct_sum(build_An(2), build_An(2));
  for (const auto& c : twisted_weight_classes(a2a2, swap_isometry(2)))
    std::cout << "A2+A2 swap class weight = " << rat_str(c.weight)
              << " n=" << rat_str(c.n_lambda) << "\n";

  // classifier
  for (const auto& c : enumerate_candidates(60))
    std::cout << "cand60: " << c.name() << "\n";
  for (const auto& p : ratio_pool(96)) std::cout << "pool96: " << p.algebra.name() << "\n";

  auto fr = f4_check();
  std::cout << "F4 order=" << fr.sigma_order << " rootmin=" << rat_str(fr.root_pairing_min)
            << " hnorm=" << rat_str(fr.h_norm_voa) << " pairs=" << fr.weights.size()
            << " match=" << fr.pairs_match_paper << " pos=" << fr.all_positive
            << " nohalf=" << fr.none_half << "\n";
  for (const auto& w : fr.weights)
    std::cout << "  pair h=" << rat_str(w.pair.h_total) << " orbit=" << rat_str(w.min_pair_orbit)
              << " full=" << rat_str(w.min_pair_full) << " tw=" << rat_str(w.twisted_weight)
              << "\n";

  auto er = e7a5_check();
  std::cout << "E7A5 hnorm=" << rat_str(er.h_norm_voa) << " int=" << er.h_norm_integral
            << " witness=" << er.order_two_witness << " dim=" << er.dim_e7a5
            << " fixed=" << er.dim_fixed << " fwd=" << er.forward.value << "\n";
  for (const auto& s : er.half_integral_pairings) std::cout << "  halfint " << s << "\n";
  return 0;
}
