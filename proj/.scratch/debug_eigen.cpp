#include "twist.hpp"
#include "classify.hpp"
#include "affine.hpp"

#include <iostream>
#include <map>

using namespace vok;

int main() {
  const TwistSpace& ts = twist_space();
  const auto& cosets = ts.cosets();
  EvenLattice a8 = build_An(8);

  auto ambient = [&](std::vector<int> v9) {
    LVec out(8, 0);
    long long acc = 0;
    for (int i = 0; i < 8; ++i) {
      acc += v9[i];
      out[i] = acc;
    }
    return out;
  };
  LVec mu4 = ambient({1, 1, -1, -1, 0, 0, 0, 0, 0});
  LVec mu6 = ambient({1, 1, 1, -1, -1, -1, 0, 0, 0});
  LVec mu8 = ambient({1, 1, 1, 1, -1, -1, -1, -1, 0});

  auto parity = [&](uint32_t key, const LVec& mu) {
    return (int)(((a8.pairing(cosets.by_key(key).representative, mu)) % 2 + 2) % 2);
  };

  for (auto [name, mu, norm] : {std::tuple{"mu4", mu4, 2LL}, {"mu6", mu6, 2LL}, {"mu8", mu8, 8LL}}) {
    int even = 0, odd = 0;
    for (uint32_t k : ts.classes_of_norm(norm))
      (parity(k, mu) == 0 ? even : odd)++;
    std::cout << name << " on C" << norm << ": even=" << even << " odd=" << odd << "\n";
  }

  // paper count check for v2: beta in C2, split alpha odd wrt beta by parity of <alpha+beta, mu4>
  {
    std::map<std::pair<int,int>, int> profile;  // (beta parity, count pair) histogram
    for (uint32_t k : ts.classes_of_norm(2)) {
      const LVec& rep = cosets.by_key(k).representative;
      int pb = parity(k, mu4);
      int even_t = 0, odd_t = 0;
      for (const auto& alpha : ts.roots()) {
        if ((((a8.pairing(alpha, rep)) % 2) + 2) % 2 == 0) continue;
        LVec sum(8);
        for (int i = 0; i < 8; ++i) sum[i] = alpha[i] + rep[i];
        int pt = (int)(((a8.pairing(sum, mu4)) % 2 + 2) % 2);
        (pt == 0 ? even_t : odd_t)++;
      }
      profile[{pb, even_t * 100 + odd_t}]++;
    }
    for (auto& [k, c] : profile)
      std::cout << "v2 beta-parity " << k.first << " (evenT,oddT)=(" << k.second / 100 << ","
                << k.second % 100 << ") x" << c << "\n";
  }

  // where do transitions from C2 land?
  {
    std::map<long long, int> fam;
    uint32_t k0 = ts.classes_of_norm(2)[0];
    const LVec& rep = cosets.by_key(k0).representative;
    for (const auto& alpha : ts.roots()) {
      if ((((a8.pairing(alpha, rep)) % 2) + 2) % 2 == 0) continue;
      LVec sum(8);
      for (int i = 0; i < 8; ++i) sum[i] = alpha[i] + rep[i];
      fam[cosets.by_key(ts.class_of_vector(sum)).min_norm]++;
    }
    std::cout << "transitions from one C2 class land in families:";
    for (auto& [n, c] : fam) std::cout << " C" << n << ":" << c;
    std::cout << "\n";
  }

  // compute M v for v2,v3,v4 and report residual structure
  auto mv = [&](const std::array<long long, 256>& v) {
    std::array<long long, 256> out{};
    const auto& m = ts.matrix();
    for (int i = 0; i < 256; ++i) {
      long long acc = 0;
      for (int j = 0; j < 256; ++j) acc += m[i][j] * v[j];
      out[i] = acc;
    }
    return out;
  };
  for (const auto& v : ts.paper_vectors()) {
    auto w = mv(v.coeff);
    // try to detect eigen on the support and junk off it
    std::cout << v.name << ":";
    bool propor = true;
    long long ratio_num = 0, ratio_den = 0;
    long long max_off = 0;
    for (int i = 0; i < 256; ++i) {
      if (v.coeff[i] != 0) {
        if (ratio_den == 0) { ratio_num = w[i]; ratio_den = v.coeff[i]; }
        if (w[i] * ratio_den != ratio_num * v.coeff[i]) propor = false;
      } else if (std::abs(w[i]) > max_off) {
        max_off = std::abs(w[i]);
      }
    }
    std::cout << " proportional-on-support=" << propor;
    if (ratio_den) std::cout << " ratio=" << ratio_num << "/" << ratio_den;
    std::cout << " max-off-support=" << max_off << "\n";
  }

  // spectrum of the full matrix
  auto spec = ts.full_spectrum();
  std::map<long long, int> mult;
  for (double e : spec) mult[llround(e)]++;
  std::cout << "spectrum:";
  for (auto& [e, c] : mult) std::cout << " " << e << "x" << c;
  std::cout << "\n";

  // integral pairs: print computed list
  for (const auto& p : integral_pairs_f4a2())
    std::cout << "pair f4=" << tuple_str(p.f4_labels) << " a2=" << tuple_str(p.a2_labels)
              << " h=" << rat_str(p.h_total) << "\n";
  return 0;
}
