#include "affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace vok {

AffineWeight make_affine(const AlgebraId& g, int level, const IVec& labels) {
  const RootDatum& rd = root_datum(g);
  if (static_cast<int>(labels.size()) != rd.rank())
    throw std::invalid_argument("affine weight: wrong rank");
  for (int v : labels)
    if (v < 0) throw std::invalid_argument("affine weight: negative label");
  Int pairing = rd.theta_pairing(labels);
  if (pairing > level) throw std::invalid_argument("weight not admissible at this level");
  AffineWeight w;
  w.algebra = g;
  w.level = level;
  w.labels = labels;
  w.a0 = level - static_cast<int>(pairing);
  return w;
}

std::vector<AffineWeight> enumerate_level_weights(const AlgebraId& g, int k) {
  if (k <= 0) throw std::invalid_argument("level must be positive");
  const RootDatum& rd = root_datum(g);
  int n = rd.rank();
  std::vector<AffineWeight> out;
  IVec labels(n, 0);
  // depth-first over labels with remaining comark budget
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == n) {
      out.push_back(make_affine(g, k, labels));
      return;
    }
    int cm = rd.comarks[pos];
    for (int v = 0; v * cm <= budget; ++v) {
      labels[pos] = v;
      self(self, pos + 1, budget - v * cm);
    }
    labels[pos] = 0;
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), [](const AffineWeight& x, const AffineWeight& y) {
    return x.tuple() > y.tuple();
  });
  return out;
}

Rat conformal_weight(const AlgebraId& g, int k, const IVec& labels) {
  const RootDatum& rd = root_datum(g);
  if (rd.theta_pairing(labels) > k)
    throw std::invalid_argument("weight not admissible at this level");
  for (int v : labels)
    if (v < 0) throw std::invalid_argument("weight not dominant");
  IVec shifted(labels);
  for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += 2;  // lambda + 2 rho
  Rat num = rd.inner(labels, shifted);
  return num / Rat(2 * (k + rd.dual_coxeter));
}

Rat central_charge(const AlgebraId& g, int k) {
  const RootDatum& rd = root_datum(g);
  return Rat(Int(k) * rd.dimension, Int(k + rd.dual_coxeter));
}

AffineWeight simple_current_rotate(const AffineWeight& a) {
  if (a.algebra.series != 'A')
    throw std::invalid_argument("simple-current rotation needs type A");
  IVec t = a.tuple();
  std::rotate(t.rbegin(), t.rbegin() + 1, t.rend());  // (a_{n-1}, a_0, ...)
  IVec labels(t.begin() + 1, t.end());
  return make_affine(a.algebra, a.level, labels);
}

AffineWeight conjugate_module(const AffineWeight& a) {
  const RootDatum& rd = root_datum(a.algebra);
  return make_affine(a.algebra, a.level, rd.dual_weight(a.labels));
}

std::string tuple_str(const IVec& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s;
}

}  // namespace vok
