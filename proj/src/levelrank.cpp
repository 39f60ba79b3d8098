#include "levelrank.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vok {

bool in_box(const Partition& p, int n, int m) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  if (static_cast<int>(p.size()) > n) return false;
  if (!p.empty() && p[0] > m) return false;
  return true;
}

bool in_C(const IVec& a, int n, int m) {
  if (static_cast<int>(a.size()) != n) return false;
  int s = 0;
  for (int v : a) {
    if (v < 0) return false;
    s += v;
  }
  return s == m;
}

Partition d_map(int n, int m, const IVec& a) {
  if (!in_C(a, n, m)) throw std::invalid_argument("d_map: tuple not in C_{n,m}");
  Partition p;
  for (int i = 1; i < n; ++i) {
    int s = 0;
    for (int j = i; j < n; ++j) s += a[j];
    if (s > 0) p.push_back(s);
  }
  return p;
}

IVec w_map(int n, int m, const Partition& p) {
  if (!in_box(p, n, m)) throw std::invalid_argument("w_map: partition outside the n x m box");
  auto part = [&](int i) { return i < static_cast<int>(p.size()) ? p[i] : 0; };
  IVec a(n);
  a[0] = m - part(0) + part(n - 1);
  for (int i = 1; i < n; ++i) a[i] = part(i - 1) - part(i);
  return a;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int col = 1; col <= p[0]; ++col) {
    int h = 0;
    for (int v : p)
      if (v >= col) ++h;
    t.push_back(h);
  }
  return t;
}

int degree(int n, int m, const IVec& a) {
  if (!in_C(a, n, m)) throw std::invalid_argument("degree: tuple not in C_{n,m}");
  int s = 0;
  for (int i = 0; i < n; ++i) s += i * a[i];
  return ((s % n) + n) % n;
}

IVec tau(int n, int m, const IVec& a) {
  if (degree(n, m, a) != 0)
    throw std::invalid_argument("tau: tuple not of degree 0");
  Partition d = d_map(n, m, a);
  int size = partition_weight(d);
  Partition dt = transpose(d);
  IVec b = w_map(m, n, dt);
  // rho_m^{-size/n}: left rotation by (size/n) mod m
  int shift = (size / n) % m;
  std::rotate(b.begin(), b.begin() + shift, b.end());
  return b;
}

std::vector<IVec> enumerate_C0(int n, int m) {
  std::vector<IVec> out;
  IVec a(n, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      a[pos] = rest;
      if (degree(n, m, a) == 0) out.push_back(a);
      a[pos] = 0;
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      a[pos] = v;
      self(self, pos + 1, rest - v);
    }
    a[pos] = 0;
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(), std::greater<IVec>());
  return out;
}

std::vector<LevelRankPair> levelrank_pairs(int n, int m) {
  if (n < 2 || m < 2) throw std::invalid_argument("levelrank_pairs: need n, m >= 2");
  std::vector<LevelRankPair> out;
  for (const auto& a : enumerate_C0(n, m)) out.push_back({a, tau(n, m, a)});
  return out;
}

}  // namespace vok
