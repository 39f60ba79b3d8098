#include "rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <mutex>
#include <set>
#include <stdexcept>

namespace vok {

std::optional<AlgebraId> parse_algebra(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  char series = static_cast<char>(std::toupper(s[0]));
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  int rank = std::stoi(s.substr(1));
  bool ok = false;
  switch (series) {
    case 'A': ok = rank >= 1 && rank <= 9; break;
    case 'B': ok = rank >= 2 && rank <= 9; break;
    case 'C': ok = rank >= 2 && rank <= 9; break;
    case 'D': ok = rank >= 3 && rank <= 9; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) return std::nullopt;
  return AlgebraId{series, rank};
}

namespace {

// Bourbaki numbering for every series.  Edges are encoded as (i,j) bonds of
// the Dynkin diagram; norms pin the short/long split.
struct Presentation {
  IMat cartan;
  RVec norms;
};

Presentation presentation(const AlgebraId& id) {
  int n = id.rank;
  IMat A(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  RVec norms(n, Rat(2));
  auto chain = [&](int i, int j) { A[i][j] = -1; A[j][i] = -1; };
  switch (id.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':
      // a_n short
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      norms[n - 1] = Rat(1);
      A[n - 2][n - 1] = -2;  // 2(a_{n-1}, a_n)/(a_n, a_n) = -2
      A[n - 1][n - 2] = -1;
      break;
    case 'C':
      // a_n long, the rest short
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      for (int i = 0; i + 1 < n; ++i) norms[i] = Rat(1);
      A[n - 2][n - 1] = -1;
      A[n - 1][n - 2] = -2;
      // short-short bonds: 2(a_i,a_j)/(a_j,a_j) = -1 with (a_i,a_i)=1
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
      chain(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case 'F':
      // a1,a2 long; a3,a4 short; double bond between 2 and 3
      chain(0, 1);
      chain(2, 3);
      norms[2] = norms[3] = Rat(1);
      A[1][2] = -2;
      A[2][1] = -1;
      break;
    case 'G':
      // a1 short (norm 2/3), a2 long (norm 2)
      norms[0] = Rat(2, 3);
      A[0][1] = -1;
      A[1][0] = -3;
      break;
    default:
      throw std::invalid_argument("unsupported series");
  }
  // For C series the short-short bonds: 2(a_i,a_j)/(a_j,a_j) with both norm 1
  // and (a_i,a_j) = -1/2 gives -1, which the chain() calls already wrote.
  return {A, norms};
}

Int weyl_order_of(const AlgebraId& id) {
  auto fact = [](int n) { Int f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
  int n = id.rank;
  switch (id.series) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return fact(n) * boost::multiprecision::pow(Int(2), n);
    case 'D': return fact(n) * boost::multiprecision::pow(Int(2), n - 1);
    case 'E':
      if (n == 6) return Int(51840);
      if (n == 7) return Int(2903040);
      return Int(696729600);
    case 'F': return Int(1152);
    case 'G': return Int(12);
  }
  return Int(0);
}

RootDatum build(const AlgebraId& id) {
  RootDatum rd;
  rd.id = id;
  auto pres = presentation(id);
  rd.cartan = pres.cartan;
  rd.simple_root_norms = pres.norms;
  int n = id.rank;

  // positive roots: closure from the simple roots through root strings
  std::set<IVec> roots;
  std::vector<IVec> frontier;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  auto pairing_with_coroot = [&](const IVec& coeffs, int i) {
    // <beta, a_i^vee> = (c^T A)_i
    int v = 0;
    for (int j = 0; j < n; ++j) v += coeffs[j] * rd.cartan[j][i];
    return v;
  };
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int p = 0;  // max k with beta - k a_i a root
        IVec down = beta;
        while (true) {
          down[i] -= 1;
          bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
          bool zero = std::all_of(down.begin(), down.end(), [](int c) { return c == 0; });
          if (zero || (nonneg && roots.count(down))) { ++p; continue; }
          break;
        }
        int q = p - pairing_with_coroot(beta, i);
        if (q > 0) {
          IVec up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  rd.positive_roots.assign(roots.begin(), roots.end());
  rd.dimension = n + 2 * static_cast<int>(rd.positive_roots.size());

  // theta: the positive root of maximal height
  int best_h = -1;
  for (const auto& r : rd.positive_roots) {
    int h = 0;
    for (int c : r) h += c;
    if (h > best_h) { best_h = h; rd.theta_coeffs = r; }
  }
  rd.comarks.resize(n);
  int hv = 1;
  for (int i = 0; i < n; ++i) {
    Rat cm = Rat(rd.theta_coeffs[i]) * rd.simple_root_norms[i] / 2;
    if (!is_integer(cm)) throw std::logic_error("comark not integral");
    rd.comarks[i] = static_cast<int>(numerator(cm));
    hv += rd.comarks[i];
  }
  rd.dual_coxeter = hv;

  rd.rho.assign(n, 1);

  // weight gram: G = A^{-1} D
  RMat a(n, RVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(rd.cartan[i][j]);
  RMat ainv = rat_mat_inverse(a);
  rd.weight_gram.assign(n, RVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rd.weight_gram[i][j] = ainv[i][j] * rd.simple_root_norms[j] / 2;

  rd.weyl_order = weyl_order_of(id);

  if (rd.root_norm(rd.theta_coeffs) != 2)
    throw std::logic_error("highest root norm != 2");
  return rd;
}

}  // namespace

RMat rat_mat_inverse(const RMat& m) {
  size_t n = m.size();
  RMat a = m, inv(n, RVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rat RootDatum::inner(const IVec& x, const IVec& y) const {
  int n = rank();
  Rat s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (y[j] != 0) s += Rat(x[i]) * weight_gram[i][j] * Rat(y[j]);
  }
  return s;
}

IVec RootDatum::root_labels(const IVec& c) const {
  int n = rank();
  IVec out(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[j] += c[i] * cartan[i][j];
  return out;
}

Rat RootDatum::root_norm(const IVec& c) const {
  return inner(root_labels(c), root_labels(c));
}

Int RootDatum::theta_pairing(const IVec& labels) const {
  Int s = 0;
  for (int i = 0; i < rank(); ++i) s += Int(labels[i]) * comarks[i];
  return s;
}

IVec RootDatum::reflect(const IVec& labels, int i) const {
  IVec out = labels;
  int wi = labels[i];
  if (wi == 0) return out;
  for (int j = 0; j < rank(); ++j) out[j] -= wi * cartan[i][j];
  return out;
}

IVec RootDatum::dominant_rep(IVec labels) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank(); ++i) {
      if (labels[i] < 0) {
        labels = reflect(labels, i);
        moved = true;
      }
    }
  }
  return labels;
}

std::vector<IVec> RootDatum::weyl_orbit(const IVec& labels) const {
  IVec start = dominant_rep(labels);
  std::set<IVec> seen{start};
  std::vector<IVec> frontier{start};
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rank(); ++i) {
        IVec r = reflect(w, i);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

IVec RootDatum::dual_weight(const IVec& labels) const {
  IVec neg(labels);
  for (int& v : neg) v = -v;
  return dominant_rep(neg);
}

std::vector<IVec> RootDatum::dominant_weights_below(const IVec& labels) const {
  // mu dominant with lambda - mu = c^T A for integer c >= 0.  The inverse
  // Cartan matrix has nonnegative entries, so for dominant mu the
  // coefficients are boxed by c_i <= (lambda A^{-1})_i.
  int n = rank();
  RMat a(n, RVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(cartan[i][j]);
  RMat ainv = rat_mat_inverse(a);
  IVec bound(n, 0);
  for (int i = 0; i < n; ++i) {
    Rat ci = 0;
    for (int j = 0; j < n; ++j) ci += Rat(labels[j]) * ainv[j][i];
    bound[i] = static_cast<int>(floor_int(ci));
  }
  std::vector<IVec> out;
  IVec c(n, 0);
  while (true) {
    IVec mu(n);
    bool dom = true;
    for (int j = 0; j < n; ++j) {
      int v = labels[j];
      for (int i = 0; i < n; ++i) v -= c[i] * cartan[i][j];
      mu[j] = v;
      if (v < 0) dom = false;
    }
    if (dom) out.push_back(mu);
    int pos = 0;
    while (pos < n && c[pos] == bound[pos]) { c[pos] = 0; ++pos; }
    if (pos == n) break;
    ++c[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat RootDatum::min_orbit_pairing(const IVec& h, const IVec& lambda) const {
  // linear functional attains its orbit minimum at w0(lambda) = -dual(lambda)
  IVec dual = dual_weight(dominant_rep(lambda));
  return -inner(h, dual);
}

Rat RootDatum::min_weight_system_pairing(const IVec& h, const IVec& lambda) const {
  Rat best;
  bool first = true;
  for (const auto& mu : dominant_weights_below(dominant_rep(lambda))) {
    Rat v = min_orbit_pairing(h, mu);
    if (first || v < best) { best = v; first = false; }
  }
  return first ? Rat(0) : best;
}

const RootDatum& root_datum(const AlgebraId& id) {
  static std::map<AlgebraId, RootDatum> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, build(id)).first;
  return it->second;
}

std::vector<WeylElement> enumerate_weyl_group(const RootDatum& rd, size_t cap) {
  if (rd.weyl_order > Int(static_cast<unsigned long>(cap)))
    throw std::invalid_argument("Weyl group too large to enumerate");
  int n = rd.rank();
  std::vector<IMat> gens(n, IMat(n, IVec(n, 0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) gens[i][k][k] = 1;
    // (S_i)_{kj} = delta_kj - delta_ki A_ij  (row-vector action)
    for (int j = 0; j < n; ++j) gens[i][i][j] -= rd.cartan[i][j];
  }
  auto mul = [&](const IMat& x, const IMat& y) {
    IMat z(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
      }
    return z;
  };
  IMat id(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::map<IMat, int> seen;
  seen.emplace(id, +1);
  std::vector<IMat> frontier{id};
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const auto& w : frontier) {
      int s = seen[w];
      for (int i = 0; i < n; ++i) {
        IMat ws = mul(w, gens[i]);
        if (seen.emplace(ws, -s).second) next.push_back(ws);
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  out.reserve(seen.size());
  for (auto& [m, s] : seen) out.push_back({m, s});
  return out;
}

}  // namespace vok
