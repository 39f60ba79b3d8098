#include "lattice.hpp"

#include "rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace vok {

long long EvenLattice::pairing(const LVec& x, const LVec& y) const {
  long long s = 0;
  int r = rank();
  for (int i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < r; ++j)
      if (y[j] != 0) s += x[i] * gram[i][j] * y[j];
  }
  return s;
}

EvenLattice build_An(int n) {
  if (n <= 0) throw std::invalid_argument("A_n needs n >= 1");
  EvenLattice L;
  L.name = "A" + std::to_string(n);
  L.gram.assign(n, LVec(n, 0));
  for (int i = 0; i < n; ++i) {
    L.gram[i][i] = 2;
    if (i + 1 < n) {
      L.gram[i][i + 1] = -1;
      L.gram[i + 1][i] = -1;
    }
  }
  return L;
}

EvenLattice direct_sum(const EvenLattice& a, const EvenLattice& b) {
  EvenLattice L;
  L.name = a.name + "+" + b.name;
  int r = a.rank() + b.rank();
  L.gram.assign(r, LVec(r, 0));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) L.gram[i][j] = a.gram[i][j];
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) L.gram[a.rank() + i][a.rank() + j] = b.gram[i][j];
  return L;
}

std::optional<EvenLattice> parse_lattice(const std::string& spec) {
  std::optional<EvenLattice> acc;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t plus = spec.find('+', pos);
    std::string part = spec.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (part.size() < 2 || (part[0] != 'A' && part[0] != 'a')) return std::nullopt;
    for (size_t i = 1; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return std::nullopt;
    int n = std::stoi(part.substr(1));
    if (n < 1 || n > 10) return std::nullopt;
    EvenLattice piece = build_An(n);
    acc = acc ? direct_sum(*acc, piece) : piece;
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return acc;
}

namespace {

// Cholesky of the Gram matrix for branch-and-bound enumeration; the bounds
// are floating point with a margin, membership is re-checked exactly.
std::vector<std::vector<double>> cholesky(const LMat& gram) {
  int n = static_cast<int>(gram.size());
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = double(gram[i][j]);
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0) throw std::invalid_argument("gram not positive definite");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  return l;
}

}  // namespace

std::vector<LVec> vectors_up_to_norm(const EvenLattice& L, long long bound) {
  int n = L.rank();
  auto chol = cholesky(L.gram);
  // Q(x) = sum_i ( l_ii x_i + sum_{j>i} ... ); use the R = L^T factor:
  // x^T G x = |R x|^2 with R upper triangular, R = chol^T.
  std::vector<std::vector<double>> R(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) R[j][i] = chol[i][j];
  std::vector<LVec> out;
  LVec x(n, 0);
  std::vector<double> partial(n + 1, 0.0);  // squared norm of processed tail
  const double margin = 1e-6;
  double b = double(bound) + margin;
  auto rec = [&](auto&& self, int i) -> void {
    if (i < 0) {
      bool zero = std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
      if (!zero && L.norm(x) <= bound) out.push_back(x);
      return;
    }
    // center contribution from already-fixed coordinates j > i
    double shift = 0;
    for (int j = i + 1; j < n; ++j) shift += R[i][j] * double(x[j]);
    double rad2 = b - partial[i + 1];
    if (rad2 < 0) return;
    double rad = std::sqrt(rad2);
    long long lo = static_cast<long long>(std::ceil((-rad - shift) / R[i][i] - 1e-9));
    long long hi = static_cast<long long>(std::floor((rad - shift) / R[i][i] + 1e-9));
    for (long long v = lo; v <= hi; ++v) {
      x[i] = v;
      double term = R[i][i] * double(v) + shift;
      partial[i] = partial[i + 1] + term * term;
      if (partial[i] <= b) self(self, i - 1);
    }
    x[i] = 0;
  };
  rec(rec, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<long long, int>> CosetTable::norm_distribution() const {
  std::map<long long, int> dist;
  for (const auto& c : classes) dist[c.min_norm]++;
  return {dist.begin(), dist.end()};
}

CosetTable cosets_mod2(const EvenLattice& L, long long bound) {
  if (L.rank() > 10) throw std::invalid_argument("coset enumeration limited to rank <= 10");
  CosetTable t;
  t.lattice = L;
  t.bound = bound;
  size_t n_classes = 1u << L.rank();
  t.classes.assign(n_classes, CosetClass{});
  std::vector<bool> seen(n_classes, false);
  auto key_of = [&](const LVec& x) {
    uint32_t k = 0;
    for (int i = 0; i < L.rank(); ++i)
      if (x[i] & 1) k |= (1u << i);
    return k;
  };
  // zero coset
  t.classes[0] = CosetClass{0, LVec(L.rank(), 0), 0, 1};
  seen[0] = true;
  for (const auto& v : vectors_up_to_norm(L, bound)) {
    long long nm = L.norm(v);
    uint32_t k = key_of(v);
    if (k == 0 && nm > 0) continue;  // nonzero vectors of 2L never beat 0
    auto& c = t.classes[k];
    if (!seen[k] || nm < c.min_norm) {
      c = CosetClass{k, v, nm, 1};
      seen[k] = true;
    } else if (nm == c.min_norm) {
      c.min_vector_count++;
      if (v < c.representative) c.representative = v;
    }
  }
  t.complete = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  for (uint32_t k = 0; k < n_classes; ++k) t.classes[k].key = k;
  return t;
}

int F2Quadratic::q(uint32_t key) const {
  LVec x(dim, 0);
  for (int i = 0; i < dim; ++i) x[i] = (key >> i) & 1u;
  long long nm = L->norm(x);
  return static_cast<int>((nm / 2) % 2);
}

int F2Quadratic::b(uint32_t k1, uint32_t k2) const {
  LVec x(dim, 0), y(dim, 0);
  for (int i = 0; i < dim; ++i) {
    x[i] = (k1 >> i) & 1u;
    y[i] = (k2 >> i) & 1u;
  }
  return static_cast<int>(((L->pairing(x, y)) % 2 + 2) % 2);
}

F2Quadratic f2_quadratic(const EvenLattice& L) { return F2Quadratic{&L, L.rank()}; }

namespace {

bool extends_singular(const F2Quadratic& q, const F2Basis& basis, uint32_t v) {
  if (q.q(v) != 0) return false;
  for (const auto& bvec : basis.basis())
    if (q.b(v, bvec.bits) != 0) return false;
  return !basis.contains(F2Vec{v, basis.length()});
}

}  // namespace

TotallySingularPair max_totally_singular(const EvenLattice& L) {
  F2Quadratic q = f2_quadratic(L);
  int d = L.rank();
  if (d > 16) throw std::invalid_argument("quadratic space too large");
  TotallySingularPair out{F2Basis(d), F2Basis(d)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (uint32_t v = 1; v < (1u << d); ++v)
      if (extends_singular(q, out.X, v)) {
        out.X.add(F2Vec{v, d});
        grew = true;
        break;
      }
  }
  // complementary singular subspace of the same dimension, direct to X
  int target = out.X.dimension();
  F2Basis y(d);
  auto all_x = out.X.span();
  auto rec = [&](auto&& self, uint32_t start) -> bool {
    if (y.dimension() == target) {
      // direct sum: X cap Y = 0 and dim X + dim Y = full span
      F2Basis joint(d);
      for (const auto& bx : out.X.basis()) joint.add(bx);
      for (const auto& by : y.basis()) joint.add(by);
      if (joint.dimension() == out.X.dimension() + y.dimension()) return true;
      return false;
    }
    for (uint32_t v = start; v < (1u << d); ++v) {
      if (!extends_singular(q, y, v)) continue;
      F2Basis saved = y;
      y.add(F2Vec{v, d});
      // keep Y independent from X as we go
      F2Basis joint(d);
      for (const auto& bx : out.X.basis()) joint.add(bx);
      for (const auto& by : y.basis()) joint.add(by);
      if (joint.dimension() == out.X.dimension() + y.dimension() && self(self, v + 1))
        return true;
      y = saved;
    }
    return false;
  };
  out.have_Y = rec(rec, 1);
  if (out.have_Y) out.Y = y;
  return out;
}

namespace {

using IntMat = std::vector<std::vector<Int>>;

// Kernel of an integer matrix as a saturated sublattice of Z^n: column
// reduction with a unimodular transform, kernel basis = columns of U over
// the zeroed columns.
std::vector<std::vector<Int>> integer_kernel(IntMat a) {
  size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  IntMat u(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto col_swap = [&](size_t c1, size_t c2) {
    for (size_t r = 0; r < m; ++r) std::swap(a[r][c1], a[r][c2]);
    for (size_t r = 0; r < n; ++r) std::swap(u[r][c1], u[r][c2]);
  };
  auto col_axpy = [&](size_t dst, size_t src, const Int& f) {
    for (size_t r = 0; r < m; ++r) a[r][dst] -= f * a[r][src];
    for (size_t r = 0; r < n; ++r) u[r][dst] -= f * u[r][src];
  };
  size_t row = 0, col = 0;
  while (row < m && col < n) {
    // gcd-reduce the row segment [col..n)
    while (true) {
      size_t piv = n;
      for (size_t c = col; c < n; ++c)
        if (a[row][c] != 0 && (piv == n || boost::multiprecision::abs(a[row][c]) <
                                               boost::multiprecision::abs(a[row][piv])))
          piv = c;
      if (piv == n) break;  // row all zero from col on
      col_swap(col, piv);
      bool clean = true;
      for (size_t c = col + 1; c < n; ++c) {
        if (a[row][c] == 0) continue;
        Int f = a[row][c] / a[row][col];
        col_axpy(c, col, f);
        if (a[row][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] != 0) ++col;
    ++row;
  }
  std::vector<std::vector<Int>> kernel;
  for (size_t c = 0; c < n; ++c) {
    bool zero = true;
    for (size_t r = 0; r < m; ++r)
      if (a[r][c] != 0) { zero = false; break; }
    if (!zero) continue;
    std::vector<Int> v(n);
    for (size_t r = 0; r < n; ++r) v[r] = u[r][c];
    kernel.push_back(v);
  }
  return kernel;
}

LVec to_lvec(const std::vector<Int>& v) {
  LVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long long>(v[i]);
  return out;
}

// Row-style Hermite normal form (upper staircase, positive pivots, entries
// above a pivot reduced); returns the basis rows of the span.
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows, size_t n) {
  std::vector<std::vector<Int>> basis;
  size_t col = 0;
  while (col < n && !rows.empty()) {
    // pick row with the smallest nonzero |entry| at col
    size_t piv = rows.size();
    for (size_t r = 0; r < rows.size(); ++r)
      if (rows[r][col] != 0 && (piv == rows.size() ||
                                boost::multiprecision::abs(rows[r][col]) <
                                    boost::multiprecision::abs(rows[piv][col])))
        piv = r;
    if (piv == rows.size()) { ++col; continue; }
    std::swap(rows[piv], rows.back());
    std::vector<Int> p = rows.back();
    rows.pop_back();
    bool again = false;
    for (auto& r : rows) {
      if (r[col] == 0) continue;
      Int f = r[col] / p[col];
      for (size_t j = 0; j < n; ++j) r[j] -= f * p[j];
      if (r[col] != 0) again = true;
    }
    rows.push_back(p);
    if (again) continue;
    // p is the unique row with nonzero col entry
    rows.pop_back();
    if (p[col] < 0)
      for (auto& v : p) v = -v;
    basis.push_back(p);
    ++col;
  }
  // reduce entries above pivots
  for (size_t i = basis.size(); i-- > 0;) {
    size_t pc = 0;
    while (basis[i][pc] == 0) ++pc;
    for (size_t r = 0; r < i; ++r) {
      Int f = basis[r][pc] / basis[i][pc];
      if (basis[r][pc] < 0 && basis[r][pc] % basis[i][pc] != 0) f -= 1;
      for (size_t j = 0; j < n; ++j) basis[r][j] -= f * basis[i][j];
    }
  }
  return basis;
}

}  // namespace

LMat swap_isometry(int block_rank) {
  int r = 2 * block_rank;
  LMat s(r, LVec(r, 0));
  for (int i = 0; i < block_rank; ++i) {
    s[i][block_rank + i] = 1;
    s[block_rank + i][i] = 1;
  }
  return s;
}

LMat identity_isometry(int rank) {
  LMat s(rank, LVec(rank, 0));
  for (int i = 0; i < rank; ++i) s[i][i] = 1;
  return s;
}

LMat negation_isometry(int rank) {
  LMat s(rank, LVec(rank, 0));
  for (int i = 0; i < rank; ++i) s[i][i] = -1;
  return s;
}

EigenlatticeData eigenlattice_data(const EvenLattice& L, const LMat& sigma) {
  int r = L.rank();
  // isometry and involution checks
  LMat sq(r, LVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) sq[i][j] += sigma[i][k] * sigma[k][j];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (sq[i][j] != (i == j ? 1 : 0))
        throw std::invalid_argument("sigma is not an involution");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      LVec ei(r, 0), ej(r, 0);
      for (int k = 0; k < r; ++k) {
        ei[k] = sigma[k][i];
        ej[k] = sigma[k][j];
      }
      if (L.pairing(ei, ej) != L.gram[i][j])
        throw std::invalid_argument("sigma does not preserve the form");
    }

  EigenlatticeData out;
  IntMat one_minus(r, std::vector<Int>(r)), one_plus(r, std::vector<Int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      one_minus[i][j] = Int((i == j ? 1 : 0) - sigma[i][j]);
      one_plus[i][j] = Int((i == j ? 1 : 0) + sigma[i][j]);
    }
  for (const auto& v : integer_kernel(one_minus)) out.h0_basis.push_back(to_lvec(v));
  for (const auto& v : integer_kernel(one_plus)) out.n_basis.push_back(to_lvec(v));
  out.rank_n = static_cast<int>(out.n_basis.size());
  for (int j = 0; j < r; ++j) {
    LVec g(r, 0);
    for (int i = 0; i < r; ++i) g[i] = (i == j ? 1 : 0) - sigma[i][j];
    bool nonzero = std::any_of(g.begin(), g.end(), [](long long v) { return v != 0; });
    if (nonzero) out.m_generators.push_back(g);
  }
  // M <= N: every generator is killed by (1 + sigma)
  out.m_inside_n = true;
  for (const auto& g : out.m_generators) {
    for (int i = 0; i < r; ++i) {
      long long s = g[i];
      for (int j = 0; j < r; ++j) s += sigma[i][j] * g[j];
      if (s != 0) out.m_inside_n = false;
    }
  }
  return out;
}

std::vector<TwistedWeightClass> twisted_weight_classes(const EvenLattice& L,
                                                       const LMat& sigma) {
  EigenlatticeData eig = eigenlattice_data(L, sigma);
  int r = L.rank();
  int r0 = static_cast<int>(eig.h0_basis.size());
  Rat rank_term = Rat(eig.rank_n, 16);
  if (r0 == 0) {
    // P0 = 0: single class, n_lambda = 0
    return {TwistedWeightClass{RVec(r, Rat(0)), Rat(0), rank_term}};
  }

  // P0 = (1 + sigma)/2 in basis coordinates
  RMat p0(r, RVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) p0[i][j] = Rat((i == j ? 1 : 0) + sigma[i][j], 2);

  // Gram inverse gives the dual basis coordinates
  RMat g(r, RVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = Rat(L.gram[i][j]);
  RMat ginv = rat_mat_inverse(g);

  // H0 frame: columns are the fixed-lattice basis
  // express v in the frame: solve H0 u = v (consistent for v in im P0)
  auto h0_solve = [&](const RVec& v) {
    // build augmented system over the r x r0 matrix
    RMat m(r, RVec(r0 + 1));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r0; ++j) m[i][j] = Rat(eig.h0_basis[j][i]);
      m[i][r0] = v[i];
    }
    // gaussian elimination
    int row = 0;
    std::vector<int> pivot_col(r0, -1);
    for (int c = 0; c < r0 && row < r; ++c) {
      int piv = -1;
      for (int rr = row; rr < r; ++rr)
        if (m[rr][c] != 0) { piv = rr; break; }
      if (piv < 0) continue;
      std::swap(m[piv], m[row]);
      Rat d = m[row][c];
      for (int j = 0; j <= r0; ++j) m[row][j] /= d;
      for (int rr = 0; rr < r; ++rr) {
        if (rr == row || m[rr][c] == 0) continue;
        Rat f = m[rr][c];
        for (int j = 0; j <= r0; ++j) m[rr][j] -= f * m[row][j];
      }
      pivot_col[c] = row;
      ++row;
    }
    RVec u(r0, Rat(0));
    for (int c = 0; c < r0; ++c)
      if (pivot_col[c] >= 0) u[c] = m[pivot_col[c]][r0];
    // consistency check
    for (int i = 0; i < r; ++i) {
      Rat s = 0;
      for (int j = 0; j < r0; ++j) s += Rat(eig.h0_basis[j][i]) * u[j];
      if (s != v[i]) throw std::logic_error("vector not in the fixed subspace");
    }
    return u;
  };

  auto project = [&](const RVec& v) {
    RVec out(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (v[j] != 0) out[i] += p0[i][j] * v[j];
    return out;
  };

  // generators of P0(L) and P0(L*) in the H0 frame
  std::vector<RVec> gens_a, gens_b;
  for (int i = 0; i < r; ++i) {
    RVec e(r, Rat(0));
    e[i] = 1;
    gens_a.push_back(h0_solve(project(e)));
    RVec d(r);
    for (int k = 0; k < r; ++k) d[k] = ginv[k][i];
    gens_b.push_back(h0_solve(project(d)));
  }
  // common denominator
  Int s = 1;
  for (const auto& vset : {gens_a, gens_b})
    for (const auto& v : vset)
      for (const auto& q : v) s = boost::multiprecision::lcm(s, denominator(q));
  auto scale_rows = [&](const std::vector<RVec>& vv) {
    std::vector<std::vector<Int>> rows;
    for (const auto& v : vv) {
      std::vector<Int> row(r0);
      bool nonzero = false;
      for (int j = 0; j < r0; ++j) {
        Rat q = v[j] * Rat(s);
        row[j] = numerator(q);
        if (row[j] != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(row);
    }
    return rows;
  };
  auto mb = hnf_rows(scale_rows(gens_b), r0);
  auto ma = hnf_rows(scale_rows(gens_a), r0);
  if (static_cast<int>(mb.size()) != r0 || static_cast<int>(ma.size()) != r0)
    throw std::logic_error("projected lattices do not have full rank");

  // C with MA = C . MB  (solve row by row; must be integral)
  RMat mbq(r0, RVec(r0));
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < r0; ++j) mbq[i][j] = Rat(mb[i][j]);
  RMat mbinv = rat_mat_inverse(mbq);
  std::vector<std::vector<Int>> c(r0, std::vector<Int>(r0));
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < r0; ++j) {
      Rat v = 0;
      for (int k = 0; k < r0; ++k) v += Rat(ma[i][k]) * mbinv[k][j];
      if (!is_integer(v)) throw std::logic_error("P0(L) not inside P0(L*)");
      c[i][j] = numerator(v);
    }
  auto h = hnf_rows(c, r0);
  if (static_cast<int>(h.size()) != r0) throw std::logic_error("quotient not finite");

  // coset transversal: 0 <= t_i < H_ii over pivot columns (H upper staircase)
  std::vector<Int> diag(r0);
  for (int i = 0; i < r0; ++i) diag[i] = h[i][i];

  // quadratic form on the H0 frame
  std::vector<std::vector<Int>> qf(r0, std::vector<Int>(r0, 0));
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < r0; ++j) {
      LVec vi(r), vj(r);
      for (int k = 0; k < r; ++k) {
        vi[k] = eig.h0_basis[i][k];
        vj[k] = eig.h0_basis[j][k];
      }
      qf[i][j] = Int(L.pairing(vi, vj));
    }

  // exact Q-norm of a rational vector in the frame
  auto qnorm = [&](const RVec& v) {
    Rat t = 0;
    for (int i = 0; i < r0; ++i) {
      if (v[i] == 0) continue;
      for (int j = 0; j < r0; ++j)
        if (v[j] != 0) t += v[i] * Rat(qf[i][j]) * v[j];
    }
    return t;
  };

  // minimal norm over lambda + (lattice spanned by ma/s)
  auto coset_min = [&](const RVec& lambda) {
    // enumerate z in Z^{r0}; search radius = |lambda| to start, expand none
    // (0 is always a candidate); basis rows ba = ma/s
    std::vector<RVec> ba(r0, RVec(r0));
    for (int i = 0; i < r0; ++i)
      for (int j = 0; j < r0; ++j) ba[i][j] = Rat(ma[i][j], s);
    Rat best = qnorm(lambda);
    // crude box search: coefficients bounded via the shortest diagonal of
    // the basis gram; ranks here are tiny so a fixed box suffices, then
    // verified by doubling until stable
    int box = 3;
    while (true) {
      Rat improved = best;
      std::vector<int> z(r0, -box);
      while (true) {
        RVec v = lambda;
        for (int i = 0; i < r0; ++i)
          if (z[i] != 0)
            for (int j = 0; j < r0; ++j) v[j] += Rat(z[i]) * ba[i][j];
        Rat q = qnorm(v);
        if (q < improved) improved = q;
        int pos = 0;
        while (pos < r0 && z[pos] == box) { z[pos] = -box; ++pos; }
        if (pos == r0) break;
        ++z[pos];
      }
      if (improved == best) break;
      best = improved;
      box *= 2;
    }
    return best;
  };

  std::vector<TwistedWeightClass> out;
  std::vector<Int> t(r0, 0);
  while (true) {
    // lambda in the H0 frame: (t . MB) / s
    RVec lambda(r0, Rat(0));
    for (int i = 0; i < r0; ++i)
      if (t[i] != 0)
        for (int j = 0; j < r0; ++j) lambda[j] += Rat(t[i] * mb[i][j], s);
    TwistedWeightClass cls;
    cls.n_lambda = coset_min(lambda);
    cls.weight = rank_term + cls.n_lambda / 2;
    cls.coset_rep.assign(r, Rat(0));
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r0; ++j) cls.coset_rep[k] += Rat(eig.h0_basis[j][k]) * lambda[j];
    out.push_back(cls);
    int pos = 0;
    while (pos < r0 && t[pos] == diag[pos] - 1) { t[pos] = 0; ++pos; }
    if (pos == r0) break;
    ++t[pos];
  }
  std::sort(out.begin(), out.end(), [](const TwistedWeightClass& x, const TwistedWeightClass& y) {
    return x.n_lambda != y.n_lambda ? x.n_lambda < y.n_lambda : x.coset_rep < y.coset_rep;
  });
  return out;
}

PhiPsiReport build_phi_psi(const F2Basis& X, const F2Basis& Y) {
  EvenLattice a8 = build_An(8);
  EvenLattice l = direct_sum(direct_sum(a8, a8), a8);
  F2Quadratic q = f2_quadratic(l);
  const int d = 24;
  if (X.length() != 8 || Y.length() != 8)
    throw std::invalid_argument("need subspaces of A8/2A8");

  auto mu = [&](int slot_a, int slot_b, int i) {
    // e_i in slot a minus e_i in slot b, mod 2
    return static_cast<uint32_t>((1u << (8 * slot_a + i)) | (1u << (8 * slot_b + i)));
  };
  auto eta = [&](uint32_t x8) {
    uint32_t v = 0;
    for (int i = 0; i < 8; ++i)
      if ((x8 >> i) & 1u) v |= (1u << i) | (1u << (8 + i)) | (1u << (16 + i));
    return v;
  };

  F2Basis phi(d), psi(d);
  for (int i = 0; i < 8; ++i) phi.add(F2Vec{mu(0, 1, i), d});
  for (const auto& bx : X.basis()) phi.add(F2Vec{eta(bx.bits), d});
  for (int i = 0; i < 8; ++i) psi.add(F2Vec{mu(1, 2, i), d});
  for (const auto& by : Y.basis()) psi.add(F2Vec{eta(by.bits), d});

  auto all_singular = [&](const F2Basis& bas) {
    for (const auto& v : bas.span())
      if (q.q(v.bits) != 0) return false;
    return true;
  };

  PhiPsiReport rep;
  rep.phi_dim = phi.dimension();
  rep.psi_dim = psi.dimension();
  rep.phi_singular = all_singular(phi);
  rep.psi_singular = all_singular(psi);
  F2Basis joint(d);
  for (const auto& v : phi.basis()) joint.add(v);
  for (const auto& v : psi.basis()) joint.add(v);
  rep.spans = joint.dimension() == d;

  rep.mu_perp_eta = true;
  for (int i = 0; i < 8 && rep.mu_perp_eta; ++i)
    for (int j = 0; j < 8; ++j) {
      LVec mu12(d, 0), mu23(d, 0), et(d, 0);
      mu12[i] = 1;
      mu12[8 + i] = -1;
      mu23[8 + i] = 1;
      mu23[16 + i] = -1;
      et[j] = et[8 + j] = et[16 + j] = 1;
      if (l.pairing(mu12, et) != 0 || l.pairing(mu23, et) != 0) {
        rep.mu_perp_eta = false;
        break;
      }
    }
  return rep;
}

}  // namespace vok
