#include "modular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vok {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

cd unit_phase(const Rat& turns) {
  // exp(2 pi i turns) with the rational reduced mod 1 first
  Rat f = mod1(turns);
  double ang = 2.0 * kPi * rat_double(f);
  return {std::cos(ang), std::sin(ang)};
}

// Type A determinant form.  With integer shifted coordinates
// phi_i = sum_{j>=i} lambda_j + (N - i), the matrix
//   e^{+2 pi i |phi||psi| / (N kappa)} det[ e^{-2 pi i phi_i psi_j / kappa} ]
// equals S up to one global constant (the phase comes from re-centering the
// coordinates to mean zero), fixed afterwards by unitarity and the positive
// vacuum row.
Eigen::MatrixXcd s_raw_type_a(const std::vector<AffineWeight>& labels, int n, int k) {
  int N = n + 1;
  int kappa = k + N;
  size_t L = labels.size();
  std::vector<std::vector<int>> phi(L, std::vector<int>(N));
  std::vector<int> phisum(L, 0);
  for (size_t a = 0; a < L; ++a) {
    const IVec& lam = labels[a].labels;
    for (int i = 0; i < N; ++i) {
      int s = N - 1 - i;
      for (int j = i; j < n; ++j) s += lam[j];
      phi[a][i] = s;
      phisum[a] += s;
    }
  }
  // powers of exp(-2 pi i / kappa)
  std::vector<cd> omega(kappa);
  for (int r = 0; r < kappa; ++r)
    omega[r] = unit_phase(Rat(-r, kappa));
  Eigen::MatrixXcd out(L, L);
  Eigen::MatrixXcd m(N, N);
  for (size_t a = 0; a < L; ++a) {
    for (size_t b = a; b < L; ++b) {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          m(i, j) = omega[(phi[a][i] * phi[b][j]) % kappa];
      cd det = m.determinant();
      cd corr = unit_phase(Rat(Int(phisum[a]) * phisum[b], Int(N) * kappa));
      out(a, b) = out(b, a) = corr * det;
    }
  }
  return out;
}

Eigen::MatrixXcd s_raw_weyl_sum(const RootDatum& rd, const std::vector<AffineWeight>& labels,
                                int k) {
  auto weyl = enumerate_weyl_group(rd);
  int n = rd.rank();
  int kappa = k + rd.dual_coxeter;
  size_t L = labels.size();
  // gram as doubles; exponents are (w(lam+rho) | mu+rho)/kappa
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = rat_double(rd.weight_gram[i][j]);
  std::vector<Eigen::VectorXd> shifted(L);
  for (size_t a = 0; a < L; ++a) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = labels[a].labels[i] + 1;
    shifted[a] = v;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(L, L);
  for (const auto& w : weyl) {
    Eigen::MatrixXd wm(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) wm(i, j) = w.mat[i][j];
    for (size_t a = 0; a < L; ++a) {
      Eigen::VectorXd wa = wm.transpose() * shifted[a];  // row-vector action
      Eigen::VectorXd gwa = G * wa;
      for (size_t b = 0; b < L; ++b) {
        double e = -2.0 * kPi * shifted[b].dot(gwa) / kappa;
        out(a, b) += double(w.sign) * cd{std::cos(e), std::sin(e)};
      }
    }
  }
  return out;
}

Eigen::MatrixXcd normalize_s(Eigen::MatrixXcd raw) {
  size_t L = raw.rows();
  Eigen::MatrixXcd gg = raw * raw.adjoint();
  double scale = 0;
  for (size_t i = 0; i < L; ++i) scale += gg(i, i).real();
  scale /= L;
  if (scale <= 0) throw std::logic_error("S normalization failed");
  raw /= std::sqrt(scale);
  cd v = raw(0, 0);
  double av = std::abs(v);
  if (av < 1e-12) throw std::logic_error("vacuum S entry vanishes");
  raw *= std::conj(v) / av;
  return raw;
}

}  // namespace

int ModularData::index_of_tuple(const IVec& tuple) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].tuple() == tuple) return static_cast<int>(i);
  return -1;
}

int ModularData::index_of_labels(const IVec& lam) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].labels == lam) return static_cast<int>(i);
  return -1;
}

double ModularData::qdim(int label) const {
  return (S(0, label) / S(0, 0)).real();
}

double ModularData::glob_sum() const {
  double s = 0;
  for (int a = 0; a < S.rows(); ++a) {
    double q = qdim(a);
    s += q * q;
  }
  return s;
}

double ModularData::glob_s00() const {
  double s00 = std::abs(S(0, 0));
  return 1.0 / (s00 * s00);
}

std::vector<int> ModularData::conjugation_permutation() const {
  std::vector<int> perm(labels.size());
  for (size_t a = 0; a < labels.size(); ++a) {
    AffineWeight conj = conjugate_module(labels[a]);
    int idx = index_of_labels(conj.labels);
    if (idx < 0) throw std::logic_error("conjugate label missing");
    perm[a] = idx;
  }
  return perm;
}

ModularData build_modular_data(const AlgebraId& g, int k) {
  const RootDatum& rd = root_datum(g);
  ModularData md;
  md.algebra = g;
  md.level = k;
  md.labels = enumerate_level_weights(g, k);
  md.c = central_charge(g, k);
  md.h.reserve(md.labels.size());
  for (const auto& w : md.labels) md.h.push_back(conformal_weight(g, k, w.labels));

  Eigen::MatrixXcd raw = (g.series == 'A') ? s_raw_type_a(md.labels, g.rank, k)
                                           : s_raw_weyl_sum(rd, md.labels, k);
  md.S = normalize_s(std::move(raw));

  md.T.resize(md.labels.size());
  Rat c24 = md.c / 24;
  for (size_t a = 0; a < md.labels.size(); ++a)
    md.T(a) = unit_phase(md.h[a] - c24);
  return md;
}

bool ModularChecks::pass(double tol) const {
  return unitarity_residual < tol && symmetry_residual < tol &&
         s2_vs_conjugation < tol && st_cubed_residual < tol &&
         vacuum_row_min_real > 0 && vacuum_row_max_imag < tol;
}

ModularChecks check_modular_data(const ModularData& md) {
  ModularChecks r{};
  size_t L = md.labels.size();
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(L, L);
  r.unitarity_residual = (md.S * md.S.adjoint() - I).cwiseAbs().maxCoeff();
  r.symmetry_residual = (md.S - md.S.transpose()).cwiseAbs().maxCoeff();

  Eigen::MatrixXcd S2 = md.S * md.S;
  auto perm = md.conjugation_permutation();
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(L, L);
  for (size_t a = 0; a < L; ++a) C(a, perm[a]) = 1.0;
  r.s2_vs_conjugation = (S2 - C).cwiseAbs().maxCoeff();

  Eigen::MatrixXcd ST = md.S * md.T.asDiagonal().toDenseMatrix();
  r.st_cubed_residual = (ST * ST * ST - S2).cwiseAbs().maxCoeff();

  r.vacuum_row_min_real = md.S.row(0).real().minCoeff();
  r.vacuum_row_max_imag = md.S.row(0).imag().cwiseAbs().maxCoeff();
  return r;
}

ExtensionCheck extension_check(const ModularData& small, const ModularData& big,
                               const std::vector<IVec>& branching_labels) {
  ExtensionCheck ec{};
  for (const auto& lam : branching_labels) {
    int idx = small.index_of_labels(lam);
    if (idx < 0) throw std::invalid_argument("branching label not in module list");
    ec.qdim_U += small.qdim(idx);
  }
  ec.glob_big = big.glob_sum();
  ec.glob_small = small.glob_sum();
  ec.predicted_big = ec.glob_small / (ec.qdim_U * ec.qdim_U);
  ec.residual = std::abs(ec.glob_big - ec.predicted_big);
  return ec;
}

}  // namespace vok
