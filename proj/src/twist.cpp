#include "twist.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace vok {

namespace {

// prefix sums convert an ambient sum-zero vector of Z^9 to A8 basis coords
LVec ambient_to_basis(const std::vector<int>& v9) {
  LVec out(8, 0);
  long long acc = 0;
  for (int i = 0; i < 8; ++i) {
    acc += v9[i];
    out[i] = acc;
  }
  return out;
}

}  // namespace

TwistSpace::TwistSpace() : a8_(build_An(8)), x_(8), y_(8) {
  cosets_ = cosets_mod2(a8_, 10);
  if (!cosets_.complete) throw std::logic_error("A8/2A8 enumeration incomplete");
  roots_ = vectors_up_to_norm(a8_, 2);
  if (roots_.size() != 72) throw std::logic_error("A8 root count != 72");

  auto parity = [&](const LVec& a, const LVec& b) {
    return static_cast<int>(((a8_.pairing(a, b)) % 2 + 2) % 2);
  };

  m_.assign(kClasses, {});
  for (int idx = 0; idx < kClasses; ++idx) {
    const LVec& rep = cosets_.by_key(static_cast<uint32_t>(idx)).representative;
    long long diag = 0;
    for (const auto& alpha : roots_) {
      if (parity(alpha, rep) == 0) {
        diag += 1;
      } else {
        diag -= 1;
        LVec sum(8);
        for (int i = 0; i < 8; ++i) sum[i] = alpha[i] + rep[i];
        int target = class_of_vector(sum);
        m_[target][idx] += 2;
      }
    }
    m_[idx][idx] += diag;
  }

  auto pair_ts = max_totally_singular(a8_);
  if (!pair_ts.have_Y) throw std::logic_error("no complementary singular subspace");
  x_ = pair_ts.X;
  y_ = pair_ts.Y;
}

int TwistSpace::class_of_vector(const LVec& v) const {
  uint32_t k = 0;
  for (int i = 0; i < 8; ++i)
    if (v[i] & 1) k |= (1u << i);
  return static_cast<int>(k);
}

std::pair<int, int> TwistSpace::root_parity_counts(uint32_t key) const {
  const LVec& rep = cosets_.by_key(key).representative;
  int even = 0, odd = 0;
  for (const auto& alpha : roots_) {
    long long p = a8_.pairing(alpha, rep);
    if (((p % 2) + 2) % 2 == 0)
      ++even;
    else
      ++odd;
  }
  return {even, odd};
}

int TwistSpace::NamedVector::support_size() const {
  int n = 0;
  for (long long v : coeff)
    if (v != 0) ++n;
  return n;
}

std::vector<uint32_t> TwistSpace::classes_of_norm(long long norm) const {
  std::vector<uint32_t> out;
  for (const auto& c : cosets_.classes)
    if (c.min_norm == norm) out.push_back(c.key);
  return out;
}

std::vector<TwistSpace::NamedVector> TwistSpace::paper_vectors() const {
  std::vector<NamedVector> out;
  auto parity_with = [&](uint32_t key, const LVec& mu) {
    return static_cast<int>(((a8_.pairing(cosets_.by_key(key).representative, mu)) % 2 + 2) % 2);
  };

  // v0 = t_0
  NamedVector v0{"v0", {}};
  v0.coeff[0] = 1;
  out.push_back(v0);

  LVec mu2 = ambient_to_basis({1, -1, 0, 0, 0, 0, 0, 0, 0});
  LVec mu4 = ambient_to_basis({1, 1, -1, -1, 0, 0, 0, 0, 0});
  LVec mu6 = ambient_to_basis({1, 1, 1, -1, -1, -1, 0, 0, 0});
  LVec mu8 = ambient_to_basis({1, 1, 1, 1, -1, -1, -1, -1, 0});
  uint32_t mu2_key = static_cast<uint32_t>(class_of_vector(mu2));

  // v1 = 21 t_mu + sum_{<b,mu> even, b in C2 \ {mu}} t_b - 3 sum_{<b,mu> odd} t_b
  NamedVector v1{"v1", {}};
  for (uint32_t k : classes_of_norm(2)) {
    if (k == mu2_key)
      v1.coeff[k] = 21;
    else if (parity_with(k, mu2) == 0)
      v1.coeff[k] = 1;
    else
      v1.coeff[k] = -3;
  }
  out.push_back(v1);

  auto pn_vector = [&](const std::string& name, long long norm, const LVec& mu,
                       long long p_coef, long long n_coef) {
    NamedVector v{name, {}};
    for (uint32_t k : classes_of_norm(norm))
      v.coeff[k] = parity_with(k, mu) == 0 ? p_coef : n_coef;
    return v;
  };
  out.push_back(pn_vector("v2", 2, mu4, 10, -7));
  out.push_back(pn_vector("v3", 2, mu6, 6, -7));
  out.push_back(pn_vector("v4", 8, mu8, 5, -1));
  return out;
}

bool TwistSpace::verify_eigen(const std::array<long long, kClasses>& v, long long m) const {
  for (int i = 0; i < kClasses; ++i) {
    Int acc = 0;
    for (int j = 0; j < kClasses; ++j)
      if (v[j] != 0 && m_[i][j] != 0) acc += Int(m_[i][j]) * v[j];
    if (acc != Int(m) * v[i]) return false;
  }
  return true;
}

std::vector<double> TwistSpace::full_spectrum() const {
  Eigen::MatrixXd m(kClasses, kClasses);
  for (int i = 0; i < kClasses; ++i)
    for (int j = 0; j < kClasses; ++j) m(i, j) = double(m_[i][j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + kClasses);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TwistSpace::Transition> TwistSpace::e_alpha_action(const LVec& alpha,
                                                               uint32_t beta,
                                                               uint32_t gamma) const {
  if (a8_.norm(alpha) != 2) throw std::invalid_argument("alpha must be a root");
  const LVec& beta_rep = cosets_.by_key(beta).representative;
  long long p = a8_.pairing(alpha, beta_rep);
  uint32_t alpha_key = static_cast<uint32_t>(class_of_vector(alpha));
  // gamma indices always reduce mod 2A8; when alpha leaves Y the result is
  // an index of the enlarged space Y + <alpha>, flagged by gamma_in_Y
  uint32_t gamma_new = gamma ^ alpha_key;
  bool in_y = y_.contains(F2Vec{gamma_new, 8});
  std::vector<Transition> out;
  if (((p % 2) + 2) % 2 == 0) {
    out.push_back({1, beta, gamma_new, in_y});
  } else {
    out.push_back({2, beta ^ alpha_key, gamma_new, in_y});
    out.push_back({-1, beta, gamma_new, in_y});
  }
  return out;
}

const TwistSpace& twist_space() {
  static TwistSpace space;
  return space;
}

std::vector<Rat> combine_twisted_weights(const std::vector<Rat>& a,
                                         const std::vector<Rat>& b, const Rat& grid) {
  if (grid <= 0) throw std::invalid_argument("grid must be positive");
  std::vector<Rat> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Rat s = x + y;
      if (is_integer(s / grid)) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vok
