#include "classify.hpp"

#include "affine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace vok {

namespace {

struct CatalogEntry {
  AlgebraId id;
  int dim;
  int h_vee;
};

// One entry per isomorphism class: B2 ~ C2 listed as C2, D3 ~ A3 as A3.
std::vector<CatalogEntry> catalog(int max_rank) {
  std::vector<CatalogEntry> out;
  auto push = [&](char s, int r) {
    const RootDatum& rd = root_datum(AlgebraId{s, r});
    out.push_back({rd.id, rd.dimension, rd.dual_coxeter});
  };
  for (int r = 1; r <= max_rank; ++r) push('A', r);
  for (int r = 2; r <= std::min(max_rank, 9); ++r) push('C', r);
  for (int r = 3; r <= std::min(max_rank, 9); ++r) push('B', r);
  for (int r = 4; r <= std::min(max_rank, 9); ++r) push('D', r);
  push('E', 6);
  push('E', 7);
  push('E', 8);
  push('F', 4);
  push('G', 2);
  return out;
}

struct RatioEntry {
  CatalogEntry cat;
  int level;
};

std::vector<RatioEntry> ratio_factors(const Rat& ratio, int max_rank) {
  std::vector<RatioEntry> out;
  for (const auto& e : catalog(max_rank)) {
    Rat level = Rat(e.h_vee) / ratio;
    if (!is_integer(level) || level <= 0) continue;
    out.push_back({e, static_cast<int>(numerator(level))});
  }
  std::sort(out.begin(), out.end(), [](const RatioEntry& a, const RatioEntry& b) {
    return a.cat.dim != b.cat.dim ? a.cat.dim > b.cat.dim
                                  : a.cat.id.name() < b.cat.id.name();
  });
  return out;
}

}  // namespace

std::string CandidateAlgebra::name() const {
  std::string s;
  for (size_t i = 0; i < summands.size(); ++i) {
    if (i) s += " ";
    s += summands[i].name();
  }
  return s;
}

OrbifoldDim orbifold_dim(long long dim_v, long long dim_fixed, long long dim_half) {
  if (dim_v < 0 || dim_fixed < 0 || dim_half < 0)
    throw std::invalid_argument("orbifold_dim: negative input");
  OrbifoldDim r;
  r.value = 3 * dim_fixed + 24 * (1 - dim_half) - dim_v;
  r.feasible = r.value >= 0;
  return r;
}

Rat ratio_for_dim(long long d) {
  if (d <= 24) throw std::invalid_argument("ratio defined only for dimension > 24");
  return Rat(d - 24, 24);
}

std::vector<LieSummand> ratio_pool(long long d) {
  Rat ratio = ratio_for_dim(d);
  auto factors = ratio_factors(ratio, 9);
  if (factors.empty()) return {};
  int min_dim = factors.back().cat.dim;
  for (const auto& f : factors) min_dim = std::min(min_dim, f.cat.dim);
  std::vector<LieSummand> out;
  for (const auto& f : factors) {
    // a proper simple ideal leaves a nonzero ratio-matching complement
    if (f.cat.dim == d || f.cat.dim + min_dim <= d)
      out.push_back({f.cat.id, f.level});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CandidateAlgebra> enumerate_candidates(long long d, int max_rank) {
  Rat ratio = ratio_for_dim(d);
  auto factors = ratio_factors(ratio, max_rank);
  std::vector<CandidateAlgebra> out;
  std::vector<LieSummand> stack;
  std::function<void(size_t, long long)> rec = [&](size_t from, long long rest) {
    if (rest == 0) {
      CandidateAlgebra c;
      c.summands = stack;
      std::sort(c.summands.begin(), c.summands.end(), [](const LieSummand& a,
                                                         const LieSummand& b) {
        const RootDatum& ra = root_datum(a.algebra);
        const RootDatum& rb = root_datum(b.algebra);
        return ra.dimension != rb.dimension ? ra.dimension > rb.dimension
                                            : a.name() < b.name();
      });
      c.total_dim = static_cast<int>(d);
      out.push_back(c);
      return;
    }
    for (size_t i = from; i < factors.size(); ++i) {
      if (factors[i].cat.dim > rest) continue;
      stack.push_back({factors[i].cat.id, factors[i].level});
      rec(i, rest - factors[i].cat.dim);
      stack.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const CandidateAlgebra& a, const CandidateAlgebra& b) {
    return a.name() < b.name();
  });
  return out;
}

namespace {

struct TableRow {
  std::vector<AlgebraId> consumes;
  std::vector<AlgebraId> produces;
  int produces_u1;
};

const std::vector<TableRow>& fixed_point_table() {
  static const std::vector<TableRow> rows = {
      {{{'A', 8}}, {{'B', 4}}, 0},                          // outer involution
      {{{'A', 2}, {'A', 2}}, {{'A', 2}}, 0},                // factor swap
      {{{'F', 4}}, {{'B', 4}}, 0},                          // inner sigma_{L4}
      {{{'A', 8}}, {{'A', 7}}, 1},                          // inner exp(pi i (L1+L2))
      {{{'E', 7}, {'A', 5}}, {{'A', 7}, {'A', 2}, {'A', 2}}, 1},
  };
  return rows;
}

using TypeCount = std::map<AlgebraId, int>;

bool match_rec(TypeCount available, TypeCount needed, int needed_u1) {
  // base: no summands left to assign
  bool any_available = false;
  for (auto& [id, cnt] : available)
    if (cnt > 0) { any_available = true; break; }
  if (!any_available) {
    for (auto& [id, cnt] : needed)
      if (cnt != 0) return false;
    return needed_u1 == 0;
  }
  // pick the first available summand type and branch: leave it untouched
  // (matching a needed copy) or consume it through one of the table rows
  AlgebraId pick{};
  for (auto& [id, cnt] : available)
    if (cnt > 0) { pick = id; break; }

  // branch 1: untouched, must be needed
  if (needed.count(pick) && needed[pick] > 0) {
    TypeCount a2 = available, n2 = needed;
    a2[pick] -= 1;
    n2[pick] -= 1;
    if (match_rec(a2, n2, needed_u1)) return true;
  }
  // branch 2: rows whose consumption includes pick
  for (const auto& row : fixed_point_table()) {
    TypeCount cons;
    for (const auto& c : row.consumes) cons[c]++;
    if (!cons.count(pick)) continue;
    bool ok = true;
    TypeCount a2 = available;
    for (auto& [id, cnt] : cons) {
      if ((a2.count(id) ? a2[id] : 0) < cnt) { ok = false; break; }
      a2[id] -= cnt;
    }
    if (!ok) continue;
    TypeCount n2 = needed;
    int u1 = needed_u1 - row.produces_u1;
    if (u1 < 0) continue;
    for (const auto& p : row.produces) {
      if (!n2.count(p) || n2[p] == 0) { ok = false; break; }
      n2[p] -= 1;
    }
    if (!ok) continue;
    if (match_rec(a2, n2, u1)) return true;
  }
  return false;
}

}  // namespace

bool subalgebra_filter(const CandidateAlgebra& cand, const RequiredSubalgebra& req) {
  // the required factors must be types the table knows how to produce
  static const std::vector<AlgebraId> producible = {
      {'B', 4}, {'A', 2}, {'A', 7}, {'A', 8}, {'F', 4}, {'E', 7}, {'A', 5}};
  for (const auto& f : req.simple_factors) {
    bool known = false;
    for (const auto& p : producible)
      if (p == f) { known = true; break; }
    // untouched summands of the candidate can also supply a required factor
    for (const auto& s : cand.summands)
      if (s.algebra == f) known = true;
    if (!known)
      throw std::invalid_argument("required fixed-point type " + f.name() +
                                  " outside the involution table");
  }
  TypeCount available, needed;
  for (const auto& s : cand.summands) available[s.algebra]++;
  for (const auto& f : req.simple_factors) needed[f]++;
  return match_rec(available, needed, req.u1_count);
}

std::vector<IntegralPair> integral_pairs_f4a2() {
  AlgebraId f4{'F', 4}, a2{'A', 2};
  auto f4w = enumerate_level_weights(f4, 6);
  auto a2w = enumerate_level_weights(a2, 2);
  std::vector<IntegralPair> out;
  for (const auto& l1 : f4w)
    for (const auto& l2 : a2w) {
      Rat h = conformal_weight(f4, 6, l1.labels) + conformal_weight(a2, 2, l2.labels);
      if (is_integer(h)) out.push_back({l1.labels, l2.labels, h});
    }
  return out;
}

Rat min_pairing(const AlgebraId& g, const IVec& h, const IVec& lambda) {
  return root_datum(g).min_orbit_pairing(h, lambda);
}

F4CheckReport f4_check() {
  F4CheckReport r;
  AlgebraId f4{'F', 4};
  const RootDatum& rd = root_datum(f4);
  IVec L4 = {0, 0, 0, 1};
  IVec fund(4);
  for (int i = 0; i < 4; ++i) {
    IVec li(4, 0);
    li[i] = 1;
    r.lambda4_inner.push_back(rd.inner(L4, li));
  }
  // order of sigma_h: smallest n clearing every (h|Lambda_i) and (h|alpha_i)
  for (int n = 1; n <= 48 && r.sigma_order == 0; ++n) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      if (!is_integer(Rat(n) * r.lambda4_inner[i])) ok = false;
      IVec alpha_labels = rd.root_labels([&] {
        IVec e(4, 0);
        e[i] = 1;
        return e;
      }());
      if (!is_integer(Rat(n) * rd.inner(L4, alpha_labels))) ok = false;
    }
    if (ok) r.sigma_order = n;
  }

  bool first = true;
  for (const auto& root : rd.positive_roots) {
    Rat v = rd.inner(L4, rd.root_labels(root));
    Rat w = -v;
    if (first || v < r.root_pairing_min) { r.root_pairing_min = v; first = false; }
    if (w < r.root_pairing_min) r.root_pairing_min = w;
  }
  r.root_condition = r.root_pairing_min >= -1;

  r.h_norm_voa = Rat(6) * rd.inner(L4, L4);

  auto pairs = integral_pairs_f4a2();
  r.all_positive = true;
  r.none_half = true;
  for (const auto& p : pairs) {
    F4CheckReport::PairWeight w;
    w.pair = p;
    w.min_pair_orbit = rd.min_orbit_pairing(L4, p.f4_labels);  // A2 part has h=0
    w.min_pair_full = rd.min_weight_system_pairing(L4, p.f4_labels);
    w.twisted_weight = p.h_total + w.min_pair_full + r.h_norm_voa / 2;
    if (w.twisted_weight <= 0) r.all_positive = false;
    if (w.twisted_weight == Rat(1, 2)) r.none_half = false;
    r.weights.push_back(w);
  }

  // the 18 pairs of the construction, with their integral weights
  const std::vector<std::tuple<IVec, IVec, int>> paper = {
      {{0, 0, 0, 0}, {0, 0}, 0}, {{0, 0, 0, 1}, {1, 1}, 1}, {{0, 0, 0, 3}, {1, 1}, 2},
      {{0, 0, 0, 4}, {0, 0}, 2}, {{0, 0, 0, 6}, {1, 1}, 4}, {{0, 0, 2, 1}, {1, 1}, 3},
      {{0, 0, 3, 0}, {0, 0}, 3}, {{0, 1, 0, 1}, {1, 0}, 2}, {{0, 1, 0, 1}, {0, 1}, 2},
      {{0, 1, 0, 2}, {0, 2}, 3}, {{0, 1, 0, 2}, {2, 0}, 3}, {{1, 0, 0, 3}, {0, 0}, 3},
      {{1, 0, 1, 2}, {1, 0}, 3}, {{1, 0, 1, 2}, {0, 1}, 3}, {{1, 1, 0, 0}, {0, 0}, 2},
      {{2, 0, 0, 0}, {0, 2}, 2}, {{2, 0, 0, 0}, {2, 0}, 2}, {{2, 0, 1, 0}, {1, 1}, 3}};
  auto key = [](const IVec& a, const IVec& b, const Rat& h) {
    return std::make_tuple(a, b, h);
  };
  std::vector<std::tuple<IVec, IVec, Rat>> got, want;
  for (const auto& p : pairs) got.push_back(key(p.f4_labels, p.a2_labels, p.h_total));
  for (const auto& [a, b, h] : paper) want.push_back(key(a, b, Rat(h)));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  r.pairs_match_paper = got == want;
  return r;
}

E7A5CheckReport e7a5_check() {
  E7A5CheckReport r;
  AlgebraId e7{'E', 7}, a5{'A', 5};
  const RootDatum& rde = root_datum(e7);
  const RootDatum& rda = root_datum(a5);
  IVec L2(7, 0);
  L2[1] = 1;
  IVec L3(5, 0);
  L3[2] = 1;
  // h = (L2/2, L3/2); VOA form weights the normalized form by the level
  r.h_norm_voa = Rat(3) * rde.inner(L2, L2) / 4 + Rat(1) * rda.inner(L3, L3) / 4;
  r.h_norm_integral = is_integer(r.h_norm_voa);

  r.order_two_witness = true;
  for (int i = 0; i < 7; ++i) {
    if (rde.comarks[i] > 3) continue;  // not admissible at level 3
    IVec li(7, 0);
    li[i] = 1;
    Rat v = rde.inner(L2, li);  // = 2 (h | Lambda_i)
    if (!is_integer(v)) {
      r.order_two_witness = false;
      r.half_integral_pairings.push_back("E7:L" + std::to_string(i + 1) + "=" + rat_str(v));
    }
  }
  for (int i = 0; i < 5; ++i) {
    IVec li(5, 0);
    li[i] = 1;
    Rat v = rda.inner(L3, li);
    if (!is_integer(v)) {
      r.order_two_witness = false;
      r.half_integral_pairings.push_back("A5:L" + std::to_string(i + 1) + "=" + rat_str(v));
    }
  }

  r.dim_e7a5 = rde.dimension + rda.dimension;
  r.dim_fixed = root_datum(AlgebraId{'A', 7}).dimension +
                2 * root_datum(AlgebraId{'A', 2}).dimension + 1;
  r.forward = orbifold_dim(r.dim_e7a5, r.dim_fixed, 0);
  r.forward_is_96 = r.forward.value == 96;
  return r;
}

}  // namespace vok
