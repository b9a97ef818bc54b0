#include "lattice.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace toss {

namespace {

// Reference dimension vectors generating the E-type tube simples; the
// remaining simple of each tube is delta minus these. Coordinates follow
// the X_0..X_{rank-1} vertex order of section_quiver().
struct FrozenSimple {
  int branch;  // 1-based
  int j;       // 1-based
  IVec dim;
};

const std::vector<FrozenSimple>& frozen_e_simples(int n) {
  static const std::vector<FrozenSimple> e6 = {
      {1, 1, {1, 1, 1, 1, 0, 0, 0}}, {1, 2, {2, 1, 1, 1, 1, 1, 1}},
      {2, 1, {1, 1, 1, 0, 0, 1, 0}}, {2, 3, {1, 0, 1, 1, 0, 0, 1}},
      {3, 1, {1, 1, 0, 1, 0, 0, 1}}, {3, 3, {1, 0, 1, 1, 0, 1, 0}}};
  static const std::vector<FrozenSimple> e7 = {
      {1, 1, {2, 1, 2, 1, 1, 1, 1, 0}}, {1, 2, {2, 1, 1, 2, 1, 1, 0, 1}},
      {2, 1, {2, 1, 1, 1, 1, 1, 1, 1}}, {2, 2, {1, 1, 1, 1, 0, 0, 0, 0}},
      {3, 1, {1, 1, 1, 0, 1, 0, 0, 0}}, {3, 2, {1, 0, 1, 1, 1, 0, 1, 0}},
      {3, 3, {1, 1, 0, 1, 0, 1, 0, 0}}};
  static const std::vector<FrozenSimple> e8 = {
      {1, 1, {3, 1, 2, 3, 1, 2, 2, 1, 1}}, {1, 2, {3, 2, 2, 2, 1, 2, 1, 1, 0}},
      {2, 1, {2, 1, 2, 1, 1, 1, 1, 0, 0}}, {2, 2, {2, 1, 1, 2, 1, 1, 1, 1, 0}},
      {3, 1, {1, 0, 1, 1, 1, 1, 0, 0, 0}}, {3, 2, {1, 1, 0, 1, 0, 1, 1, 0, 0}},
      {3, 3, {1, 0, 1, 1, 0, 1, 1, 1, 0}}, {3, 4, {2, 1, 1, 1, 1, 1, 1, 1, 1}}};
  switch (n) {
    case 6: return e6;
    case 7: return e7;
    default: return e8;
  }
}

IVec primitive_kernel_vector(const IMat& m) {
  const int n = (int)m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    Rat pv = a[r][c];
    for (int j = 0; j < n; ++j) a[r][j] = a[r][j] / pv;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
  if (free_cols.size() != 1)
    throw internal_error("Coxeter fixed space is not one-dimensional");
  int fc = free_cols[0];
  std::vector<Rat> v(n);
  v[fc] = Rat(1);
  for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fc];
  long long den = 1;
  for (auto& x : v) den = std::lcm(den, x.den());
  IVec iv(n);
  long long g = 0;
  for (int i = 0; i < n; ++i) {
    iv[i] = (v[i] * Rat(den)).num();
    g = std::gcd(g, iv[i]);
  }
  long long sum = 0;
  for (long long x : iv) sum += x;
  for (auto& x : iv) {
    x /= g;
    if (sum < 0) x = -x;
  }
  for (long long x : iv)
    if (x <= 0) throw internal_error("imaginary root is not strictly positive");
  return iv;
}

}  // namespace

int Lattice::rank_of(const IVec& v) const {
  if ((int)v.size() != n) throw dimension_mismatch_error("class has wrong rank");
  __int128 acc = 0;
  for (int i = 0; i < n; ++i) acc += (__int128)rank_row[i] * v[i];
  if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("rank overflow");
  return (int)acc;
}

IVec Lattice::charge_coords(const IVec& v) const {
  return imat_vec(charge_basis_inv, v);
}

IVec Lattice::tau_shift(const IVec& v, long long k) const {
  IVec out = v;
  const IMat& m = k >= 0 ? phi : phi_inv;
  for (long long i = 0; i < std::llabs(k); ++i) out = imat_vec(m, out);
  return out;
}

int Lattice::free_var_index(int branch, int j) const {
  for (size_t t = 0; t < free_vars.size(); ++t)
    if (free_vars[t].first == branch && free_vars[t].second == j) return (int)t;
  return -1;
}

Lattice build_lattice(const WeightData& w) {
  Lattice lat;
  lat.w = w;
  lat.section = section_quiver(w);
  const int n = (int)lat.section.vertices.size();
  lat.n = n;
  if (n != w.rank) throw internal_error("section vertex count != lattice rank");
  if (!lat.section.is_acyclic()) throw internal_error("section quiver has a cycle");

  // E = I - Arrows(section^op); Arrows(op)[u][v] = #arrows v->u in the section
  lat.euler = imat_identity(n);
  for (auto& [u, v] : lat.section.arrows) lat.euler[v][u] -= 1;

  IMat et(n, IVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) et[i][j] = lat.euler[j][i];
  IMat einv = imat_inverse_unimodular(lat.euler);
  lat.cartan = imat_inverse_unimodular(et);

  // phi = -E^{-1} E^T;  [tau M] = phi [M]
  lat.phi = imat_mul(einv, et);
  for (auto& row : lat.phi)
    for (auto& x : row) x = -x;
  lat.phi_inv = imat_inverse_unimodular(lat.phi);

  lat.section_class.resize(n);
  for (int u = 0; u < n; ++u) {
    IVec col(n);
    for (int i = 0; i < n; ++i) col[i] = lat.cartan[i][u];
    lat.section_class[u] = col;
  }

  IMat phi_minus_i = lat.phi;
  for (int i = 0; i < n; ++i) phi_minus_i[i][i] -= 1;
  lat.delta = primitive_kernel_vector(phi_minus_i);

  // tube simple classes
  const int l = w.branches();
  lat.simple_class.assign(l, {});
  auto& S = lat.simple_class;
  if (w.type == EuclideanType::A) {
    // all canonical projectives are section vertices: telescope along chains
    lat.p0_class = lat.section_class[lat.section.source];
    for (int b = 0; b < l; ++b) {
      IVec prev = lat.p0_class;
      for (int j = 1; j <= w.weights[b]; ++j) {
        int vtx = j < w.weights[b]
                      ? lat.section.index_of("P" + std::to_string(b + 1) + "^" + std::to_string(j))
                      : lat.section.sink;
        IVec cur = lat.section_class[vtx];
        S[b].push_back(ivec_sub(cur, prev));
        prev = cur;
      }
    }
  } else if (w.type == EuclideanType::D) {
    const int nn = w.affine_n;
    const auto& sec = lat.section;
    lat.p0_class = lat.section_class[sec.index_of("P0")];
    const IVec& p0 = lat.p0_class;
    S[0].push_back(ivec_sub(lat.section_class[sec.index_of("P1^1")], p0));
    S[0].push_back(ivec_sub(lat.delta, S[0][0]));
    S[1].push_back(ivec_sub(lat.section_class[sec.index_of("P2^1")], p0));
    S[1].push_back(ivec_sub(lat.delta, S[1][0]));
    // branch 3 from the middle chain: Z([X_1]) = Z([X_0]) + Z([P_0]) - mu_3^1
    // and Z([X_j]) - Z([X_{j-1}]) = -mu_3^j
    IVec s31 = ivec_sub(lat.section_class[sec.index_of("X1")],
                        ivec_add(lat.section_class[sec.index_of("X0")], p0));
    S[2].push_back(s31);
    IVec acc = s31;
    for (int j = 2; j <= nn - 3; ++j) {
      IVec s = ivec_sub(lat.section_class[sec.index_of("X" + std::to_string(j))],
                        lat.section_class[sec.index_of("X" + std::to_string(j - 1))]);
      S[2].push_back(s);
      acc = ivec_add(acc, s);
    }
    S[2].push_back(ivec_sub(lat.delta, acc));
  } else {
    const auto& tab = frozen_e_simples(w.affine_n);
    for (int b = 0; b < l; ++b) S[b].assign(w.weights[b], {});
    for (const auto& fs : tab) S[fs.branch - 1][fs.j - 1] = fs.dim;
    for (int b = 0; b < l; ++b) {
      int missing = -1;
      IVec acc(n, 0);
      for (int j = 0; j < w.weights[b]; ++j) {
        if (S[b][j].empty()) {
          if (missing >= 0) throw internal_error("more than one tube simple missing");
          missing = j;
        } else {
          acc = ivec_add(acc, S[b][j]);
        }
      }
      if (missing >= 0) S[b][missing] = ivec_sub(lat.delta, acc);
    }
    // anchor [P_0] via the identifications X5 = P2^1 (E6), X7 = P2^1 (E7),
    // X8 = tau P2^1 (E8), using [P_i^1] - [P_0] = [S_i^1]
    const auto& sec = lat.section;
    IVec p21;
    if (w.affine_n == 6)
      p21 = lat.section_class[sec.index_of("X5")];
    else if (w.affine_n == 7)
      p21 = lat.section_class[sec.index_of("X7")];
    else
      p21 = lat.tau_shift(lat.section_class[sec.index_of("X8")], -1);
    lat.p0_class = ivec_sub(p21, S[1][0]);
  }

  // charge basis: columns [P_0], delta, S_i^j for j < w_i
  lat.free_vars.clear();
  std::vector<IVec> cols = {lat.p0_class, lat.delta};
  for (int b = 0; b < l; ++b)
    for (int j = 0; j + 1 < w.weights[b]; ++j) {
      cols.push_back(S[b][j]);
      lat.free_vars.emplace_back(b, j);
    }
  if ((int)cols.size() != n) throw internal_error("charge basis has wrong size");
  lat.charge_basis.assign(n, IVec(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) lat.charge_basis[i][j] = cols[j][i];
  lat.charge_basis_inv = imat_inverse_unimodular(lat.charge_basis);
  lat.rank_row = lat.charge_basis_inv[0];

  lat.period = w.period();
  lat.residue_coords.resize(lat.period);
  {
    std::vector<IVec> cls = lat.section_class;
    for (int k = 0; k < lat.period; ++k) {
      lat.residue_coords[k].resize(n);
      for (int u = 0; u < n; ++u) {
        lat.residue_coords[k][u] = lat.charge_coords(cls[u]);
        cls[u] = imat_vec(lat.phi, cls[u]);
      }
    }
  }

  // --- structural invariants -------------------------------------------
  if (imat_vec(lat.phi, lat.delta) != lat.delta)
    throw internal_error("phi does not fix the imaginary root");
  for (int b = 0; b < l; ++b) {
    IVec acc(n, 0);
    for (int j = 0; j < w.weights[b]; ++j) {
      acc = ivec_add(acc, S[b][j]);
      // phi [S_i^j] = [S_i^{j-1}]
      int prev = (j + w.weights[b] - 1) % w.weights[b];
      if (imat_vec(lat.phi, S[b][j]) != S[b][prev])
        throw internal_error("tube simples are not phi-cyclic");
      if (lat.rank_of(S[b][j]) != 0) throw internal_error("tube simple has nonzero rank");
    }
    if (acc != lat.delta) throw internal_error("tube simples do not sum to delta");
  }
  if (lat.rank_of(lat.p0_class) != 1 || lat.rank_of(lat.delta) != 0)
    throw internal_error("rank functional is misnormalized");
  for (int u = 0; u < n; ++u)
    if (lat.rank_of(lat.section_class[u]) <= 0)
      throw internal_error("section class with nonpositive rank");

  // phi^p = I + kappa delta r^T, with kappa = -p (sum 1/w_i - l + 2)
  {
    IMat pp = imat_identity(n);
    for (int i = 0; i < lat.period; ++i) pp = imat_mul(lat.phi, pp);
    long long kappa = 0;
    bool found = false;
    for (int i = 0; i < n && !found; ++i)
      for (int j = 0; j < n && !found; ++j) {
        long long d = pp[i][j] - (i == j ? 1 : 0);
        long long dr = lat.delta[i] * lat.rank_row[j];
        if (dr != 0) {
          if (d % dr != 0) throw internal_error("phi^p - I is not kappa*delta*r^T");
          kappa = d / dr;
          found = true;
        }
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (pp[i][j] - (i == j ? 1 : 0) != kappa * lat.delta[i] * lat.rank_row[j])
          throw internal_error("phi^p - I is not kappa*delta*r^T");
    if (kappa >= 0) throw internal_error("kappa must be a negative integer");
    lat.kappa = kappa;
  }

  return lat;
}

IVec exceptional_simple_class(const Lattice& lat, int i, int j) {
  if (i < 1 || i > lat.w.branches()) throw toss_error("branch index out of range");
  int wi = lat.w.weights[i - 1];
  int jj = ((j - 1) % wi + wi) % wi;
  return lat.simple_class[i - 1][jj];
}

ARWindow ar_window(const Lattice& lat, long long k_min, long long k_max) {
  if (k_min > k_max) throw toss_error("ar_window requires k_min <= k_max");
  ARWindow win;
  win.k_min = k_min;
  win.k_max = k_max;
  for (long long k = k_min; k <= k_max; ++k) {
    for (auto& [u, v] : lat.section.arrows) {
      win.arrows.push_back({k, u, k, v});
      if (k + 1 <= k_max) win.arrows.push_back({k + 1, v, k, u});
    }
  }
  return win;
}

}  // namespace toss
