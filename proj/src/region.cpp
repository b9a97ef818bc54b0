#include "region.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace toss {

namespace {

std::string sgn(int s) { return s > 0 ? "+" : "-"; }

void d_instances(const WeightData& w, std::vector<ListedInstance>& out) {
  const int w3 = w.weights[2];
  // |mu_1^1 - mu_2^2| = |mu_1^2 - mu_2^1| <= mu_3^j
  // |mu_1^1 - mu_2^1| = |mu_1^2 - mu_2^2| <= mu_3^j
  struct Line {
    const char* tag;
    int a_j, b_j;  // mu_1^{a_j} - mu_2^{b_j}
  };
  const Line lines[] = {{"L1a", 1, 2}, {"L1b", 2, 1}, {"L2a", 1, 1}, {"L2b", 2, 2}};
  for (int j = 1; j <= w3; ++j)
    for (const auto& ln : lines)
      for (int s : {1, -1})
        out.push_back({"D." + std::string(ln.tag) + ".j=" + std::to_string(j) + ".s=" + sgn(s),
                       {{s, 1, ln.a_j}, {-s, 2, ln.b_j}},
                       {{1, 3, j}}});
}

void e6_instances(std::vector<ListedInstance>& out) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        std::string sfx = ".i=" + std::to_string(i) + ".j=" + std::to_string(j) +
                          ".k=" + std::to_string(k);
        out.push_back({"E6.L1" + sfx, {{1, 1, i}}, {{1, 2, j}, {1, 3, k}}});
        for (int s : {1, -1})
          out.push_back({"E6.L2" + sfx + ".s=" + sgn(s),
                         {{s, 2, j + 1}, {-s, 2, j}, {s, 3, k + 1}, {-s, 3, k}},
                         {{1, 1, i}}});
      }
}

void e7_instances(std::vector<ListedInstance>& out) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 4; ++k) {
        std::string sfx = ".i=" + std::to_string(i) + ".j=" + std::to_string(j) +
                          ".k=" + std::to_string(k);
        out.push_back({"E7.L1" + sfx, {{1, 1, i}}, {{1, 2, j}, {1, 3, k}}});
        out.push_back({"E7.L2" + sfx, {{1, 2, j}}, {{1, 3, k - 1}, {1, 3, k + 1}}});
        for (int s : {1, -1}) {
          std::string id = sfx + ".s=" + sgn(s);
          out.push_back({"E7.L3" + id,
                         {{1, 1, i}, {1, 2, j}, {-1, 2, j + s}},
                         {{2, 3, k}, {1, 3, k + s}}});
          out.push_back({"E7.L4" + id,
                         {{1, 1, i}, {-1, 1, i + 1}, {1, 2, j}, {-1, 2, j + s}},
                         {{2, 3, k}, {1, 3, k + s}, {-1, 3, k - s}}});
        }
      }
}

void e8_instances(std::vector<ListedInstance>& out) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 5; ++k) {
        std::string sfx = ".i=" + std::to_string(i) + ".j=" + std::to_string(j) +
                          ".k=" + std::to_string(k);
        out.push_back({"E8.L1" + sfx, {{1, 2, j}}, {{1, 3, k - 1}, {1, 3, k + 1}}});
        out.push_back({"E8.L2a" + sfx, {{1, 3, k - 1}, {1, 3, k + 1}}, {{1, 1, i}}});
        out.push_back({"E8.L2b" + sfx, {{1, 1, i}}, {{1, 2, j}, {1, 3, k}}});
        for (int s : {1, -1}) {
          std::string id = sfx + ".s=" + sgn(s);
          out.push_back({"E8.L3" + id,
                         {{1, 1, i}, {1, 2, j}, {-1, 2, j + s}},
                         {{2, 3, k}, {1, 3, k + s}}});
          out.push_back({"E8.L4" + id,
                         {{1, 2, j}, {-1, 2, j + s}},
                         {{1, 3, k + 1}, {1, 3, k - 1}, {-1, 3, k + 2 * s}}});
          out.push_back({"E8.L5" + id,
                         {{2, 1, i}, {1, 2, j}, {-1, 2, j + 2 * s}},
                         {{1, 3, k - s}, {2, 3, k}, {3, 3, k + s}}});
          out.push_back({"E8.L6" + id,
                         {{1, 3, k - s}, {2, 3, k}, {3, 3, k + s}, {-1, 3, k + 2 * s}},
                         {{3, 1, i}, {2, 2, j}, {-2, 2, j - s}}});
          out.push_back({"E8.L7" + id,
                         {{1, 1, i}, {-1, 1, i + 1}, {1, 2, j}, {-2, 2, j + s}},
                         {{2, 3, k - 2 * s}, {1, 3, k - s}, {-1, 3, k + s}, {-2, 3, k + 2 * s}}});
        }
      }
}

}  // namespace

std::vector<ListedInstance> listed_instances(const WeightData& w) {
  std::vector<ListedInstance> out;
  switch (w.type) {
    case EuclideanType::A:
      break;  // thm:A: no mu inequalities
    case EuclideanType::D:
      d_instances(w, out);
      break;
    case EuclideanType::E:
      if (w.affine_n == 6)
        e6_instances(out);
      else if (w.affine_n == 7)
        e7_instances(out);
      else
        e8_instances(out);
      break;
  }
  return out;
}

Rat eval_terms(const Tsd& tsd, const std::vector<ListedTerm>& terms) {
  Rat v(0);
  for (const auto& t : terms) v += Rat(t.coeff) * tsd.mu_at(t.branch - 1, t.j - 1);
  return v;
}

namespace {

// instantiation is pure per weight type; membership checks run in bulk
const std::vector<ListedInstance>& cached_instances(const WeightData& w) {
  static std::mutex mu;
  static std::map<std::string, std::vector<ListedInstance>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w.label());
  if (it == cache.end()) it = cache.emplace(w.label(), listed_instances(w)).first;
  return it->second;
}

}  // namespace

MembershipReport check_membership(const Lattice& lat, const Tsd& tsd) {
  MembershipReport rep;
  rep.nondegenerate = is_nondegenerate(lat, tsd);
  TsdFixed fx = TsdFixed::make(tsd);
  auto fixed_sum = [&](const std::vector<ListedTerm>& terms) {
    __int128 acc = 0;
    for (const auto& t : terms) {
      const auto& branch = fx.mu_num[t.branch - 1];
      int wb = (int)branch.size();
      acc += (__int128)t.coeff * branch[((t.j - 1) % wb + wb) % wb];
    }
    return acc;
  };
  for (const auto& inst : cached_instances(tsd.w)) {
    if (fx.ok) {
      if (fixed_sum(inst.lhs) <= fixed_sum(inst.rhs)) continue;
    }
    Rat lhs = eval_terms(tsd, inst.lhs);
    Rat rhs = eval_terms(tsd, inst.rhs);
    if (lhs > rhs) rep.violations.push_back({inst.id, lhs, rhs});
  }
  rep.member = rep.nondegenerate && rep.violations.empty();
  return rep;
}

Tsd contraction_flow(const Tsd& base, const Tsd& target, const Rat& t) {
  if (base.w.label() != target.w.label() || base.w.weights != target.w.weights)
    throw weight_mismatch_error("flow endpoints have different weight data");
  if (base.z_im.sign() <= 0)
    throw not_nonconcentrated_error("flow base point needs Im(z) > 0");
  if (t.sign() < 0 || t > Rat(1)) throw toss_error("flow parameter must lie in [0,1]");
  Rat u = Rat(1) - t;
  std::vector<std::vector<Rat>> mu(base.mu.size());
  for (size_t b = 0; b < base.mu.size(); ++b) {
    mu[b].resize(base.mu[b].size());
    for (size_t j = 0; j < base.mu[b].size(); ++j)
      mu[b][j] = t * target.mu[b][j] + u * base.mu[b][j];
  }
  return Tsd::make(base.w, std::move(mu), t * target.z_re + u * base.z_re,
                   t * target.z_im + u * base.z_im);
}

HeartClass classify_heart(const Lattice& lat, const Tsd& tsd) {
  if (!is_nondegenerate(lat, tsd)) throw degenerate_error("datum is degenerate");
  HeartClass out;
  if (tsd.z_im.sign() > 0) {
    out.concentrated = false;  // heart = coh(P^1_w)
    return out;
  }
  const auto rep = check_membership(lat, tsd);
  if (!rep.member) throw toss_error("classify_heart requires a member datum");
  out.concentrated = true;

  const long long p = lat.period;
  std::vector<long long> cut(lat.n);
  for (int u = 0; u < lat.n; ++u) {
    // per residue k0: value at k0 + t*p is v0 + t*d with d = -kappa*r > 0,
    // so the smallest shift with positive value is k0 + p*(floor(-v0/d)+1)
    Rat d = Rat(-lat.kappa) * Rat(lat.rank_of(lat.section_class[u]));
    long long first_pos_min = 0, first_pos_max = 0;
    for (long long k0 = 0; k0 < p; ++k0) {
      SplitCharge ch = charge_from_coords(lat, tsd, lat.residue_coords[k0][u]);
      Rat v0 = ch.r * tsd.z_re + ch.s;
      Rat ratio = -v0 / d;
      if (ratio.is_integer()) throw degenerate_error("zero charge in tau-orbit");
      long long first_pos = k0 + p * (ratio.floor() + 1);
      if (k0 == 0 || first_pos < first_pos_min) first_pos_min = first_pos;
      if (k0 == 0 || first_pos > first_pos_max) first_pos_max = first_pos;
    }
    // the positives must form an up-set: thresholds over the p residues are
    // p consecutive integers (Case II of the heart classification)
    if (first_pos_max - first_pos_min != p - 1)
      throw internal_error("tau-orbit of a member has more than one sign change");
    cut[u] = first_pos_min - 1;  // largest shift with phase 1
  }

  out.induced.vertices = lat.section.vertices;
  for (auto& [u, v] : lat.section.arrows) {
    if (cut[v] == cut[u])
      out.induced.arrows.emplace_back(u, v);
    else if (cut[v] == cut[u] + 1)
      out.induced.arrows.emplace_back(v, u);
    else
      throw internal_error("heart slice is not a section of the mesh");
  }
  for (int u = 0; u < lat.n; ++u) out.cut[lat.section.vertices[u]] = cut[u];
  return out;
}

}  // namespace toss
