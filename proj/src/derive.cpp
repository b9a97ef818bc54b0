#include "derive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "errors.hpp"

namespace toss {

Rat LinearForm::eval(const Tsd& tsd, const Lattice& lat) const {
  Rat v = constant;
  for (size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t].is_zero()) continue;
    auto [b, j] = lat.free_vars[t];
    v += coeffs[t] * tsd.mu[b][j];
  }
  return v;
}

LinearForm form_zero(const Lattice& lat) {
  return {Rat(0), std::vector<Rat>(lat.free_vars.size(), Rat(0))};
}

LinearForm form_add(const LinearForm& a, const LinearForm& b) {
  LinearForm out = a;
  out.constant += b.constant;
  for (size_t t = 0; t < out.coeffs.size(); ++t) out.coeffs[t] += b.coeffs[t];
  return out;
}

LinearForm form_scale(const Rat& c, const LinearForm& f) {
  LinearForm out = f;
  out.constant *= c;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

LinearForm mu_form(const Lattice& lat, int branch, int j) {
  const int wb = lat.w.weights[branch - 1];
  int jj = ((j - 1) % wb + wb) % wb;  // 0-based
  LinearForm out = form_zero(lat);
  if (jj + 1 < wb) {
    out.coeffs[lat.free_var_index(branch - 1, jj)] = Rat(1);
  } else {
    // eliminated via the partition: mu_i^{w_i} = 1 - sum of the others
    out.constant = Rat(1);
    for (int t = 0; t + 1 < wb; ++t) out.coeffs[lat.free_var_index(branch - 1, t)] = Rat(-1);
  }
  return out;
}

bool CanonIneq::is_trivial_zero() const {
  return std::all_of(row.begin(), row.end(), [](long long x) { return x == 0; });
}

CanonIneq canonicalize(const LinearForm& f, bool strict) {
  long long den = f.constant.den();
  for (const auto& c : f.coeffs) den = std::lcm(den, c.den());
  CanonIneq out;
  out.strict = strict;
  out.row.reserve(f.coeffs.size() + 1);
  auto scaled = [&](const Rat& r) {
    return (Rat(den) * r).num();
  };
  out.row.push_back(scaled(f.constant));
  for (const auto& c : f.coeffs) out.row.push_back(scaled(c));
  long long g = 0;
  for (long long x : out.row) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : out.row) x /= g;
  return out;
}

LinearForm form_of(const Lattice& lat, const CanonIneq& c) {
  LinearForm f = form_zero(lat);
  f.constant = Rat(c.row[0]);
  for (size_t t = 0; t + 1 < c.row.size(); ++t) f.coeffs[t] = Rat(c.row[t + 1]);
  return f;
}

SymbolicCharge symbolic_charge_of_class(const Lattice& lat, const IVec& v) {
  IVec c = lat.charge_coords(v);
  SymbolicCharge out;
  out.r = Rat(c[0]);
  out.s = form_zero(lat);
  out.s.constant = Rat(-c[1]);  // Z(delta) = -1
  for (size_t t = 0; t < lat.free_vars.size(); ++t) out.s.coeffs[t] = Rat(-c[2 + t]);
  return out;
}

SymbolicCharge symbolic_charge(const Lattice& lat, int vertex, long long k) {
  return symbolic_charge_of_class(lat, lat.tau_shift(lat.section_class[vertex], k));
}

Inequality arrow_inequality(const Lattice& lat, const SymbolicCharge& x, const SymbolicCharge& y,
                            const std::string& provenance) {
  if (x.s.coeffs.size() != lat.free_vars.size() || y.s.coeffs.size() != lat.free_vars.size())
    throw dimension_mismatch_error("symbolic charge from a different lattice");
  if (x.r.sign() <= 0 || y.r.sign() <= 0)
    throw nonpositive_rank_error("arrow inequality needs positive rank coefficients");
  // z cancels: phi(x) <= phi(y)  <=>  s_x r_y - s_y r_x >= 0
  LinearForm f = form_add(form_scale(y.r, x.s), form_scale(-x.r, y.s));
  return {canonicalize(f), provenance};
}

std::vector<CanonIneq> ambient_positivity(const Lattice& lat) {
  std::vector<CanonIneq> out;
  for (int b = 0; b < lat.w.branches(); ++b)
    for (int j = 1; j <= lat.w.weights[b]; ++j)
      out.push_back(canonicalize(mu_form(lat, b + 1, j), /*strict=*/true));
  return out;
}

namespace {

FmRow to_fm_row(const CanonIneq& c, size_t nvars) {
  FmRow r;
  r.strict = c.strict;
  r.a.resize(nvars + 1);
  for (size_t t = 0; t + 1 < c.row.size(); ++t) r.a[t] = c.row[t + 1];
  r.a[nvars] = c.row[0];
  return r;
}

CanonIneq negate(const CanonIneq& c) {
  CanonIneq out = c;
  for (auto& x : out.row) x = -x;
  out.strict = !c.strict;  // not(f >= 0) is -f > 0
  return out;
}

Rat eval_canon(const CanonIneq& c, const std::vector<Rat>& x) {
  Rat v(c.row[0]);
  for (size_t t = 0; t + 1 < c.row.size(); ++t) v += Rat(c.row[t + 1]) * x[t];
  return v;
}

bool holds(const CanonIneq& c, const std::vector<Rat>& x) {
  Rat v = eval_canon(c, x);
  return c.strict ? v.sign() > 0 : v.sign() >= 0;
}

}  // namespace

bool implied_by(const Lattice& lat, const CanonIneq& f, const std::vector<Inequality>& system,
                std::vector<Rat>* counterexample) {
  const size_t nv = lat.free_vars.size();
  std::vector<FmRow> rows;
  for (const auto& a : ambient_positivity(lat)) rows.push_back(to_fm_row(a, nv));
  for (const auto& i : system) rows.push_back(to_fm_row(i.canon, nv));
  rows.push_back(to_fm_row(negate(f), nv));
  FmResult res = fm_solve(rows, (int)nv);
  if (res.feasible && counterexample) *counterexample = res.witness;
  return !res.feasible;
}

std::vector<Inequality> derive_region(const Lattice& lat) {
  std::map<CanonIneq, std::string> seen;
  std::vector<SymbolicCharge> cur(lat.n), nxt(lat.n);
  for (int u = 0; u < lat.n; ++u) cur[u] = symbolic_charge(lat, u, 0);
  for (long long k = 0; k < lat.period; ++k) {
    for (int u = 0; u < lat.n; ++u)
      nxt[u] = symbolic_charge_of_class(lat, lat.tau_shift(lat.section_class[u], k + 1));
    for (auto& [u, v] : lat.section.arrows) {
      auto tag = [&](long long kk, int a, long long kk2, int b) {
        return "arrow:" + lat.section.vertices[a] + "@" + std::to_string(kk) + "->" +
               lat.section.vertices[b] + "@" + std::to_string(kk2);
      };
      Inequality same = arrow_inequality(lat, cur[u], cur[v], tag(k, u, k, v));
      Inequality cross = arrow_inequality(lat, nxt[v], cur[u], tag(k + 1, v, k, u));
      for (auto& ineq : {same, cross})
        if (!ineq.canon.is_trivial_zero()) seen.emplace(ineq.canon, ineq.provenance);
    }
    cur = nxt;
  }
  std::vector<Inequality> out;
  for (auto& [c, prov] : seen) {
    // drop forms already implied by mu > 0 alone (type A reduces to nothing)
    if (implied_by(lat, c, {})) continue;
    out.push_back({c, prov});
  }
  return out;
}

std::vector<Inequality> listed_region(const Lattice& lat) {
  std::map<CanonIneq, std::string> seen;
  for (const auto& inst : listed_instances(lat.w)) {
    LinearForm f = form_zero(lat);
    for (const auto& t : inst.rhs) f = form_add(f, form_scale(Rat(t.coeff), mu_form(lat, t.branch, t.j)));
    for (const auto& t : inst.lhs) f = form_add(f, form_scale(Rat(-t.coeff), mu_form(lat, t.branch, t.j)));
    CanonIneq c = canonicalize(f);
    if (!c.is_trivial_zero()) seen.emplace(c, "listed:" + inst.id);
  }
  std::vector<Inequality> out;
  out.reserve(seen.size());
  for (auto& [c, prov] : seen) out.push_back({c, prov});
  return out;
}

EquivResult polytope_equivalent(const Lattice& lat, const std::vector<Inequality>& a,
                                const std::vector<Inequality>& b) {
  if (lat.free_vars.size() > 10)
    throw too_many_variables_error("refusing FM elimination beyond 10 free variables");
  EquivResult res;

  // exact ray shot: from an interior point, walk against the candidate's
  // gradient and stop half way between the candidate's zero crossing and the
  // first blocking wall; when the crossing comes first this is a certified
  // counterexample and no elimination is needed
  auto ray_witness = [&](const CanonIneq& cand, const std::vector<Inequality>& onto,
                         std::vector<Rat>* out) {
    const size_t nv = lat.free_vars.size();
    std::vector<CanonIneq> blockers = ambient_positivity(lat);
    for (const auto& i : onto) blockers.push_back(i.canon);
    std::mt19937_64 rng(0x746f7373u);
    for (int tries = 0; tries < 48; ++tries) {
      std::vector<Rat> base(nv);
      if (tries % 4 == 0) {
        for (size_t t = 0; t < nv; ++t)
          base[t] = Rat(1, lat.w.weights[lat.free_vars[t].first]);
      } else {
        for (int bch = 0; bch < lat.w.branches(); ++bch) {
          int wb = lat.w.weights[bch];
          std::vector<long long> parts(wb);
          long long tot = 0;
          for (auto& x : parts) {
            x = 1 + (long long)(rng() % 23);
            tot += x;
          }
          for (int j = 0; j + 1 < wb; ++j)
            base[lat.free_var_index(bch, j)] = Rat(parts[j], tot);
        }
      }
      bool inside = true;
      for (const auto& b : blockers)
        if (!holds(b, base)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      if (!holds(cand, base)) {  // the base point itself already separates
        *out = base;
        return true;
      }
      // direction: negative candidate gradient plus a little jitter
      std::vector<Rat> dir(nv);
      bool nonzero = false;
      for (size_t t = 0; t < nv; ++t) {
        long long jitter = tries == 0 ? 0 : (long long)(rng() % 5) - 2;
        dir[t] = Rat(-cand.row[t + 1] * 4 + jitter);
        if (!dir[t].is_zero()) nonzero = true;
      }
      if (!nonzero) continue;
      auto crossing = [&](const CanonIneq& wall, Rat* s) {
        Rat slope(0);
        for (size_t t = 0; t < nv; ++t) slope += Rat(wall.row[t + 1]) * dir[t];
        if (slope.sign() >= 0) return false;
        *s = -eval_canon(wall, base) / slope;
        return true;
      };
      Rat s_cand;
      if (!crossing(cand, &s_cand)) continue;
      Rat s_block;
      bool blocked = false;
      for (const auto& b : blockers) {
        Rat s;
        if (crossing(b, &s) && (!blocked || s < s_block)) {
          s_block = s;
          blocked = true;
        }
      }
      if (blocked && s_block <= s_cand) continue;  // a wall shadows the candidate
      Rat s = blocked ? (s_cand + s_block) / Rat(2) : s_cand + Rat(1);
      std::vector<Rat> pt(nv);
      for (size_t t = 0; t < nv; ++t) pt[t] = base[t] + s * dir[t];
      bool ok = !holds(cand, pt);
      for (const auto& b : blockers) ok = ok && holds(b, pt);
      if (ok) {
        *out = pt;
        return true;
      }
    }
    return false;
  };

  auto check_side = [&](const std::vector<Inequality>& from, const std::vector<Inequality>& onto,
                        const char* dir) {
    std::set<CanonIneq> have;
    for (const auto& i : onto) have.insert(i.canon);
    for (const auto& cand : from) {
      if (!res.equivalent) return;
      if (have.count(cand.canon)) continue;  // literally present on the other side
      std::vector<Rat> ce;
      if (!ray_witness(cand.canon, onto, &ce) && implied_by(lat, cand.canon, onto, &ce))
        continue;
      res.equivalent = false;
      res.witness = ce;
      res.failing = std::string(dir) + " " + cand.provenance;
    }
  };
  check_side(a, b, "not implied by second system:");
  if (res.equivalent) check_side(b, a, "not implied by first system:");

  if (!res.equivalent) {
    // certificate sanity: the witness keeps ambient positivity and indeed
    // separates the systems
    for (const auto& amb : ambient_positivity(lat))
      if (!holds(amb, res.witness)) throw internal_error("FM witness leaves the open simplex");
  }
  return res;
}

std::string var_name(const Lattice& lat, int t) {
  auto [b, j] = lat.free_vars[t];
  if (lat.w.branches() == 3) {
    const char* names = "abc";
    return std::string(1, names[b]) + std::to_string(j + 1);
  }
  return "mu" + std::to_string(b + 1) + "^" + std::to_string(j + 1);
}

std::string pretty_ineq(const Lattice& lat, const CanonIneq& c) {
  // f >= 0 printed as (negative part) <= (positive part)
  auto side = [&](int sgn) {
    std::string s;
    auto emit = [&](long long coeff, const std::string& name) {
      if (!s.empty()) s += " + ";
      if (coeff != 1 || name.empty()) s += std::to_string(coeff);
      if (coeff != 1 && !name.empty()) s += "*";
      s += name;
    };
    if (c.row[0] * sgn > 0) emit(c.row[0] * sgn, "");
    for (size_t t = 0; t + 1 < c.row.size(); ++t)
      if (c.row[t + 1] * sgn > 0) emit(c.row[t + 1] * sgn, var_name(lat, (int)t));
    return s.empty() ? std::string("0") : s;
  };
  return side(-1) + (c.strict ? " < " : " <= ") + side(+1);
}

}  // namespace toss
