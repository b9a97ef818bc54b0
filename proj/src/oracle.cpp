#include "oracle.hpp"

#include <algorithm>

#include "errors.hpp"

namespace toss {

OracleWindow make_oracle_window(const Lattice& lat, int periods) {
  if (periods < 1) throw toss_error("periods must be >= 1");
  OracleWindow win;
  win.periods = periods;
  const long long k_max = (long long)periods * lat.period;
  win.window = ar_window(lat, 0, k_max);
  win.coords.resize(k_max + 1);
  std::vector<IVec> cls(lat.n);
  for (int u = 0; u < lat.n; ++u) cls[u] = lat.section_class[u];
  for (long long k = 0; k <= k_max; ++k) {
    win.coords[k].resize(lat.n);
    for (int u = 0; u < lat.n; ++u) {
      win.coords[k][u] = lat.charge_coords(cls[u]);
      cls[u] = lat.tau_shift(cls[u], 1);
    }
  }
  return win;
}

namespace {

// Phase order along a mesh arrow, for charges of vector-bundle classes
// (positive ranks). With Im z > 0 this is the exact argument comparison;
// with Im z = 0 the rank-normalized real parts still order the arrow ("the
// order of phases becomes the reverse order of the real parts"), which is
// the comparison the closed-form systems are derived with. Both cases are
// the sign of the z-free cross product, so the verdict of an arrow depends
// only on its shift mod p.
bool arrow_violated(const SplitCharge& x, const SplitCharge& y, const Tsd& tsd) {
  if (x.r.sign() <= 0 || y.r.sign() <= 0)
    throw internal_error("mesh vertex with nonpositive rank");
  if (tsd.z_im.sign() > 0)
    return cmp_phase(x, y, tsd.z_re, tsd.z_im) == PhaseOrd::Gt;
  return (x.s * y.r - y.s * x.r).sign() < 0;
}

}  // namespace

MembershipReport condition_star(const Lattice& lat, const Tsd& tsd, const OracleWindow& win) {
  MembershipReport rep;
  rep.nondegenerate = is_nondegenerate(lat, tsd);
  if (!rep.nondegenerate)
    throw zero_charge_error("condition_star requires a non-degenerate datum");
  TsdFixed fx = TsdFixed::make(tsd);
  std::vector<const ARWindow::Arrow*> hits;
  if (fx.ok) {
    // integer fast path: the violation test is the sign of the z-free cross
    // product, so one common denominator serves the whole window
    std::vector<std::vector<__int128>> snum(win.coords.size(),
                                            std::vector<__int128>(lat.n));
    std::vector<std::vector<long long>> rk(win.coords.size(), std::vector<long long>(lat.n));
    for (size_t k = 0; k < win.coords.size(); ++k)
      for (int u = 0; u < lat.n; ++u) {
        snum[k][u] = fx.s_num(lat, win.coords[k][u]);
        rk[k][u] = win.coords[k][u][0];
      }
    for (const auto& a : win.window.arrows)
      if (snum[a.k_from][a.u_from] * rk[a.k_to][a.u_to] <
          snum[a.k_to][a.u_to] * rk[a.k_from][a.u_from])
        hits.push_back(&a);
  } else {
    std::vector<std::vector<SplitCharge>> charge(win.coords.size(),
                                                 std::vector<SplitCharge>(lat.n));
    for (size_t k = 0; k < win.coords.size(); ++k)
      for (int u = 0; u < lat.n; ++u)
        charge[k][u] = charge_from_coords(lat, tsd, win.coords[k][u]);
    for (const auto& a : win.window.arrows)
      if (arrow_violated(charge[a.k_from][a.u_from], charge[a.k_to][a.u_to], tsd))
        hits.push_back(&a);
  }
  for (const auto* ap : hits) {
    const auto& a = *ap;
    SplitCharge x = charge_from_coords(lat, tsd, win.coords[a.k_from][a.u_from]);
    SplitCharge y = charge_from_coords(lat, tsd, win.coords[a.k_to][a.u_to]);
    std::string id = lat.section.vertices[a.u_from] + "->" + lat.section.vertices[a.u_to] +
                     "@" + std::to_string(std::min(a.k_from, a.k_to));
    // violated comparison s_y r_x <= s_x r_y, reported as lhs > rhs
    rep.violations.push_back({id, y.s * x.r, x.s * y.r});
  }
  std::stable_sort(rep.violations.begin(), rep.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     long long ka = std::stoll(a.id.substr(a.id.find('@') + 1));
                     long long kb = std::stoll(b.id.substr(b.id.find('@') + 1));
                     if (ka != kb) return ka < kb;
                     return a.id < b.id;
                   });
  rep.member = rep.violations.empty();
  return rep;
}

MembershipReport condition_star(const Lattice& lat, const Tsd& tsd, int periods) {
  return condition_star(lat, tsd, make_oracle_window(lat, periods));
}

bool cross_check(const Lattice& lat, const Tsd& tsd) {
  bool star = condition_star(lat, tsd, 1).member;
  bool closed = check_membership(lat, tsd).member;
  return star == closed;
}

}  // namespace toss
