#include "charge.hpp"

#include "errors.hpp"

namespace toss {

Tsd Tsd::make(const WeightData& w, std::vector<std::vector<Rat>> mu, Rat z_re, Rat z_im) {
  if ((int)mu.size() != w.branches())
    throw invalid_tsd_error("expected " + std::to_string(w.branches()) + " mu partitions");
  for (int b = 0; b < w.branches(); ++b) {
    if ((int)mu[b].size() != w.weights[b])
      throw invalid_tsd_error("branch " + std::to_string(b + 1) + " needs " +
                              std::to_string(w.weights[b]) + " parts");
    Rat sum(0);
    for (const Rat& m : mu[b]) {
      if (m.sign() <= 0)
        throw invalid_tsd_error("branch " + std::to_string(b + 1) +
                                " has a non-positive part " + m.str());
      sum += m;
    }
    if (sum != Rat(1))
      throw invalid_tsd_error("branch " + std::to_string(b + 1) + " parts sum to " + sum.str() +
                              ", expected 1");
  }
  if (z_im.sign() < 0) throw invalid_tsd_error("Im(z) must be >= 0");
  if (z_re.is_zero() && z_im.is_zero()) throw invalid_tsd_error("z must be nonzero");
  Tsd t;
  t.w = w;
  t.mu = std::move(mu);
  t.z_re = z_re;
  t.z_im = z_im;
  return t;
}

Tsd Tsd::uniform(const WeightData& w, Rat z_re, Rat z_im) {
  std::vector<std::vector<Rat>> mu;
  for (int wb : w.weights) mu.emplace_back(wb, Rat(1, wb));
  return make(w, std::move(mu), z_re, z_im);
}

SplitCharge central_charge(const Lattice& lat, const Tsd& tsd, const IVec& v) {
  if ((int)v.size() != lat.n) throw dimension_mismatch_error("class has wrong rank");
  IVec c = lat.charge_coords(v);
  SplitCharge out;
  out.r = Rat(c[0]);
  out.s = Rat(-c[1]);  // Z(delta) = -1
  for (size_t t = 0; t < lat.free_vars.size(); ++t) {
    if (c[2 + t] == 0) continue;
    auto [b, j] = lat.free_vars[t];
    out.s -= Rat(c[2 + t]) * tsd.mu[b][j];
  }
  return out;
}

namespace {

// guard: products with window coordinates must stay inside __int128
const __int128 kDenGuard = (__int128)1 << 90;

__int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

TsdFixed TsdFixed::make(const Tsd& tsd) {
  TsdFixed f;
  __int128 d = tsd.z_re.den();
  for (const auto& branch : tsd.mu)
    for (const Rat& m : branch) {
      d = d / gcd128(d, m.den()) * m.den();
      if (d > kDenGuard) return f;  // ok stays false
    }
  f.den = d;
  f.z_re_num = (__int128)tsd.z_re.num() * (d / tsd.z_re.den());
  f.mu_num.resize(tsd.mu.size());
  for (size_t b = 0; b < tsd.mu.size(); ++b)
    for (const Rat& m : tsd.mu[b]) f.mu_num[b].push_back((__int128)m.num() * (d / m.den()));
  f.ok = true;
  return f;
}

__int128 TsdFixed::s_num(const Lattice& lat, const IVec& coords) const {
  __int128 s = -(__int128)coords[1] * den;
  for (size_t t = 0; t < lat.free_vars.size(); ++t) {
    if (coords[2 + t] == 0) continue;
    auto [b, j] = lat.free_vars[t];
    s -= (__int128)coords[2 + t] * mu_num[b][j];
  }
  return s;
}

namespace {

// 0 = positive real axis, 1 = open upper half plane, 2 = negative real axis
int phase_band(const Rat& re, const Rat& im) {
  if (im.sign() > 0) return 1;
  if (im.sign() < 0) throw toss_error("charge value below the real axis");
  if (re.is_zero()) throw zero_charge_error("central charge vanishes");
  return re.sign() > 0 ? 0 : 2;
}

}  // namespace

PhaseOrd cmp_phase(const SplitCharge& x, const SplitCharge& y, const Rat& z_re, const Rat& z_im) {
  Rat xre = x.r * z_re + x.s, xim = x.r * z_im;
  Rat yre = y.r * z_re + y.s, yim = y.r * z_im;
  int bx = phase_band(xre, xim);
  int by = phase_band(yre, yim);
  if (bx != by) return bx < by ? PhaseOrd::Lt : PhaseOrd::Gt;
  if (bx != 1) return PhaseOrd::Eq;
  // both interior: argument order is the sign of the cross product
  Rat cross = xre * yim - xim * yre;
  if (cross.sign() > 0) return PhaseOrd::Lt;
  if (cross.sign() < 0) return PhaseOrd::Gt;
  return PhaseOrd::Eq;
}

SplitCharge charge_from_coords(const Lattice& lat, const Tsd& tsd, const IVec& c) {
  SplitCharge out;
  out.r = Rat(c[0]);
  out.s = Rat(-c[1]);
  for (size_t t = 0; t < lat.free_vars.size(); ++t) {
    if (c[2 + t] == 0) continue;
    auto [b, j] = lat.free_vars[t];
    out.s -= Rat(c[2 + t]) * tsd.mu[b][j];
  }
  return out;
}

bool is_nondegenerate(const Lattice& lat, const Tsd& tsd) {
  if (tsd.z_im.sign() > 0) return true;
  // Im z = 0: along each residue class k0 mod p the value is the arithmetic
  // progression v - t*kappa*r, so a zero exists iff v/(kappa*r) is an integer.
  TsdFixed fx = TsdFixed::make(tsd);
  for (int u = 0; u < lat.n; ++u) {
    long long rk = lat.rank_of(lat.section_class[u]);
    for (int k0 = 0; k0 < lat.period; ++k0) {
      const IVec& coords = lat.residue_coords[k0][u];
      if (fx.ok) {
        // value*den = r*z_re_num + s_num; integrality of value/(kappa r)
        __int128 vnum = (__int128)coords[0] * fx.z_re_num + fx.s_num(lat, coords);
        __int128 step = (__int128)lat.kappa * rk * fx.den;
        if (vnum % step == 0) return false;
      } else {
        SplitCharge ch = charge_from_coords(lat, tsd, coords);
        Rat value = ch.r * tsd.z_re + ch.s;
        if ((value / (Rat(lat.kappa) * Rat(rk))).is_integer()) return false;
      }
    }
  }
  return true;
}

}  // namespace toss
