#pragma once

#include <vector>

#include "lattice.hpp"
#include "rational.hpp"

namespace toss {

// A totally semi-stable datum: one partition of 1 into positive rationals per
// branch, plus z = Z([P_0]) in the closed upper half plane, z != 0. The
// normalization Z(delta) = -1 is implicit.
struct Tsd {
  WeightData w;
  std::vector<std::vector<Rat>> mu;  // mu[b][j], 0-based, size w_b
  Rat z_re, z_im;

  // validates the partition constraints and the z domain
  static Tsd make(const WeightData& w, std::vector<std::vector<Rat>> mu, Rat z_re, Rat z_im);

  static Tsd uniform(const WeightData& w, Rat z_re = Rat(0), Rat z_im = Rat(1));

  const Rat& mu_at(int branch, int j) const {  // 0-based branch, superscript mod w
    int wb = (int)mu[branch].size();
    return mu[branch][((j % wb) + wb) % wb];
  }
};

// Central-charge value split as Z = r*z + s with r the rank and s the
// mu-part; Im Z = r Im z, Re Z = r Re z + s.
struct SplitCharge {
  Rat r;
  Rat s;
};

SplitCharge central_charge(const Lattice& lat, const Tsd& tsd, const IVec& v);
// same split, but from precomputed charge-basis coordinates
SplitCharge charge_from_coords(const Lattice& lat, const Tsd& tsd, const IVec& coords);

// Integer view of a datum over one common denominator: bulk sign tests run
// in 128-bit integers without per-operation gcd reduction. ok = false when
// the denominators would overflow the guard; callers then take the exact
// rational path.
struct TsdFixed {
  bool ok = false;
  __int128 den = 1;
  __int128 z_re_num = 0;
  std::vector<std::vector<__int128>> mu_num;

  static TsdFixed make(const Tsd& tsd);
  // numerator of s(mu) over den for charge-basis coordinates
  __int128 s_num(const Lattice& lat, const IVec& coords) const;
};

enum class PhaseOrd { Lt, Eq, Gt };

// Exact comparison of phases of two nonzero charges whose values lie in the
// closed upper half plane. For values with Im > 0 the order is the sign of
// the integer-cleared cross product; real values sit at phase 0 (positive)
// or 1 (negative). Throws zero_charge_error on a vanishing value.
PhaseOrd cmp_phase(const SplitCharge& x, const SplitCharge& y, const Rat& z_re, const Rat& z_im);

// Z([tau^k X]) != 0 for every section vertex X and every k in Z. Decidable
// because Z([tau^{k+p} X]) = Z([tau^k X]) - kappa*r([X]): each residue class
// is an arithmetic progression, so a zero exists iff an exact divisibility
// holds. Im z > 0 short-circuits to true.
bool is_nondegenerate(const Lattice& lat, const Tsd& tsd);

}  // namespace toss
