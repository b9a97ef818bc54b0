#pragma once

#include "region.hpp"

namespace toss {

// Phase monotonicity along every mesh arrow of the vector-bundle component
// (Condition star), checked on the window k in [0, periods*p]. One period
// already covers every arrow orbit; periods >= 2 is a belt-and-braces mode.
// Tube-internal arrows are skipped: all tube objects sit at phase 1.
// Violations are reported smallest shift first with "arrow@k" provenance.
// Requires a non-degenerate datum (zero_charge_error otherwise).
MembershipReport condition_star(const Lattice& lat, const Tsd& tsd, int periods = 1);

// The central correctness gate: condition_star (periods = 1) and
// check_membership must agree on every non-degenerate datum.
bool cross_check(const Lattice& lat, const Tsd& tsd);

// Precomputed window for bulk oracle runs over many data on one lattice:
// charge coordinates of every window vertex are tsd-independent.
struct OracleWindow {
  ARWindow window;
  std::vector<std::vector<IVec>> coords;  // [k][u] = charge coords of tau^k X_u
  int periods = 1;
};

OracleWindow make_oracle_window(const Lattice& lat, int periods = 1);
MembershipReport condition_star(const Lattice& lat, const Tsd& tsd, const OracleWindow& win);

}  // namespace toss
