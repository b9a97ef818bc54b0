#pragma once

#include <map>
#include <string>
#include <vector>

#include "charge.hpp"
#include "lattice.hpp"

namespace toss {

// One instantiated closed-form inequality, sum(lhs) <= sum(rhs), with terms
// coeff * mu_i^j (1-based branch, superscript taken mod w_i on evaluation).
struct ListedTerm {
  int coeff;
  int branch;
  int j;
};

struct ListedInstance {
  std::string id;
  std::vector<ListedTerm> lhs, rhs;
};

// All instances of the type's inequality system: empty for A, eq. system D
// over j = 1..n-2 with both absolute-value representatives and both signs,
// and the E6/E7/E8 systems over their full cyclic index ranges with the
// coupled reading of +- (all +- in one instance take the same sign, -+ the
// opposite).
std::vector<ListedInstance> listed_instances(const WeightData& w);

Rat eval_terms(const Tsd& tsd, const std::vector<ListedTerm>& terms);

struct Violation {
  std::string id;
  Rat lhs, rhs;
};

struct MembershipReport {
  bool member = false;
  bool nondegenerate = false;
  std::vector<Violation> violations;
};

// Decides total semi-stability by the closed-form systems: member iff the
// datum is non-degenerate and every instance holds (non-strict).
MembershipReport check_membership(const Lattice& lat, const Tsd& tsd);

// Linear contraction toward a non-concentrated base point: returns
// (1-t)*base + t*target componentwise; flow(0) = base, flow(1) = target.
// Requires matching weights, Im z(base) > 0 and t in [0,1].
Tsd contraction_flow(const Tsd& base, const Tsd& target, const Rat& t);

struct HeartClass {
  bool concentrated = false;
  // only for concentrated hearts: the chosen shift per tau-orbit and the
  // induced section quiver Gamma' (whose opposite presents the heart)
  std::map<std::string, long long> cut;
  StarQuiver induced;
};

// Heart of the induced stability condition. Im z > 0 gives the coherent
// heart; Im z = 0 locates, per tau-orbit, the unique sign change of
// Z([tau^k X]) and returns the resulting slice. Requires a non-degenerate
// member; a broken slice on such input is an internal error.
HeartClass classify_heart(const Lattice& lat, const Tsd& tsd);

}  // namespace toss
