#pragma once

#include <string>

#include "charge.hpp"
#include "derive.hpp"
#include "region.hpp"

namespace toss {

// Wire format: rationals travel as "num/den" strings, never as floats.
//   {"weights":[2,3,3],
//    "mu":{"1":["1/2","1/2"],"2":["1/3","1/3","1/3"],"3":["1/3","1/3","1/3"]},
//    "z":{"re":"0","im":"1"}}
Tsd parse_tsd(const std::string& json_text);
std::string print_tsd(const Tsd& tsd, bool pretty = false);

std::string print_report(const Lattice& lat, const MembershipReport& rep, bool pretty = false);
std::string print_heart(const HeartClass& h, bool pretty = false);
// trajectory of the contraction flow at t = 0, 1/steps, ..., 1 with a
// membership report per step
std::string print_flow(const Lattice& lat, const Tsd& base, const Tsd& target, int steps,
                       bool pretty = false);
std::string print_systems(const Lattice& lat, const std::vector<Inequality>& derived,
                          const std::vector<Inequality>& listed, const EquivResult& eq,
                          bool pretty = false);

}  // namespace toss
