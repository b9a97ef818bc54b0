#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "rational.hpp"

namespace toss {

using BigInt = boost::multiprecision::cpp_int;

// One homogeneous-side constraint a.x + c >= 0 (or > 0 when strict), with
// integer data: row = [a_1..a_n, c].
struct FmRow {
  std::vector<BigInt> a;
  bool strict = false;
};

struct FmResult {
  bool feasible = false;
  std::vector<Rat> witness;  // a satisfying point when feasible
};

// Exact Fourier-Motzkin elimination over Q with strict/non-strict
// bookkeeping. A system is infeasible iff elimination produces 0 >= c with
// c < 0 or 0 > 0. Rows carry ancestor sets and Imbert's bound (a row derived
// after k eliminations depending on more than k+1 original rows is
// redundant) keeps growth in check. When feasible, a rational witness is
// recovered by back-substitution through the elimination stack.
FmResult fm_solve(const std::vector<FmRow>& rows, int nvars);

}  // namespace toss
