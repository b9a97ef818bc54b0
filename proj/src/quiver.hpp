#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weights.hpp"

namespace toss {

// A finite quiver with named vertices. Parallel arrows are repeated entries
// (the Kronecker quiver A(1,1) has a double arrow).
struct StarQuiver {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> arrows;  // u -> v
  int source = -1;  // V_0 when meaningful
  int sink = -1;    // V_inf when meaningful

  int index_of(const std::string& name) const;
  bool is_acyclic() const;
};

// The canonical-algebra quiver: l chains V_0 -> V_i^1 -> ... -> V_inf of
// lengths w_i. The canonical relation is not modeled; only classes matter.
StarQuiver canonical_quiver(const WeightData& w);

// A slice of the vector-bundle AR component. For D/E these are the standard
// sections (P_0/X_u labels for D, X_0..X_{rank-1} for E); for type A the
// canonical quiver itself is hereditary and serves as the slice.
StarQuiver section_quiver(const WeightData& w);

// Undirected graph isomorphism on small quivers (multi-edges respected).
bool underlying_graph_isomorphic(const StarQuiver& a, const StarQuiver& b);

}  // namespace toss
