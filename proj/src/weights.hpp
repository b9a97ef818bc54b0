#pragma once

#include <string>
#include <vector>

#include "errors.hpp"

namespace toss {

enum class EuclideanType { A, D, E };

// Weight tuple of a tame weighted projective line together with the type of
// the associated Euclidean diagram.
//   A(p,q): weights (p,q), either may be 1 (Kronecker is A(1,1))
//   D(n):   weights (2,2,n-2), n >= 4
//   E(n):   weights (2,3,n-3), n in {6,7,8}
struct WeightData {
  EuclideanType type;
  std::vector<int> weights;  // canonical order (sorted for D/E, as given for A)
  int affine_n;              // the subscript: A -> p+q-1, D/E -> n
  int rank;                  // 2 + sum(w_i - 1) = vertex count of the diagram

  int branches() const { return (int)weights.size(); }
  int period() const;  // lcm of the weights
  std::string label() const;
};

// Classifies a weight tuple. Weight-1 entries are dropped first (they
// contribute no exceptional tubes); at most three branches may remain.
// Throws not_tame_error when sum(1/w_i) <= l - 2.
WeightData classify_weights(const std::vector<int>& ws);

// Parses CLI type tags: "A32", "A3,2", "A(3,2)", "D6", "E8".
WeightData weights_from_tag(const std::string& tag);

}  // namespace toss
