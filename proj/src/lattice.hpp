#pragma once

#include <utility>
#include <vector>

#include "linear.hpp"
#include "quiver.hpp"
#include "weights.hpp"

namespace toss {

// Grothendieck-lattice data of D^b(coh P^1_w) in the computational basis: the
// simple modules of the path algebra of the section's opposite quiver, so
// classes of modules are dimension vectors.
//
// Conventions, pinned so the reference dimension-vector tables of the
// E types reproduce bit-exactly:
//   euler  E = I - Arrows(section^op), so <x,y> = x^T E y,
//   phi    = -E^{-1} E^T with [tau M] = phi [M],
//   tubes  phi [S_i^j] = [S_i^{j-1}] (superscripts mod w_i),
//   phi^p  = I + kappa * delta * r^T with kappa = -p(sum 1/w_i - l + 2).
//
// The charge basis { [P_0], delta, S_i^j (j < w_i) } is unimodular over Z;
// the rank functional r reads off the [P_0]-coefficient.
struct Lattice {
  WeightData w;
  StarQuiver section;
  int n = 0;  // rank of the lattice

  IMat euler;
  IMat cartan;  // columns are the section projective classes
  IMat phi, phi_inv;
  IVec delta;
  IVec rank_row;
  long long kappa = 0;
  int period = 0;

  std::vector<IVec> section_class;             // [X_u]
  std::vector<std::vector<IVec>> simple_class;  // [b][j] = [S_{b+1}^{j+1}], 0-based
  IVec p0_class;                               // [O(0)]

  IMat charge_basis, charge_basis_inv;          // columns: p0, delta, simples j < w_i
  std::vector<std::pair<int, int>> free_vars;   // (branch, j) 0-based, j < w_i - 1
  // charge coordinates of tau^k X_u for k in [0, period): one period decides
  // everything via phi^p = I + kappa delta r^T
  std::vector<std::vector<IVec>> residue_coords;

  int rank_of(const IVec& v) const;             // r(v), the [P_0]-coefficient
  IVec charge_coords(const IVec& v) const;      // coords in the charge basis
  IVec tau_shift(const IVec& v, long long k) const;  // phi^k v
  int free_var_index(int branch, int j) const;  // -1 if (branch, j) is eliminated
};

// Builds the full lattice for a weight datum (section, Coxeter data, tube
// simple classes, charge basis). All structural invariants are verified on
// construction; violations throw internal_error.
Lattice build_lattice(const WeightData& w);

// [S_i^j] with 1-based branch i and superscript j taken mod w_i.
IVec exceptional_simple_class(const Lattice& lat, int i, int j);

// Translation-quiver window: vertices (k, u) for k in [k_min, k_max], with
// mesh arrows (k,u)->(k,v) and (k+1,v)->(k,u) for every section arrow u->v.
struct ARWindow {
  struct Arrow {
    long long k_from;
    int u_from;
    long long k_to;
    int u_to;
  };
  long long k_min = 0, k_max = 0;
  std::vector<Arrow> arrows;
  size_t vertex_count(const Lattice& lat) const {
    return (size_t)(k_max - k_min + 1) * lat.section.vertices.size();
  }
};

ARWindow ar_window(const Lattice& lat, long long k_min, long long k_max);

}  // namespace toss
