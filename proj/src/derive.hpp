#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fm.hpp"
#include "lattice.hpp"
#include "rational.hpp"
#include "region.hpp"

namespace toss {

// Affine-linear form in the free mu variables (mu_i^{w_i} eliminated via the
// partition relation): value = constant + sum coeffs[t] * mu(free_vars[t]).
struct LinearForm {
  Rat constant;
  std::vector<Rat> coeffs;  // dense over lat.free_vars

  Rat eval(const Tsd& tsd, const Lattice& lat) const;
};

LinearForm form_zero(const Lattice& lat);
LinearForm form_add(const LinearForm& a, const LinearForm& b);
LinearForm form_scale(const Rat& c, const LinearForm& f);
// mu_i^j as a form (1-based branch, superscript mod w_i)
LinearForm mu_form(const Lattice& lat, int branch, int j);

// Canonical shape of "form >= 0" (or "> 0"): integer row [const, coeffs...],
// gcd 1, denominators cleared. Positive rescaling identifies half spaces.
struct CanonIneq {
  std::vector<long long> row;
  bool strict = false;

  bool operator<(const CanonIneq& o) const {
    return row != o.row ? row < o.row : strict < o.strict;
  }
  bool operator==(const CanonIneq& o) const { return row == o.row && strict == o.strict; }
  bool is_trivial_zero() const;
};

CanonIneq canonicalize(const LinearForm& f, bool strict = false);
LinearForm form_of(const Lattice& lat, const CanonIneq& c);

struct Inequality {
  CanonIneq canon;
  std::string provenance;
};

// Charge of [tau^k X_vertex] split as r*z + s(mu), z = Z([P_0]). The rank
// coefficient r is an integer; z_0-normalized presentations (relative to
// Z([X_0])) differ from these splits by the positive factor r([X_0]).
struct SymbolicCharge {
  Rat r;
  LinearForm s;
};

SymbolicCharge symbolic_charge(const Lattice& lat, int vertex, long long k);
SymbolicCharge symbolic_charge_of_class(const Lattice& lat, const IVec& v);

// phi(x) <= phi(y) for Im z > 0 as the z-free form s_x r_y - s_y r_x >= 0.
// Requires positive rank coefficients on both sides.
Inequality arrow_inequality(const Lattice& lat, const SymbolicCharge& x, const SymbolicCharge& y,
                            const std::string& provenance);

// Arrow inequalities of one tau-period of the mesh, deduplicated by
// canonical form, with forms already implied by mu > 0 dropped. Empty for
// type A.
std::vector<Inequality> derive_region(const Lattice& lat);

// The closed-form systems in canonical shape (deduplicated).
std::vector<Inequality> listed_region(const Lattice& lat);

// The open-simplex ambient: every mu_i^j > 0, including the eliminated one.
std::vector<CanonIneq> ambient_positivity(const Lattice& lat);

struct EquivResult {
  bool equivalent = true;
  // when not equivalent: a rational point (free mu variables) satisfying one
  // system and ambient but violating the other, plus what failed
  std::vector<Rat> witness;
  std::string failing;
};

// Mutual implication of two inequality systems over the open partition
// simplices, by exact FM elimination (with a syntactic fast path for
// inequalities present verbatim on the other side). Guard: more than 10
// free variables is refused.
EquivResult polytope_equivalent(const Lattice& lat, const std::vector<Inequality>& a,
                                const std::vector<Inequality>& b);

// Is f >= 0 (or > 0) implied by the given system plus the open ambient?
bool implied_by(const Lattice& lat, const CanonIneq& f, const std::vector<Inequality>& system,
                std::vector<Rat>* counterexample = nullptr);

// Human-readable rendering with a = mu_1, b = mu_2, c = mu_3, negative
// terms moved to the smaller side: "a1 <= b2 + c2".
std::string pretty_ineq(const Lattice& lat, const CanonIneq& c);
std::string var_name(const Lattice& lat, int free_var);

}  // namespace toss
