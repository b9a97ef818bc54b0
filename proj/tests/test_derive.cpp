#include <doctest.h>

#include <set>

#include "derive.hpp"
#include "sampler.hpp"

using namespace toss;

namespace {

LinearForm named_form(const Lattice& lat, std::vector<std::tuple<int, int, int>> terms) {
  LinearForm f = form_zero(lat);
  for (auto& [c, b, j] : terms) f = form_add(f, form_scale(Rat(c), mu_form(lat, b, j)));
  return f;
}

}  // namespace

TEST_CASE("symbolic charges: E6 rows against the z0-normalized table") {
  Lattice lat = build_lattice(classify_weights({2, 3, 3}));
  // Z([X1]) = 2z - a1 - (b1 - b3) - (c1 - c3); in z0-normalized shape this
  // is 3Z([X1]) = 2 z0 - (same form) with z0 = Z([X0]) = 3z - (same form)
  auto x0 = symbolic_charge(lat, 0, 0);
  auto x1 = symbolic_charge(lat, 1, 0);
  CHECK(x0.r == Rat(3));
  CHECK(x1.r == Rat(2));
  LinearForm a = named_form(lat, {{-1, 1, 1}, {-1, 2, 1}, {1, 2, 3}, {-1, 3, 1}, {1, 3, 3}});
  CHECK(canonicalize(x1.s).row == canonicalize(a).row);
  // the z0 identity has no z-part and reproduces the same mu-form
  LinearForm resid = form_add(form_scale(Rat(3), x1.s), form_scale(Rat(-2), x0.s));
  CHECK(Rat(3) * x1.r - Rat(2) * x0.r == Rat(0));
  CHECK(canonicalize(resid).row == canonicalize(a).row);
}

TEST_CASE("symbolic charges: E7 row 2[tau X4] against the class expansion") {
  Lattice lat = build_lattice(classify_weights({2, 3, 4}));
  auto tx4 = symbolic_charge(lat, 4, 1);
  // coefficients (1,1,1,-1,1,-1,-2,-1) over [X0, S1^1, S1^2, S2^1, S2^2, S3^1..3]:
  // 2 Z([tau X4]) = z0 - a1 - a2 + a... expressed through the charge split:
  // check against the direct class expansion instead of retyping the table
  IVec cls = lat.tau_shift(lat.section_class[4], 1);
  auto direct = symbolic_charge_of_class(lat, cls);
  CHECK(tx4.r == direct.r);
  CHECK(canonicalize(tx4.s).row == canonicalize(direct.s).row);
  // the tabulated multiplier: 2[tau X4] has z0-coefficient 1, so
  // r(2 tau X4) = r(X0) = 4 and r(tau X4) = 2
  CHECK(tx4.r == Rat(2));
}

TEST_CASE("symbolic charge progression in k") {
  Lattice lat = build_lattice(classify_weights({2, 2, 3}));
  for (int u : {0, 2, 4}) {
    auto base = symbolic_charge(lat, u, 1);
    auto far = symbolic_charge(lat, u, 1 + lat.period);
    CHECK(base.r == far.r);
    LinearForm diff = form_add(far.s, form_scale(Rat(-1), base.s));
    CHECK(diff.constant == Rat(-lat.kappa) * base.r);
    for (const auto& c : diff.coeffs) CHECK(c.is_zero());
  }
}

TEST_CASE("arrow inequalities reproduce the proof tables") {
  // D(n): arrow P0 -> X1 gives mu_2^2 - mu_1^1 <= mu_3^1
  Lattice d6 = build_lattice(classify_weights({2, 2, 4}));
  auto p0 = symbolic_charge(d6, d6.section.index_of("P0"), 0);
  auto x1 = symbolic_charge(d6, d6.section.index_of("X1"), 0);
  Inequality ineq = arrow_inequality(d6, p0, x1, "t");
  LinearForm want = named_form(d6, {{1, 3, 1}, {-1, 2, 2}, {1, 1, 1}});
  CHECK(ineq.canon.row == canonicalize(want).row);

  // E6: arrow X0 -> X1 gives a1 + (b1 - b3) + (c1 - c3) >= 0
  Lattice e6 = build_lattice(classify_weights({2, 3, 3}));
  Inequality e = arrow_inequality(e6, symbolic_charge(e6, 0, 0), symbolic_charge(e6, 1, 0), "t");
  LinearForm we =
      named_form(e6, {{1, 1, 1}, {1, 2, 1}, {-1, 2, 3}, {1, 3, 1}, {-1, 3, 3}});
  CHECK(e.canon.row == canonicalize(we).row);

  // identical charges cancel to the trivial form
  Inequality z = arrow_inequality(e6, symbolic_charge(e6, 2, 0), symbolic_charge(e6, 2, 0), "t");
  CHECK(z.canon.is_trivial_zero());

  // nonpositive rank is rejected
  SymbolicCharge badr{Rat(0), form_zero(e6)};
  CHECK_THROWS_AS(arrow_inequality(e6, badr, symbolic_charge(e6, 0, 0), "t"),
                  nonpositive_rank_error);
}

TEST_CASE("derive_region: type A is empty modulo positivity") {
  for (auto ws : std::vector<std::vector<int>>{{1, 1}, {3, 2}, {2, 3}, {4, 2}}) {
    Lattice lat = build_lattice(classify_weights(ws));
    CHECK(derive_region(lat).empty());
  }
}

TEST_CASE("derived and listed systems are identical canonical sets") {
  // stronger than polytope equivalence, and the reason the coupled sign
  // reading of the +- lines is the one frozen in listed_instances
  for (auto ws : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 3, 3}}) {
    WeightData w = classify_weights(ws);
    Lattice lat = build_lattice(w);
    auto der = derive_region(lat);
    auto lst = listed_region(lat);
    std::set<CanonIneq> ds, ls;
    for (auto& i : der) ds.insert(i.canon);
    for (auto& i : lst) ls.insert(i.canon);
    CAPTURE(w.label());
    CHECK(ds == ls);
  }
}

TEST_CASE("listed system sizes after canonical dedup") {
  auto count = [](std::vector<int> ws) {
    Lattice lat = build_lattice(classify_weights(std::move(ws)));
    return listed_region(lat).size();
  };
  CHECK(count({2, 2, 2}) == 8);
  CHECK(count({2, 2, 3}) == 12);
  CHECK(count({2, 2, 4}) == 16);
  CHECK(count({2, 3, 3}) == 54);
  CHECK(count({2, 3, 4}) == 126);
  CHECK(count({2, 3, 5}) == 325);
  // D4 instantiates 2 lines x 2 representatives x (n-2) x 2 signs before dedup
  CHECK(listed_instances(classify_weights({2, 2, 2})).size() == 16);
}

TEST_CASE("window periodicity: one period equals two") {
  Lattice lat = build_lattice(classify_weights({2, 2, 3}));
  std::set<CanonIneq> one, two;
  std::vector<SymbolicCharge> sym;
  for (long long k = 0; k <= 2 * lat.period; ++k)
    for (int u = 0; u < lat.n; ++u) sym.push_back(symbolic_charge(lat, u, k));
  auto at = [&](long long k, int u) { return sym[k * lat.n + u]; };
  for (long long k = 0; k < 2 * lat.period; ++k)
    for (auto& [u, v] : lat.section.arrows) {
      auto f1 = arrow_inequality(lat, at(k, u), at(k, v), "t").canon;
      auto f2 = arrow_inequality(lat, at(k + 1, v), at(k, u), "t").canon;
      for (auto* f : {&f1, &f2}) {
        if (f->is_trivial_zero()) continue;
        if (k < lat.period) one.insert(*f);
        two.insert(*f);
      }
    }
  CHECK(one == two);
}

TEST_CASE("polytope equivalence: identical, relaxed, and separated systems") {
  Lattice lat = build_lattice(classify_weights({2, 2, 3}));
  auto lst = listed_region(lat);
  CHECK(polytope_equivalent(lat, lst, lst).equivalent);
  CHECK(polytope_equivalent(lat, derive_region(lat), lst).equivalent);

  // removing one non-redundant instance must be detected, with a witness
  for (size_t drop = 0; drop < lst.size(); ++drop) {
    std::vector<Inequality> rest;
    for (size_t i = 0; i < lst.size(); ++i)
      if (i != drop) rest.push_back(lst[i]);
    std::vector<Rat> ce;
    if (implied_by(lat, lst[drop].canon, rest, &ce)) continue;  // redundant instance
    auto eq = polytope_equivalent(lat, lst, rest);
    REQUIRE_FALSE(eq.equivalent);
    // the witness satisfies the reduced system and ambient but not the full
    LinearForm f = form_of(lat, lst[drop].canon);
    Rat v = f.constant;
    for (size_t t = 0; t < eq.witness.size(); ++t) v += f.coeffs[t] * eq.witness[t];
    CHECK(v.sign() < 0);
    break;
  }
}

TEST_CASE("sampling soundness: derived region equals listed region pointwise") {
  for (auto ws : std::vector<std::vector<int>>{{2, 2, 4}, {2, 3, 3}}) {
    WeightData w = classify_weights(ws);
    Lattice lat = build_lattice(w);
    auto der = derive_region(lat);
    auto lst = listed_region(lat);
    TsdSampler sampler(w, 61);
    for (int i = 0; i < 400; ++i) {
      Tsd t = sampler.sample();
      auto sat = [&](const std::vector<Inequality>& sys) {
        for (const auto& q : sys) {
          LinearForm f = form_of(lat, q.canon);
          if (f.eval(t, lat).sign() < 0) return false;
        }
        return true;
      };
      CHECK(sat(der) == sat(lst));
    }
  }
}

TEST_CASE("pretty printer uses the a/b/c names") {
  Lattice lat = build_lattice(classify_weights({2, 3, 3}));
  auto lst = listed_region(lat);
  bool seen_abc = false;
  for (const auto& i : lst) {
    std::string s = pretty_ineq(lat, i.canon);
    if (s.find("a1") != std::string::npos || s.find("b1") != std::string::npos)
      seen_abc = true;
    CHECK(s.find("<=") != std::string::npos);
  }
  CHECK(seen_abc);
}

TEST_CASE("variable guard refuses oversized eliminations") {
  Lattice big = build_lattice(classify_weights({6, 6}));  // 10 free vars: allowed
  CHECK(ambient_positivity(big).size() == 12);
  CHECK_NOTHROW(polytope_equivalent(big, {}, {}));
}

TEST_CASE("sampling soundness at ten thousand points") {
  // pointwise agreement of the derived and listed regions, complementing the
  // exact FM equivalence
  int total = 0;
  for (auto ws : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 4}, {2, 3, 3}, {2, 3, 4}}) {
    WeightData w = classify_weights(ws);
    Lattice lat = build_lattice(w);
    auto der = derive_region(lat);
    auto lst = listed_region(lat);
    TsdSampler sampler(w, 71);
    for (int i = 0; i < 2500; ++i) {
      Tsd t = sampler.sample();
      auto sat = [&](const std::vector<Inequality>& sys) {
        for (const auto& q : sys)
          if (form_of(lat, q.canon).eval(t, lat).sign() < 0) return false;
        return true;
      };
      CHECK(sat(der) == sat(lst));
      ++total;
    }
  }
  CHECK(total == 10000);
}

TEST_CASE("E7: dropping a non-redundant instance separates the polytopes") {
  WeightData w = classify_weights({2, 3, 4});
  Lattice lat = build_lattice(w);
  auto lst = listed_region(lat);
  // a boundary sample is tight at exactly one half space, which is therefore
  // a facet of the region, i.e. a non-redundant instance
  TsdSampler sampler(w, 12);
  auto boundary = sampler.sample_boundary(lat);
  REQUIRE(boundary.has_value());
  size_t drop = lst.size();
  for (size_t i = 0; i < lst.size(); ++i)
    if (form_of(lat, lst[i].canon).eval(*boundary, lat).is_zero()) {
      drop = i;
      break;
    }
  REQUIRE(drop < lst.size());
  std::vector<Inequality> rest;
  for (size_t i = 0; i < lst.size(); ++i)
    if (i != drop) rest.push_back(lst[i]);
  auto eq = polytope_equivalent(lat, lst, rest);
  REQUIRE_FALSE(eq.equivalent);
  // witness satisfies the reduced system but violates the dropped instance
  LinearForm f = form_of(lat, lst[drop].canon);
  Rat v = f.constant;
  for (size_t t = 0; t < eq.witness.size(); ++t) v += f.coeffs[t] * eq.witness[t];
  CHECK(v.sign() < 0);
  for (const auto& q : rest) {
    LinearForm g = form_of(lat, q.canon);
    Rat gv = g.constant;
    for (size_t t = 0; t < eq.witness.size(); ++t) gv += g.coeffs[t] * eq.witness[t];
    CHECK(gv.sign() >= 0);
  }
}

TEST_CASE("variable guard refuses more than ten free variables") {
  Lattice big = build_lattice(classify_weights({7, 6}));  // 11 free vars
  CHECK_THROWS_AS(polytope_equivalent(big, {}, {}), too_many_variables_error);
}
