#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "region.hpp"
#include "sampler.hpp"

using namespace toss;

namespace {

Tsd shift_superscripts(const Tsd& t, int by) {
  // cyclically rotate every branch's partition entries by the same amount
  std::vector<std::vector<Rat>> mu(t.mu.size());
  for (size_t b = 0; b < t.mu.size(); ++b) {
    int wb = (int)t.mu[b].size();
    mu[b].resize(wb);
    for (int j = 0; j < wb; ++j) mu[b][(j + by % wb + wb) % wb] = t.mu[b][j];
  }
  return Tsd::make(t.w, std::move(mu), t.z_re, t.z_im);
}

}  // namespace

TEST_CASE("uniform data are members for every type, D existence fixture") {
  for (auto ws : std::vector<std::vector<int>>{{3, 2}, {2, 2, 2}, {2, 2, 4}, {2, 3, 3},
                                               {2, 3, 4}, {2, 3, 5}}) {
    WeightData w = classify_weights(ws);
    Lattice lat = build_lattice(w);
    auto rep = check_membership(lat, Tsd::uniform(w));
    CAPTURE(w.label());
    CHECK(rep.member);
    CHECK(rep.nondegenerate);
    CHECK(rep.violations.empty());
  }
  // thm:D existence: mu_1 = mu_2 = (1/2,1/2), arbitrary third partition
  WeightData d6 = classify_weights({2, 2, 4});
  Tsd t = Tsd::make(d6,
                    {{Rat(1, 2), Rat(1, 2)},
                     {Rat(1, 2), Rat(1, 2)},
                     {Rat(1, 10), Rat(2, 10), Rat(3, 10), Rat(4, 10)}},
                    Rat(0), Rat(1));
  CHECK(check_membership(build_lattice(d6), t).member);
}

TEST_CASE("type A membership is exactly nondegeneracy") {
  WeightData w = classify_weights({3, 2});
  Lattice lat = build_lattice(w);
  TsdSampler sampler(w, 21);
  for (int i = 0; i < 50; ++i) {
    Tsd t = i % 2 ? sampler.sample() : sampler.sample_real_z();
    auto rep = check_membership(lat, t);
    CHECK(rep.violations.empty());
    CHECK(rep.member == rep.nondegenerate);
  }
}

TEST_CASE("D4 violating fixture: |mu_1^1 - mu_2^1| = 4/5 > 1/2") {
  WeightData w = classify_weights({2, 2, 2});
  Lattice lat = build_lattice(w);
  Tsd t = Tsd::make(w,
                    {{Rat(9, 10), Rat(1, 10)}, {Rat(1, 10), Rat(9, 10)},
                     {Rat(1, 2), Rat(1, 2)}},
                    Rat(0), Rat(1));
  auto rep = check_membership(lat, t);
  CHECK_FALSE(rep.member);
  CHECK(rep.nondegenerate);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.lhs == Rat(4, 5) && v.rhs == Rat(1, 2)) found = true;
  CHECK(found);
  // cross-checked by the Condition-star oracle
  CHECK_FALSE(condition_star(lat, t).member);
  CHECK(cross_check(lat, t));
}

TEST_CASE("membership is invariant under the tau superscript shift") {
  for (auto ws : std::vector<std::vector<int>>{{2, 2, 3}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}}) {
    WeightData w = classify_weights(ws);
    Lattice lat = build_lattice(w);
    TsdSampler sampler(w, 7);
    for (int i = 0; i < 30; ++i) {
      Tsd t = sampler.sample();
      bool m = check_membership(lat, t).member;
      for (int by = 1; by < w.period(); ++by)
        CHECK(check_membership(lat, shift_superscripts(t, by)).member == m);
    }
  }
}

TEST_CASE("type D membership is invariant under swapping the weight-2 branches") {
  WeightData w = classify_weights({2, 2, 5});
  Lattice lat = build_lattice(w);
  TsdSampler sampler(w, 17);
  for (int i = 0; i < 40; ++i) {
    Tsd t = sampler.sample();
    Tsd s = Tsd::make(w, {t.mu[1], t.mu[0], t.mu[2]}, t.z_re, t.z_im);
    CHECK(check_membership(lat, t).member == check_membership(lat, s).member);
  }
}

TEST_CASE("eq:D absolute-value identity holds under the partition relation") {
  // |mu_1^1 - mu_2^2| = |mu_1^2 - mu_2^1| and |mu_1^1 - mu_2^1| = |mu_1^2 - mu_2^2|
  WeightData w = classify_weights({2, 2, 4});
  TsdSampler sampler(w, 23);
  for (int i = 0; i < 30; ++i) {
    Tsd t = sampler.sample();
    auto absr = [](const Rat& x) { return x.sign() < 0 ? -x : x; };
    CHECK(absr(t.mu[0][0] - t.mu[1][1]) == absr(t.mu[0][1] - t.mu[1][0]));
    CHECK(absr(t.mu[0][0] - t.mu[1][0]) == absr(t.mu[0][1] - t.mu[1][1]));
  }
}

TEST_CASE("contraction flow: endpoints, interior nondegeneracy, membership") {
  WeightData w = classify_weights({2, 3, 4});
  Lattice lat = build_lattice(w);
  TsdSampler sampler(w, 31);
  Tsd base = sampler.sample_member(lat);
  Tsd target = sampler.sample_member(lat);
  // endpoint identities are exact
  Tsd at0 = contraction_flow(base, target, Rat(0));
  Tsd at1 = contraction_flow(base, target, Rat(1));
  CHECK(at0.mu == base.mu);
  CHECK(at0.z_re == base.z_re);
  CHECK(at1.mu == target.mu);
  CHECK(at1.z_im == target.z_im);
  // interior: Im z(t) > 0 and membership is preserved
  for (int i = 0; i <= 12; ++i) {
    Rat t(i, 12);
    Tsd mid = contraction_flow(base, target, t);
    CHECK(check_membership(lat, mid).member);
    if (i < 12) CHECK(mid.z_im.sign() > 0);
  }
  // E7 random member pair at t = 1/3 is a member
  CHECK(check_membership(lat, contraction_flow(base, target, Rat(1, 3))).member);
}

TEST_CASE("contraction flow error cases") {
  WeightData w = classify_weights({2, 2, 2});
  WeightData w2 = classify_weights({2, 2, 3});
  Tsd a = Tsd::uniform(w, Rat(0), Rat(1));
  Tsd b = Tsd::uniform(w2, Rat(0), Rat(1));
  CHECK_THROWS_AS(contraction_flow(a, b, Rat(1, 2)), weight_mismatch_error);
  Tsd real_base = Tsd::uniform(w, Rat(1, 3), Rat(0));
  CHECK_THROWS_AS(contraction_flow(real_base, a, Rat(1, 2)), not_nonconcentrated_error);
  CHECK_THROWS(contraction_flow(a, a, Rat(3, 2)));
}

TEST_CASE("heart: Im z > 0 is the non-concentrated (coherent) case") {
  for (auto ws : std::vector<std::vector<int>>{{3, 2}, {2, 2, 4}, {2, 3, 5}}) {
    WeightData w = classify_weights(ws);
    Lattice lat = build_lattice(w);
    auto h = classify_heart(lat, Tsd::uniform(w));
    CHECK_FALSE(h.concentrated);
    CHECK(h.cut.empty());
  }
}

TEST_CASE("heart: concentrated cut for real z with valid section") {
  // note: uniform D4 with z = -5 is degenerate; -34/7 is not
  WeightData w = classify_weights({2, 2, 2});
  Lattice lat = build_lattice(w);
  CHECK_THROWS_AS(classify_heart(lat, Tsd::uniform(w, Rat(-5), Rat(0))), degenerate_error);
  Tsd t = Tsd::uniform(w, Rat(-34, 7), Rat(0));
  auto h = classify_heart(lat, t);
  CHECK(h.concentrated);
  CHECK(h.cut.size() == 5);
  // the induced quiver's underlying graph is the affine D4 diagram
  CHECK(underlying_graph_isomorphic(h.induced, lat.section));
  // cut is a slice: neighbouring orbits differ by at most one shift
  for (auto& [u, v] : lat.section.arrows) {
    long long ju = h.cut.at(lat.section.vertices[u]);
    long long jv = h.cut.at(lat.section.vertices[v]);
    CHECK((jv == ju || jv == ju + 1));
  }
}

TEST_CASE("heart cut matches the sign pattern of the orbit charges") {
  WeightData w = classify_weights({2, 3, 4});
  Lattice lat = build_lattice(w);
  Tsd t = Tsd::uniform(w, Rat(29, 11), Rat(0));
  REQUIRE(is_nondegenerate(lat, t));
  REQUIRE(check_membership(lat, t).member);
  auto h = classify_heart(lat, t);
  REQUIRE(h.concentrated);
  for (int u = 0; u < lat.n; ++u) {
    long long cut = h.cut.at(lat.section.vertices[u]);
    // negative value (phase 1) at and below the cut, positive above; the
    // sign is eventually constant in both directions (three periods each)
    for (long long k = cut - 3 * lat.period; k <= cut + 3 * lat.period; ++k) {
      SplitCharge c = central_charge(lat, t, lat.tau_shift(lat.section_class[u], k));
      Rat value = c.r * t.z_re + c.s;
      CHECK(value.sign() == (k <= cut ? -1 : 1));
    }
  }
}

TEST_CASE("heart requires membership") {
  WeightData w = classify_weights({2, 2, 2});
  Lattice lat = build_lattice(w);
  Tsd bad = Tsd::make(w,
                      {{Rat(9, 10), Rat(1, 10)}, {Rat(1, 10), Rat(9, 10)},
                       {Rat(1, 2), Rat(1, 2)}},
                      Rat(13, 9), Rat(0));
  if (is_nondegenerate(lat, bad)) CHECK_THROWS(classify_heart(lat, bad));
}
