#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "charge.hpp"
#include "lattice.hpp"
#include "region.hpp"

namespace toss {

// Deterministic seeded generator of totally semi-stable data. The stream
// depends only on the seed and the call sequence (no platform-dependent
// distributions).
class TsdSampler {
 public:
  TsdSampler(const WeightData& w, uint64_t seed);

  // random positive rational compositions of 1 per branch; Im z > 0
  Tsd sample();
  // Im z = 0 variant (z = nonzero rational, either sign)
  Tsd sample_real_z();
  // member datum: random sample contracted toward the uniform datum until
  // the closed-form systems accept it
  Tsd sample_member(const Lattice& lat);
  // member with one randomly chosen listed inequality tight; nullopt for
  // type A (its system is empty)
  std::optional<Tsd> sample_boundary(const Lattice& lat);

  uint64_t raw() { return next(); }

 private:
  uint64_t next();
  long long uniform_int(long long lo, long long hi);
  std::vector<std::vector<Rat>> random_mu(int max_part = 60);
  WeightData w_;
  uint64_t state_;
  struct BoundaryWalls;
  std::shared_ptr<BoundaryWalls> walls_;  // lazy, reused across samples
};

}  // namespace toss
