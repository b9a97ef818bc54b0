#include "sampler.hpp"

#include "derive.hpp"
#include "errors.hpp"

namespace toss {

TsdSampler::TsdSampler(const WeightData& w, uint64_t seed) : w_(w), state_(seed) {
  next();  // decouple the stream from the raw seed value
}

// splitmix64: tiny, deterministic across platforms
uint64_t TsdSampler::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long long TsdSampler::uniform_int(long long lo, long long hi) {
  return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
}

std::vector<std::vector<Rat>> TsdSampler::random_mu(int max_part) {
  std::vector<std::vector<Rat>> mu(w_.branches());
  for (int b = 0; b < w_.branches(); ++b) {
    int wb = w_.weights[b];
    std::vector<long long> parts(wb);
    long long tot = 0;
    for (auto& p : parts) {
      p = uniform_int(1, max_part);
      tot += p;
    }
    for (long long p : parts) mu[b].push_back(Rat(p, tot));
  }
  return mu;
}

Tsd TsdSampler::sample() {
  auto mu = random_mu();
  Rat re(uniform_int(-12, 12), uniform_int(1, 4));
  Rat im(uniform_int(1, 12), uniform_int(1, 4));
  return Tsd::make(w_, std::move(mu), re, im);
}

Tsd TsdSampler::sample_real_z() {
  auto mu = random_mu();
  long long num = uniform_int(1, 12) * (next() % 2 ? 1 : -1);
  return Tsd::make(w_, std::move(mu), Rat(num, uniform_int(1, 4)), Rat(0));
}

Tsd TsdSampler::sample_member(const Lattice& lat) {
  if (lat.w.weights != w_.weights) throw weight_mismatch_error("sampler/lattice type mismatch");
  Tsd t = sample();
  if (check_membership(lat, t).member) return t;
  // contract toward the uniform datum; members are convex and the uniform
  // datum is interior, so a small enough step is always accepted
  Tsd uni = Tsd::uniform(w_, t.z_re, t.z_im);
  Rat s(1, 2);
  for (int iter = 0; iter < 14; ++iter, s = s * Rat(1, 2)) {
    Tsd mid = contraction_flow(uni, t, s);
    if (check_membership(lat, mid).member) return mid;
  }
  throw internal_error("sample_member failed to contract into the region");
}

struct TsdSampler::BoundaryWalls {
  std::vector<Inequality> sys;
  std::vector<CanonIneq> walls;  // sys first, then positivity
  std::vector<Rat> base;         // the uniform datum in free coordinates
};

std::optional<Tsd> TsdSampler::sample_boundary(const Lattice& lat) {
  if (lat.w.weights != w_.weights) throw weight_mismatch_error("sampler/lattice type mismatch");
  if (!walls_) {
    walls_ = std::make_shared<BoundaryWalls>();
    walls_->sys = listed_region(lat);
    for (const auto& i : walls_->sys) walls_->walls.push_back(i.canon);
    for (const auto& a : ambient_positivity(lat)) walls_->walls.push_back(a);
    walls_->base.resize(lat.free_vars.size());
    for (size_t t = 0; t < lat.free_vars.size(); ++t)
      walls_->base[t] = Rat(1, lat.w.weights[lat.free_vars[t].first]);
  }
  const std::vector<Inequality>& sys = walls_->sys;
  if (sys.empty()) return std::nullopt;
  const size_t nv = lat.free_vars.size();
  const std::vector<Rat>& base = walls_->base;
  const std::vector<CanonIneq>& walls = walls_->walls;

  auto value = [&](const CanonIneq& c, const std::vector<Rat>& x) {
    Rat v(c.row[0]);
    for (size_t t = 0; t < nv; ++t) v += Rat(c.row[t + 1]) * x[t];
    return v;
  };

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Rat> dir(nv);
    bool nonzero = false;
    for (auto& d : dir) {
      d = Rat(uniform_int(-9, 9));
      if (!d.is_zero()) nonzero = true;
    }
    if (!nonzero) continue;
    // exact first crossing along base + s*dir over every wall; the random
    // direction selects which listed inequality becomes tight
    Rat best_s;
    int best_idx = -1;
    bool tie = false;
    for (size_t widx = 0; widx < walls.size(); ++widx) {
      Rat slope(0);
      for (size_t t = 0; t < nv; ++t) slope += Rat(walls[widx].row[t + 1]) * dir[t];
      if (slope.sign() >= 0) continue;  // not decreasing along the ray
      Rat v0 = value(walls[widx], base);
      Rat s = -v0 / slope;
      if (s.sign() <= 0) continue;
      if (best_idx < 0 || s < best_s) {
        best_s = s;
        best_idx = (int)widx;
        tie = false;
      } else if (s == best_s) {
        tie = true;
      }
    }
    // the binding wall must be a listed instance (not mere positivity)
    if (best_idx < 0 || tie || best_idx >= (int)sys.size()) continue;
    size_t target = (size_t)best_idx;
    std::vector<Rat> pt(nv);
    for (size_t t = 0; t < nv; ++t) pt[t] = base[t] + best_s * dir[t];
    // rebuild the full partitions
    std::vector<std::vector<Rat>> mu(w_.branches());
    for (int b = 0; b < w_.branches(); ++b) {
      int wb = w_.weights[b];
      Rat acc(0);
      for (int j = 0; j + 1 < wb; ++j) {
        Rat m = pt[lat.free_var_index(b, j)];
        mu[b].push_back(m);
        acc += m;
      }
      mu[b].push_back(Rat(1) - acc);
    }
    Rat re(uniform_int(-12, 12), uniform_int(1, 4));
    Rat im(uniform_int(1, 12), uniform_int(1, 4));
    Tsd out = Tsd::make(w_, std::move(mu), re, im);
    // tight at exactly the chosen instance's half space, member everywhere
    if (!check_membership(lat, out).member) continue;
    if (value(sys[target].canon, pt).sign() != 0) continue;
    return out;
  }
  throw internal_error("sample_boundary exhausted its attempts");
}

}  // namespace toss
