#include "toss/toss.h"

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "derive.hpp"
#include "errors.hpp"
#include "jsonio.hpp"
#include "oracle.hpp"
#include "region.hpp"
#include "sampler.hpp"

using namespace toss;

struct toss_tsd {
  Tsd value;
};

namespace {

thread_local std::string g_last_error;

// lattices are immutable; share them per weight label
const Lattice& lattice_for(const WeightData& w) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Lattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w.label());
  if (it == cache.end())
    it = cache.emplace(w.label(), std::make_unique<Lattice>(build_lattice(w))).first;
  return *it->second;
}

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

toss_status classify_exception(const std::exception& e) {
  if (dynamic_cast<const parse_error*>(&e)) return TOSS_EPARSE;
  if (dynamic_cast<const not_tame_error*>(&e)) return TOSS_EPARSE;
  if (dynamic_cast<const invalid_tsd_error*>(&e)) return TOSS_EPARSE;
  if (dynamic_cast<const internal_error*>(&e)) return TOSS_EINTERNAL;
  if (dynamic_cast<const toss_error*>(&e)) return TOSS_EDOMAIN;
  return TOSS_EINTERNAL;
}

template <typename Fn>
toss_status guarded(Fn&& fn) {
  try {
    fn();
    return TOSS_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return classify_exception(e);
  }
}

}  // namespace

extern "C" {

const char* toss_status_name(toss_status st) {
  switch (st) {
    case TOSS_OK: return "ok";
    case TOSS_EPARSE: return "parse error";
    case TOSS_EINVAL: return "invalid argument";
    case TOSS_EDOMAIN: return "domain error";
    default: return "internal error";
  }
}

toss_status toss_tsd_parse(const char* json, toss_tsd** out, char* errbuf, size_t errbuf_len) {
  if (!json || !out) return TOSS_EINVAL;
  *out = nullptr;
  toss_status st = guarded([&] { *out = new toss_tsd{parse_tsd(json)}; });
  if (st != TOSS_OK && errbuf && errbuf_len > 0) {
    std::strncpy(errbuf, g_last_error.c_str(), errbuf_len - 1);
    errbuf[errbuf_len - 1] = '\0';
  }
  return st;
}

void toss_tsd_free(toss_tsd* tsd) { delete tsd; }

toss_status toss_tsd_print(const toss_tsd* tsd, int pretty, char** json_out) {
  if (!tsd || !json_out) return TOSS_EINVAL;
  return guarded([&] { *json_out = dup_string(print_tsd(tsd->value, pretty != 0)); });
}

toss_status toss_check(const toss_tsd* tsd, int pretty, char** json_out) {
  if (!tsd || !json_out) return TOSS_EINVAL;
  return guarded([&] {
    const Lattice& lat = lattice_for(tsd->value.w);
    *json_out = dup_string(print_report(lat, check_membership(lat, tsd->value), pretty != 0));
  });
}

toss_status toss_oracle(const toss_tsd* tsd, int periods, int pretty, char** json_out) {
  if (!tsd || !json_out || periods < 1) return TOSS_EINVAL;
  return guarded([&] {
    const Lattice& lat = lattice_for(tsd->value.w);
    *json_out = dup_string(print_report(lat, condition_star(lat, tsd->value, periods), pretty != 0));
  });
}

toss_status toss_heart(const toss_tsd* tsd, int pretty, char** json_out) {
  if (!tsd || !json_out) return TOSS_EINVAL;
  return guarded([&] {
    const Lattice& lat = lattice_for(tsd->value.w);
    *json_out = dup_string(print_heart(classify_heart(lat, tsd->value), pretty != 0));
  });
}

toss_status toss_flow(const toss_tsd* base, const toss_tsd* target, int steps, int pretty,
                      char** json_out) {
  if (!base || !target || !json_out || steps < 1) return TOSS_EINVAL;
  return guarded([&] {
    const Lattice& lat = lattice_for(base->value.w);
    *json_out = dup_string(print_flow(lat, base->value, target->value, steps, pretty != 0));
  });
}

toss_status toss_derive(const char* type_tag, int pretty, char** json_out) {
  if (!type_tag || !json_out) return TOSS_EINVAL;
  return guarded([&] {
    WeightData w = weights_from_tag(type_tag);
    const Lattice& lat = lattice_for(w);
    auto derived = derive_region(lat);
    auto listed = listed_region(lat);
    auto eq = polytope_equivalent(lat, derived, listed);
    *json_out = dup_string(print_systems(lat, derived, listed, eq, pretty != 0));
  });
}

toss_status toss_sample(const char* type_tag, int count, uint64_t seed, int on_boundary,
                        char** ndjson_out) {
  if (!type_tag || !ndjson_out || count < 1) return TOSS_EINVAL;
  return guarded([&] {
    WeightData w = weights_from_tag(type_tag);
    TsdSampler sampler(w, seed);
    std::string out;
    if (on_boundary) {
      const Lattice& lat = lattice_for(w);
      for (int i = 0; i < count; ++i) {
        auto t = sampler.sample_boundary(lat);
        if (!t) throw toss_error("type " + w.label() + " has no boundary inequalities");
        out += print_tsd(*t, false) + "\n";
      }
    } else {
      for (int i = 0; i < count; ++i) out += print_tsd(sampler.sample(), false) + "\n";
    }
    *ndjson_out = dup_string(out);
  });
}

void toss_string_free(char* s) { std::free(s); }

const char* toss_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
