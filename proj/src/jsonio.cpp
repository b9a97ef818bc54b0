#include "jsonio.hpp"

#include <json.hpp>

#include "errors.hpp"

namespace toss {

using nlohmann::json;

namespace {

Rat rat_field(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw parse_error(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw parse_error(where + ": expected a rational string like \"1/3\"");
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

Tsd parse_tsd(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("top-level value must be an object");
  if (!j.contains("weights") || !j["weights"].is_array())
    throw parse_error("missing \"weights\" array");
  std::vector<int> ws;
  for (const auto& x : j["weights"]) {
    if (!x.is_number_integer()) throw parse_error("weights must be integers");
    ws.push_back(x.get<int>());
  }
  WeightData w = [&] {
    try {
      return classify_weights(ws);
    } catch (const toss_error& e) {
      throw parse_error(e.what());
    }
  }();

  if (!j.contains("mu") || !j["mu"].is_object()) throw parse_error("missing \"mu\" object");
  std::vector<std::vector<Rat>> mu(w.branches());
  for (int b = 0; b < w.branches(); ++b) {
    std::string key = std::to_string(b + 1);
    if (!j["mu"].contains(key))
      throw parse_error("mu is missing branch \"" + key + "\" (type " + w.label() + ")");
    const auto& arr = j["mu"][key];
    if (!arr.is_array())
      throw parse_error("mu[\"" + key + "\"] must be an array of rational strings");
    for (size_t t = 0; t < arr.size(); ++t)
      mu[b].push_back(rat_field(arr[t], "mu[\"" + key + "\"][" + std::to_string(t) + "]"));
  }

  if (!j.contains("z") || !j["z"].is_object() || !j["z"].contains("re") || !j["z"].contains("im"))
    throw parse_error("missing \"z\" object with \"re\" and \"im\"");
  Rat re = rat_field(j["z"]["re"], "z.re");
  Rat im = rat_field(j["z"]["im"], "z.im");

  try {
    return Tsd::make(w, std::move(mu), re, im);
  } catch (const invalid_tsd_error& e) {
    throw parse_error(e.what());
  }
}

std::string print_tsd(const Tsd& tsd, bool pretty) {
  json j;
  j["weights"] = tsd.w.weights;
  json mu = json::object();
  for (size_t b = 0; b < tsd.mu.size(); ++b) {
    json arr = json::array();
    for (const auto& m : tsd.mu[b]) arr.push_back(m.str());
    mu[std::to_string(b + 1)] = arr;
  }
  j["mu"] = mu;
  j["z"] = {{"re", tsd.z_re.str()}, {"im", tsd.z_im.str()}};
  return dump(j, pretty);
}

std::string print_report(const Lattice& lat, const MembershipReport& rep, bool pretty) {
  json j;
  j["type"] = lat.w.label();
  j["member"] = rep.member;
  j["nondegenerate"] = rep.nondegenerate;
  json vs = json::array();
  for (const auto& v : rep.violations)
    vs.push_back({{"id", v.id}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}});
  j["violations"] = vs;
  return dump(j, pretty);
}

std::string print_heart(const HeartClass& h, bool pretty) {
  json j;
  j["kind"] = h.concentrated ? "concentrated" : "non_concentrated";
  if (h.concentrated) {
    json cut = json::object();
    for (const auto& [name, k] : h.cut) cut[name] = k;
    j["cut"] = cut;
    json q;
    q["vertices"] = h.induced.vertices;
    json arrows = json::array();
    for (auto& [u, v] : h.induced.arrows)
      arrows.push_back({h.induced.vertices[u], h.induced.vertices[v]});
    q["arrows"] = arrows;
    j["quiver"] = q;
  }
  return dump(j, pretty);
}

std::string print_flow(const Lattice& lat, const Tsd& base, const Tsd& target, int steps,
                       bool pretty) {
  json j;
  j["type"] = lat.w.label();
  json arr = json::array();
  bool all_member = true;
  for (int i = 0; i <= steps; ++i) {
    Rat t(i, steps);
    Tsd step = contraction_flow(base, target, t);
    MembershipReport rep = check_membership(lat, step);
    all_member = all_member && rep.member;
    arr.push_back({{"t", t.str()},
                   {"member", rep.member},
                   {"nondegenerate", rep.nondegenerate},
                   {"tsd", json::parse(print_tsd(step, false))}});
  }
  j["steps"] = arr;
  j["all_member"] = all_member;
  return dump(j, pretty);
}

std::string print_systems(const Lattice& lat, const std::vector<Inequality>& derived,
                          const std::vector<Inequality>& listed, const EquivResult& eq,
                          bool pretty) {
  json j;
  j["type"] = lat.w.label();
  json vars = json::array();
  for (size_t t = 0; t < lat.free_vars.size(); ++t) vars.push_back(var_name(lat, (int)t));
  j["variables"] = vars;
  j["sign_reading"] = "coupled";
  auto emit = [&](const std::vector<Inequality>& sys) {
    json arr = json::array();
    for (const auto& i : sys)
      arr.push_back({{"coeffs", i.canon.row},
                     {"pretty", pretty_ineq(lat, i.canon)},
                     {"provenance", i.provenance}});
    return arr;
  };
  j["derived"] = emit(derived);
  j["listed"] = emit(listed);
  j["equivalent"] = eq.equivalent;
  if (!eq.equivalent) {
    json w = json::array();
    for (const auto& x : eq.witness) w.push_back(x.str());
    j["witness"] = w;
    j["failing"] = eq.failing;
  }
  return dump(j, pretty);
}

}  // namespace toss
