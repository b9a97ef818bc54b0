// toss: total semi-stability on tame weighted projective lines.
//
// Exit codes across all verdict subcommands: 0 accept / pass, 1 reject /
// fail, 2 input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "toss/toss.h"

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TsdHandle {
  toss_tsd* ptr = nullptr;
  ~TsdHandle() { toss_tsd_free(ptr); }
};

int load_tsd(const std::string& path, TsdHandle& out) {
  std::string text;
  try {
    text = read_input(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  char errbuf[512];
  if (toss_tsd_parse(text.c_str(), &out.ptr, errbuf, sizeof errbuf) != TOSS_OK) {
    std::cerr << "error: " << errbuf << "\n";
    return kExitError;
  }
  return kExitAccept;
}

// prints the report and maps its boolean verdict to the exit code
int emit_verdict(toss_status st, char* json, const char* verdict_key) {
  if (st != TOSS_OK) {
    std::cerr << "error: " << toss_last_error() << "\n";
    return kExitError;
  }
  std::cout << json << "\n";
  bool ok = nlohmann::json::parse(json).value(verdict_key, false);
  toss_string_free(json);
  return ok ? kExitAccept : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"total semi-stability checker for tame weighted projective lines"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--json", "compact JSON output (the default)");

  std::string input = "-", input_b;
  std::string type_tag;
  int periods = 1, steps = 10, count = 1;
  uint64_t seed = 0;
  bool on_boundary = false;

  auto* c_check = app.add_subcommand("check", "closed-form membership of a TSD document");
  c_check->add_option("input", input, "TSD JSON file (- for stdin)");

  auto* c_oracle = app.add_subcommand("oracle", "brute-force Condition-star verification");
  c_oracle->add_option("input", input, "TSD JSON file (- for stdin)");
  c_oracle->add_option("--periods", periods, "tau-periods of mesh to check (>= 1)")
      ->check(CLI::PositiveNumber);

  auto* c_derive = app.add_subcommand("derive", "re-derive the inequality system from the mesh");
  c_derive->add_option("--type", type_tag, "type tag, e.g. A32, D6, E8")->required();

  auto* c_flow = app.add_subcommand("flow", "linear contraction flow between two data");
  c_flow->add_option("base", input, "base TSD (needs Im z > 0)")->required();
  c_flow->add_option("target", input_b, "target TSD")->required();
  c_flow->add_option("--steps", steps, "number of steps (t = i/steps)")
      ->check(CLI::PositiveNumber);

  auto* c_heart = app.add_subcommand("heart", "heart classification of a TSD document");
  c_heart->add_option("input", input, "TSD JSON file (- for stdin)");

  auto* c_sample = app.add_subcommand("sample", "deterministic TSD sample stream");
  c_sample->add_option("--type", type_tag, "type tag, e.g. A32, D6, E8")->required();
  c_sample->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
  c_sample->add_option("--seed", seed, "RNG seed");
  c_sample->add_flag("--on-boundary", on_boundary, "make one listed inequality tight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  char* out = nullptr;
  if (*c_check) {
    TsdHandle t;
    if (int rc = load_tsd(input, t)) return rc;
    toss_status st = toss_check(t.ptr, pretty, &out);
    return emit_verdict(st, out, "member");
  }
  if (*c_oracle) {
    TsdHandle t;
    if (int rc = load_tsd(input, t)) return rc;
    toss_status st = toss_oracle(t.ptr, periods, pretty, &out);
    if (st == TOSS_EDOMAIN) {
      std::cerr << "error: " << toss_last_error() << "\n";
      return kExitError;
    }
    return emit_verdict(st, out, "member");
  }
  if (*c_derive) {
    toss_status st = toss_derive(type_tag.c_str(), pretty, &out);
    return emit_verdict(st, out, "equivalent");
  }
  if (*c_flow) {
    TsdHandle a, b;
    if (int rc = load_tsd(input, a)) return rc;
    if (int rc = load_tsd(input_b, b)) return rc;
    toss_status st = toss_flow(a.ptr, b.ptr, steps, pretty, &out);
    return emit_verdict(st, out, "all_member");
  }
  if (*c_heart) {
    TsdHandle t;
    if (int rc = load_tsd(input, t)) return rc;
    toss_status st = toss_heart(t.ptr, pretty, &out);
    if (st != TOSS_OK) {
      std::cerr << "error: " << toss_last_error() << "\n";
      return kExitError;
    }
    std::cout << out << "\n";
    toss_string_free(out);
    return kExitAccept;
  }
  if (*c_sample) {
    toss_status st = toss_sample(type_tag.c_str(), count, seed, on_boundary ? 1 : 0, &out);
    if (st != TOSS_OK) {
      std::cerr << "error: " << toss_last_error() << "\n";
      return kExitError;
    }
    std::cout << out;
    toss_string_free(out);
    return kExitAccept;
  }
  return kExitError;
}
