// C API exercises: handles, status codes, JSON in/out. Kept free of the C++
// core headers on purpose: this is what an embedding client sees.
#include "toss/toss.h"

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                           \
    }                                                                     \
  } while (0)

static const char* kUniformD4 =
    "{\"weights\":[2,2,2],"
    "\"mu\":{\"1\":[\"1/2\",\"1/2\"],\"2\":[\"1/2\",\"1/2\"],\"3\":[\"1/2\",\"1/2\"]},"
    "\"z\":{\"re\":\"0\",\"im\":\"1\"}}";

static const char* kViolatingD4 =
    "{\"weights\":[2,2,2],"
    "\"mu\":{\"1\":[\"9/10\",\"1/10\"],\"2\":[\"1/10\",\"9/10\"],\"3\":[\"1/2\",\"1/2\"]},"
    "\"z\":{\"re\":\"0\",\"im\":\"1\"}}";

static bool contains(const char* hay, const char* needle) {
  return std::strstr(hay, needle) != nullptr;
}

int main() {
  char err[256];
  toss_tsd* tsd = nullptr;

  // parse errors carry diagnostics and a status
  EXPECT(toss_tsd_parse("{\"weights\":[2,3,6]}", &tsd, err, sizeof err) == TOSS_EPARSE);
  EXPECT(tsd == nullptr);
  EXPECT(std::strlen(err) > 0);

  EXPECT(toss_tsd_parse(kUniformD4, &tsd, err, sizeof err) == TOSS_OK);
  char* out = nullptr;

  EXPECT(toss_tsd_print(tsd, 0, &out) == TOSS_OK);
  EXPECT(contains(out, "\"weights\":[2,2,2]"));
  toss_string_free(out);

  EXPECT(toss_check(tsd, 0, &out) == TOSS_OK);
  EXPECT(contains(out, "\"member\":true"));
  toss_string_free(out);

  EXPECT(toss_oracle(tsd, 2, 0, &out) == TOSS_OK);
  EXPECT(contains(out, "\"member\":true"));
  toss_string_free(out);
  EXPECT(toss_oracle(tsd, 0, 0, &out) == TOSS_EINVAL);

  EXPECT(toss_heart(tsd, 0, &out) == TOSS_OK);
  EXPECT(contains(out, "non_concentrated"));
  toss_string_free(out);

  toss_tsd* bad = nullptr;
  EXPECT(toss_tsd_parse(kViolatingD4, &bad, err, sizeof err) == TOSS_OK);
  EXPECT(toss_check(bad, 0, &out) == TOSS_OK);
  EXPECT(contains(out, "\"member\":false"));
  EXPECT(contains(out, "4/5"));
  toss_string_free(out);

  EXPECT(toss_flow(tsd, bad, 4, 0, &out) == TOSS_OK);
  EXPECT(contains(out, "\"all_member\":false"));
  toss_string_free(out);

  EXPECT(toss_derive("D4", 0, &out) == TOSS_OK);
  EXPECT(contains(out, "\"equivalent\":true"));
  toss_string_free(out);
  EXPECT(toss_derive("E9", 0, &out) == TOSS_EPARSE);
  EXPECT(std::strlen(toss_last_error()) > 0);

  EXPECT(toss_sample("E7", 3, 42, 0, &out) == TOSS_OK);
  {
    // three NDJSON lines, each parseable
    std::string s = out;
    toss_string_free(out);
    int lines = 0;
    size_t pos = 0, nl;
    while ((nl = s.find('\n', pos)) != std::string::npos) {
      std::string line = s.substr(pos, nl - pos);
      toss_tsd* round = nullptr;
      EXPECT(toss_tsd_parse(line.c_str(), &round, err, sizeof err) == TOSS_OK);
      toss_tsd_free(round);
      ++lines;
      pos = nl + 1;
    }
    EXPECT(lines == 3);
  }
  // determinism across calls
  char *s1 = nullptr, *s2 = nullptr;
  EXPECT(toss_sample("D5", 3, 7, 1, &s1) == TOSS_OK);
  EXPECT(toss_sample("D5", 3, 7, 1, &s2) == TOSS_OK);
  EXPECT(std::strcmp(s1, s2) == 0);
  toss_string_free(s1);
  toss_string_free(s2);
  // boundary sampling of type A is a domain error
  EXPECT(toss_sample("A32", 1, 7, 1, &out) == TOSS_EDOMAIN);

  toss_tsd_free(tsd);
  toss_tsd_free(bad);
  std::puts("capi_tests: all assertions passed");
  return 0;
}
