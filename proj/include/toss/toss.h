/* toss - total semi-stability on tame weighted projective lines.
 *
 * C interface over the C++ core: opaque handles, status codes, JSON strings.
 * Every returned string is heap-allocated and must be released with
 * toss_string_free(). Verdicts (member / pass / equivalent) live inside the
 * returned JSON; status codes only signal usage and input errors.
 */
#ifndef TOSS_H
#define TOSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TOSS_API __declspec(dllexport)
#else
#define TOSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct toss_tsd toss_tsd; /* a parsed totally semi-stable datum */

typedef enum {
  TOSS_OK = 0,
  TOSS_EPARSE = 1,   /* malformed document or type tag */
  TOSS_EINVAL = 2,   /* arguments violate a precondition */
  TOSS_EDOMAIN = 3,  /* valid input outside an operation's domain */
  TOSS_EINTERNAL = 4 /* invariant failure inside the library */
} toss_status;

TOSS_API const char* toss_status_name(toss_status st);

/* Parses a TSD document:
 *   {"weights":[2,2,2],
 *    "mu":{"1":["1/2","1/2"],"2":["1/2","1/2"],"3":["1/2","1/2"]},
 *    "z":{"re":"0","im":"1"}}
 * On error fills errbuf (if non-NULL) with a diagnostic. */
TOSS_API toss_status toss_tsd_parse(const char* json, toss_tsd** out, char* errbuf,
                                    size_t errbuf_len);
TOSS_API void toss_tsd_free(toss_tsd* tsd);

/* Serializes a handle back to its document (round-trips exactly). */
TOSS_API toss_status toss_tsd_print(const toss_tsd* tsd, int pretty, char** json_out);

/* Closed-form membership report:
 *   {"type":"D(6)","member":true,"nondegenerate":true,"violations":[...]} */
TOSS_API toss_status toss_check(const toss_tsd* tsd, int pretty, char** json_out);

/* Brute-force Condition-star verification over `periods` tau-periods of the
 * AR mesh (periods >= 1); same report shape with arrow provenance. */
TOSS_API toss_status toss_oracle(const toss_tsd* tsd, int periods, int pretty, char** json_out);

/* Heart classification: {"kind":"non_concentrated"} or a concentrated report
 * with the section cut and induced quiver. */
TOSS_API toss_status toss_heart(const toss_tsd* tsd, int pretty, char** json_out);

/* Linear contraction flow from `base` (needs Im z > 0) to `target`, sampled
 * at t = 0, 1/steps, ..., 1 with a membership report per step. */
TOSS_API toss_status toss_flow(const toss_tsd* base, const toss_tsd* target, int steps, int pretty,
                               char** json_out);

/* Re-derives the inequality system of a type tag ("A32", "D6", "E8") from
 * the AR mesh, lists the closed-form system, and reports exact polytope
 * equivalence. */
TOSS_API toss_status toss_derive(const char* type_tag, int pretty, char** json_out);

/* Deterministic sample stream (one TSD document per line). on_boundary != 0
 * makes one listed inequality tight per sample (invalid for type A). */
TOSS_API toss_status toss_sample(const char* type_tag, int count, uint64_t seed, int on_boundary,
                                 char** ndjson_out);

TOSS_API void toss_string_free(char* s);

/* Diagnostic for the most recent failing call on this thread. */
TOSS_API const char* toss_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* TOSS_H */
