/*
 * C interface to the sbundle library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an sb_status; on
 * failure sb_last_error() describes the problem for the calling thread.
 * Strings returned through char** are released with sb_string_free.
 */
#ifndef SBUNDLE_SBUNDLE_H
#define SBUNDLE_SBUNDLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SBUNDLE_BUILDING)
#    define SB_API __declspec(dllexport)
#  else
#    define SB_API __declspec(dllimport)
#  endif
#else
#  define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sb_complex sb_complex;
typedef struct sb_schedule sb_schedule;

typedef enum sb_status {
  SB_OK = 0,
  SB_EMPTY_INPUT = 1,
  SB_MIXED_CARDINALITY = 2,
  SB_NON_POSITIVE_LABEL = 3,
  SB_REPEATED_VERTEX = 4,
  SB_LENGTH_MISMATCH = 5,
  SB_NOT_A_FACE = 6,
  SB_NOT_A_FACET = 7,
  SB_VERTEX_IN_USE = 8,
  SB_UNKNOWN_VERTEX = 9,
  SB_DISCONNECTED = 10,
  SB_DISTANCE_VIOLATION = 11,
  SB_NON_SIMPLICIAL_QUOTIENT = 12,
  SB_INVALID_PAIRING = 13,
  SB_INFEASIBLE_VERTEX_COUNT = 14,
  SB_NOT_TWO_STACKS = 15,
  SB_PAIRING_NOT_ON_TOPS = 16,
  SB_ALREADY_ORIENTABLE = 17,
  SB_NOT_PSEUDOMANIFOLD = 18,
  SB_INVALID_MOVE = 19,
  SB_NOT_FLIPPABLE = 20,
  SB_SCHEDULE_INVALID = 21,
  SB_TARGET_OUT_OF_RANGE = 22,
  SB_COMPLEX_MISMATCH = 23,
  SB_PARSE_ERROR = 24,
  SB_OVERFLOW = 25,
  SB_INVALID_ARGUMENT = 26,
  SB_INVARIANT_VIOLATION = 27,
  SB_NULL_ARGUMENT = 100,
  SB_BUFFER_TOO_SMALL = 101,
  SB_INTERNAL = 102
} sb_status;

/* Name of a status, e.g. "DistanceViolation". Never NULL. */
SB_API const char* sb_status_name(sb_status status);

/* Message for the last failing call on this thread ("" if none). */
SB_API const char* sb_last_error(void);

SB_API void sb_string_free(char* s);

/* ---- complexes ---------------------------------------------------------- */

/* `labels` holds facet_count facets of facet_size labels each. */
SB_API sb_status sb_complex_from_facets(const int32_t* labels, size_t facet_count, size_t facet_size,
                                        sb_complex** out);
SB_API sb_status sb_complex_parse(const char* text, size_t length, sb_complex** out);
SB_API sb_status sb_complex_write(const sb_complex* c, char** out);
SB_API void sb_complex_free(sb_complex* c);

SB_API size_t sb_complex_facet_size(const sb_complex* c);
SB_API size_t sb_complex_vertex_count(const sb_complex* c);
SB_API size_t sb_complex_facet_count(const sb_complex* c);

/* Copies facet_count * facet_size labels in canonical order. */
SB_API sb_status sb_complex_facets(const sb_complex* c, int32_t* out, size_t capacity);

/* f_{-1}..f_{n-1}; *length receives n+1 even when capacity is too small. */
SB_API sb_status sb_f_vector(const sb_complex* c, int64_t* out, size_t capacity, size_t* length);
SB_API sb_status sb_betti_numbers(const sb_complex* c, int64_t* out, size_t capacity, size_t* length);
SB_API sb_status sb_euler_characteristic(const sb_complex* c, int64_t* out);
SB_API sb_status sb_is_orientable(const sb_complex* c, int* orientable);

/* Analysis report as JSON (json != 0) or plain text. */
SB_API sb_status sb_analyze(const sb_complex* c, int json, char** out);

/* ---- constructions ------------------------------------------------------ */

SB_API sb_status sb_build_stacked(int n, int steps, sb_complex** out);
SB_API sb_status sb_build_miss(int n, sb_complex** out);
SB_API sb_status sb_build_kuhnel(int n, sb_complex** out);

/* *swapped receives 1 when the swapped pairing was used; *warnings (optional)
 * receives one line per identified cross pair at distance < 3. */
SB_API sb_status sb_build_iss(int n, int f0, int orientable, sb_complex** out, int* swapped, char** warnings);

SB_API sb_status sb_double_cover(const sb_complex* c, sb_complex** out);

/* ---- edge filling ------------------------------------------------------- */

SB_API sb_status sb_fill_schedule(const sb_complex* c, int n, int f0, int swapped, sb_schedule** out);
SB_API size_t sb_schedule_length(const sb_schedule* s);
SB_API sb_status sb_schedule_write(const sb_schedule* s, char** out);
SB_API void sb_schedule_free(sb_schedule* s);
SB_API sb_status sb_fill_to(const sb_complex* c, const sb_schedule* s, int64_t target_f1, sb_complex** out);

/* *feasible = 0 when f0 is below the minimum for the bundle type. */
SB_API sb_status sb_feasible_region(int k, int f0, int orientable, int* feasible, int64_t* f1_min, int64_t* f1_max);

/* ---- isomorphism -------------------------------------------------------- */

/* On success with *found = 1, `pairs` holds vertex_count (source, target)
 * label pairs, sorted by source. */
SB_API sb_status sb_isomorphism(const sb_complex* a, const sb_complex* b, int* found, int32_t* pairs, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* SBUNDLE_SBUNDLE_H */
