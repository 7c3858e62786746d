/* SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 isprime-fast contributors
 *
 * C interface to the isprime_fast library.
 *
 * Every fallible function returns an ipf_status. On failure a description is
 * available from ipf_last_error() on the calling thread until the next call
 * into the library from that thread.
 *
 * A context carries configuration (heuristic constants, sieve ceiling,
 * forced path, parallelism). Use a context from one thread at a time;
 * distinct contexts may be used concurrently. Functions that take no
 * context are pure and thread-safe.
 */
#ifndef ISPRIME_FAST_H
#define ISPRIME_FAST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ISPRIME_FAST_BUILDING)
#    define IPF_API __declspec(dllexport)
#  else
#    define IPF_API __declspec(dllimport)
#  endif
#else
#  define IPF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ipf_status {
  IPF_OK = 0,
  IPF_ERR_NULL_ARGUMENT = 1,
  IPF_ERR_CONTRACT = 2,       /* precondition violated (e.g. a >= m) */
  IPF_ERR_INPUT_DOMAIN = 3,   /* negative / fractional / too large input */
  IPF_ERR_RESOURCE_LIMIT = 4, /* sieve beyond the configured ceiling */
  IPF_ERR_OVERFLOW = 5,       /* result does not fit in 64 bits */
  IPF_ERR_OUT_OF_MEMORY = 6,
  IPF_ERR_INTERNAL = 7
} ipf_status;

typedef enum ipf_path_kind {
  IPF_PATH_SMALL_SCALAR = 0,
  IPF_PATH_MEDIUM_SCALAR = 1,
  IPF_PATH_LARGE_SCALAR = 2,
  IPF_PATH_ARRAY_SQRT = 3,
  IPF_PATH_ARRAY_BINSEARCH = 4,
  IPF_PATH_NONE = 5 /* empty input */
} ipf_path_kind;

typedef enum ipf_force_path {
  IPF_FORCE_AUTO = 0,
  IPF_FORCE_SQRT = 1,
  IPF_FORCE_BINSEARCH = 2
} ipf_force_path;

typedef enum ipf_input_fault {
  IPF_FAULT_NONE = 0,
  IPF_FAULT_NEGATIVE = 1,
  IPF_FAULT_NON_INTEGER = 2,
  IPF_FAULT_OUT_OF_RANGE = 3,
  IPF_FAULT_NOT_A_NUMBER = 4
} ipf_input_fault;

/* Why a path was chosen. formula_value saturates at the int64 range. */
typedef struct ipf_decision {
  ipf_path_kind kind;
  uint64_t element_count;
  uint64_t survivor_count;
  uint64_t large_count;
  uint64_t max_value;
  int64_t formula_value;
  int large_regime;
  int forced;
  int fell_back;
} ipf_decision;

typedef struct ipf_heuristic {
  uint64_t regime_split;
  int64_t small_slope;
  int64_t small_intercept;
  int64_t large_slope;
  int64_t large_intercept;
} ipf_heuristic;

typedef struct ipf_context ipf_context;

IPF_API const char* ipf_version(void);
IPF_API const char* ipf_status_string(ipf_status status);
IPF_API const char* ipf_path_name(ipf_path_kind kind);
IPF_API const char* ipf_last_error(void);

/* ---- context ---------------------------------------------------------- */

IPF_API ipf_status ipf_context_create(ipf_context** out);
IPF_API void ipf_context_destroy(ipf_context* ctx);

IPF_API ipf_status ipf_get_heuristic(const ipf_context* ctx, ipf_heuristic* out);
IPF_API ipf_status ipf_set_heuristic(ipf_context* ctx, const ipf_heuristic* model);
IPF_API ipf_status ipf_set_sieve_ceiling(ipf_context* ctx, uint64_t ceiling);
IPF_API ipf_status ipf_get_sieve_ceiling(const ipf_context* ctx, uint64_t* out);
IPF_API ipf_status ipf_set_force_path(ipf_context* ctx, ipf_force_path force);
IPF_API ipf_status ipf_set_parallel(ipf_context* ctx, int enabled, unsigned threads);

/* ---- input validation ---------------------------------------------------
 * Convert user values to uint64. On IPF_ERR_INPUT_DOMAIN, *bad_index (if
 * non-null) receives the first offending position and *fault its kind. */

IPF_API ipf_status ipf_validate_tokens(const char* const* tokens, size_t n,
                                       uint64_t* out, size_t* bad_index,
                                       ipf_input_fault* fault);
IPF_API ipf_status ipf_validate_doubles(const double* values, size_t n,
                                        uint64_t* out, size_t* bad_index,
                                        ipf_input_fault* fault);

/* ---- primality ---------------------------------------------------------
 * mask receives n bytes, 1 for prime. decision may be null. */

IPF_API ipf_status ipf_is_prime(const ipf_context* ctx, const uint64_t* values,
                                size_t n, uint8_t* mask, ipf_decision* decision);
IPF_API ipf_status ipf_classify(const ipf_context* ctx, const uint64_t* values,
                                size_t n, ipf_decision* decision);
IPF_API int ipf_is_prime_u64(uint64_t n);

/* ---- arithmetic ---------------------------------------------------------- */

IPF_API ipf_status ipf_mod_add(uint64_t a, uint64_t b, uint64_t m, uint64_t* out);
IPF_API ipf_status ipf_mod_mul(uint64_t a, uint64_t b, uint64_t m, uint64_t* out);
IPF_API ipf_status ipf_mod_exp(uint64_t base, uint64_t e, uint64_t m, uint64_t* out);

/* Divisions made by sqrt-bounded prime trial division over 1..n. */
IPF_API ipf_status ipf_division_count(uint64_t n, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* ISPRIME_FAST_H */
