/*
 * C interface to the hcyl library.
 *
 * Every function returns an hcyl_status. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Strings returned
 * through char** out-parameters are heap-allocated and must be released with
 * hcyl_string_free. On failure, hcyl_last_error() returns a message describing
 * the most recent error on the calling thread.
 */
#ifndef HCYL_H
#define HCYL_H

#include <stddef.h>
#include <stdint.h>

#if defined(HCYL_BUILDING_LIBRARY)
#define HCYL_API __attribute__((visibility("default")))
#else
#define HCYL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcyl_status {
  HCYL_OK = 0,
  HCYL_ERR_ZERO_POLYNOMIAL = 1,
  HCYL_ERR_NOT_UNIT_AT_ONE = 2,
  HCYL_ERR_POLE_AT_ZERO = 3,
  HCYL_ERR_NOT_PRIME = 4,
  HCYL_ERR_NOT_ONE_MOD_FOUR = 5,
  HCYL_ERR_UNSUPPORTED_STABILIZED = 6,
  HCYL_ERR_ALREADY_STABILIZED = 7,
  HCYL_ERR_SEARCH_EXHAUSTED = 8,
  HCYL_ERR_INVALID_ARGUMENT = 9,
  HCYL_ERR_PARSE = 10,
  HCYL_ERR_OVERFLOW = 11,
  HCYL_ERR_VERIFICATION_FAILED = 12,
  HCYL_ERR_SELFTEST_FAILED = 13,
  HCYL_ERR_INTERNAL = 99
} hcyl_status;

typedef struct hcyl_poly hcyl_poly;
typedef struct hcyl_seifert hcyl_seifert;
typedef struct hcyl_witness hcyl_witness;
typedef struct hcyl_certificate hcyl_certificate;

typedef struct hcyl_prime_power {
  uint64_t prime;
  uint32_t exponent;
} hcyl_prime_power;

HCYL_API const char* hcyl_version(void);
HCYL_API const char* hcyl_status_name(hcyl_status status);
HCYL_API const char* hcyl_last_error(void);
HCYL_API void hcyl_string_free(char* s);

/* Laurent polynomials. JSON form: {"lowest": int, "coeffs": [int, ...]}. */
HCYL_API hcyl_status hcyl_poly_from_json(const char* json, hcyl_poly** out);
HCYL_API hcyl_status hcyl_poly_to_json(const hcyl_poly* p, char** out);
HCYL_API hcyl_status hcyl_poly_to_string(const hcyl_poly* p, char** out);
HCYL_API hcyl_status hcyl_poly_add(const hcyl_poly* a, const hcyl_poly* b, hcyl_poly** out);
HCYL_API hcyl_status hcyl_poly_mul(const hcyl_poly* a, const hcyl_poly* b, hcyl_poly** out);
HCYL_API hcyl_status hcyl_poly_normalize(const hcyl_poly* a, hcyl_poly** out);
HCYL_API hcyl_status hcyl_poly_degree_span(const hcyl_poly* a, int64_t* out);
/* x and the result are decimal rationals "p" or "p/q". */
HCYL_API hcyl_status hcyl_poly_eval(const hcyl_poly* a, const char* x, char** out);
HCYL_API hcyl_status hcyl_poly_is_symmetric(const hcyl_poly* a, int* out);
HCYL_API void hcyl_poly_free(hcyl_poly* p);

/* Seifert matrices. JSON form: {"size": 2g, "entries": [[int, ...], ...]}. */
HCYL_API hcyl_status hcyl_seifert_from_json(const char* json, hcyl_seifert** out);
HCYL_API hcyl_status hcyl_seifert_pretzel(int64_t l, int64_t m, int64_t n, hcyl_seifert** out);
HCYL_API hcyl_status hcyl_seifert_to_json(const hcyl_seifert* v, char** out);
HCYL_API hcyl_status hcyl_seifert_genus(const hcyl_seifert* v, uint64_t* out);
HCYL_API hcyl_status hcyl_seifert_alexander(const hcyl_seifert* v, hcyl_poly** out);
HCYL_API hcyl_status hcyl_seifert_is_homology_product(const hcyl_seifert* v, int* out);
HCYL_API void hcyl_seifert_free(hcyl_seifert* v);

/* Pretzel knots P(a, b, c), given by odd strand values. */
HCYL_API hcyl_status hcyl_pretzel_alexander(int64_t a, int64_t b, int64_t c, hcyl_poly** out);
HCYL_API hcyl_status hcyl_pretzel_is_homologically_fibered(int64_t a, int64_t b, int64_t c, int* out);

/* Witness knots P_n(k). JSON form:
 * {"index": n, "stab": k, "pretzel": [a, b, c], "genus": g, "top_rank": r}. */
HCYL_API hcyl_status hcyl_witness_new(uint64_t index, hcyl_witness** out);
HCYL_API hcyl_status hcyl_witness_stabilize(const hcyl_witness* w, uint64_t k, hcyl_witness** out);
HCYL_API hcyl_status hcyl_witness_index(const hcyl_witness* w, uint64_t* out);
HCYL_API hcyl_status hcyl_witness_stab_count(const hcyl_witness* w, uint64_t* out);
HCYL_API hcyl_status hcyl_witness_genus(const hcyl_witness* w, uint64_t* out);
HCYL_API hcyl_status hcyl_witness_strands(const hcyl_witness* w, int64_t out[3]);
HCYL_API hcyl_status hcyl_witness_top_rank(const hcyl_witness* w, uint64_t* out);
/* Ranks in Alexander gradings 1 and 2; unstabilized witnesses only. */
HCYL_API hcyl_status hcyl_witness_bigraded(const hcyl_witness* w, uint64_t* grading1, uint64_t* grading2);
HCYL_API hcyl_status hcyl_witness_alexander(const hcyl_witness* w, hcyl_poly** out);
HCYL_API hcyl_status hcyl_witness_prime_component(const hcyl_witness* w, uint64_t p, uint32_t* out);
HCYL_API hcyl_status hcyl_witness_max_prime(const hcyl_witness* w, uint64_t* out);
HCYL_API hcyl_status hcyl_witness_to_json(const hcyl_witness* w, char** out);
HCYL_API void hcyl_witness_free(hcyl_witness* w);

/* Number theory. Array outputs: pass out = NULL to query the length in *count;
 * otherwise at most `capacity` entries are written and *count holds the full
 * length. */
HCYL_API hcyl_status hcyl_is_prime(uint64_t x, int* out);
HCYL_API hcyl_status hcyl_sqrt_minus_one(uint64_t p, uint64_t* out);
HCYL_API hcyl_status hcyl_witness_index_for_prime(uint64_t p, uint64_t* out);
HCYL_API hcyl_status hcyl_factorize(uint64_t x, hcyl_prime_power* out, size_t capacity, size_t* count);
HCYL_API hcyl_status hcyl_primes_one_mod_four(uint64_t limit, uint64_t* out, size_t capacity, size_t* count);

/* Independence certificates. JSON form:
 * {"witnesses": [...], "primes": [...], "matrix": [[...], ...]}. */
HCYL_API hcyl_status hcyl_certificate_build(size_t count, uint64_t search_limit, hcyl_certificate** out);
HCYL_API hcyl_status hcyl_certificate_from_json(const char* json, hcyl_certificate** out);
HCYL_API hcyl_status hcyl_certificate_to_json(const hcyl_certificate* c, char** out);
HCYL_API hcyl_status hcyl_certificate_to_csv(const hcyl_certificate* c, char** out);
HCYL_API hcyl_status hcyl_certificate_size(const hcyl_certificate* c, size_t* out);
/* *ok is 1 or 0; on 0, *reason (if non-NULL) receives the first violation. */
HCYL_API hcyl_status hcyl_certificate_verify(const hcyl_certificate* c, int* ok, char** reason);
HCYL_API void hcyl_certificate_free(hcyl_certificate* c);

/* Self test. rank_override replaces the rank formula when non-NULL.
 * report receives a JSON object {"passed": bool, "checks": [...]}.
 * Returns HCYL_ERR_SELFTEST_FAILED if any check fails. */
typedef uint64_t (*hcyl_rank_fn)(uint64_t index, uint64_t stab_count);
HCYL_API hcyl_status hcyl_selftest(int fast, hcyl_rank_fn rank_override, char** report);

#ifdef __cplusplus
}
#endif

#endif /* HCYL_H */
