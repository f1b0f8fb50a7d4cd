/*
 * C API for the solvrad shared library.
 *
 * Every fallible call returns sr_status; on failure sr_last_error() holds a
 * one-line description (thread-local). Objects come back through opaque
 * handles that must be released with the matching *_free. Strings returned
 * through char** out-parameters are heap-allocated JSON documents; release
 * them with sr_string_free.
 *
 * Verification calls additionally report an sr_verdict whose numeric values
 * match the CLI exit codes: 0 verified, 2 refuted, 3 budget-exhausted.
 */
#ifndef SOLVRAD_H
#define SOLVRAD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SR_API __declspec(dllexport)
#else
#define SR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sr_group_t sr_group;
typedef struct sr_lie_t sr_lie;

typedef enum sr_status {
  SR_OK = 0,
  SR_ERR_ARGUMENT = 1,
  SR_ERR_PARSE = 2,
  SR_ERR_DEGREE_MISMATCH = 3,
  SR_ERR_CAP_EXCEEDED = 4,
  SR_ERR_NOT_MEMBER = 5,
  SR_ERR_PRECONDITION = 6,
  SR_ERR_INCONSISTENT = 7,
  SR_ERR_IO = 8
} sr_status;

typedef enum sr_verdict {
  SR_VERIFIED = 0,
  SR_REFUTED = 2,
  SR_BUDGET_EXHAUSTED = 3
} sr_verdict;

SR_API const char* sr_version(void);
SR_API const char* sr_last_error(void);
SR_API void sr_string_free(char* s);

/* ---- permutation groups ---- */

/* Catalog grammar: S<n>, A<n>, C<n>, D<n>, PSL(2,<p>); products with "x";
 * wreath-swap suffix "wr2". */
SR_API sr_status sr_group_from_catalog(sr_group** out, const char* name);
/* Group file: first significant line "degree N", then one generator per
 * line in cycle notation; '#' starts a comment line. */
SR_API sr_status sr_group_from_file(sr_group** out, const char* path);
SR_API sr_status sr_group_from_text(sr_group** out, const char* text, const char* label);
SR_API void sr_group_free(sr_group* g);

SR_API sr_status sr_group_degree(const sr_group* g, uint32_t* out);
SR_API sr_status sr_group_order(const sr_group* g, uint64_t* out);
SR_API sr_status sr_group_is_solvable(const sr_group* g, int* out);
SR_API sr_status sr_group_derived_series_json(const sr_group* g, char** out_json);
SR_API sr_status sr_group_classes_json(const sr_group* g, uint64_t cap, char** out_json);

SR_API sr_status sr_catalog_list_json(char** out_json);

/* ---- solvable radical ---- */

SR_API sr_status sr_radical_elements_json(const sr_group* g, uint64_t cap, char** out_json);
SR_API sr_status sr_radical_oracle_json(const sr_group* g, uint64_t cap, char** out_json);
SR_API sr_status sr_radical_thompson_json(const sr_group* g, uint64_t cap, char** out_json,
                                          sr_verdict* verdict);

/* ---- theorem checks ---- */

SR_API sr_status sr_verify_onehalf(const sr_group* g, uint64_t cap, char** out_json,
                                   sr_verdict* verdict);
SR_API sr_status sr_verify_bgk(const sr_group* g, uint64_t cap, char** out_json,
                               sr_verdict* verdict);
SR_API sr_status sr_verify_pairs(const sr_group* g, uint64_t cap, char** out_json,
                                 sr_verdict* verdict);
/* y in cycle notation. n_seed may be NULL: the subgroup defaults to the
 * first minimal normal subgroup compatible with the hypotheses; otherwise
 * it is the normal closure of the given element. */
SR_API sr_status sr_verify_lemma34(const sr_group* g, const char* y_cycles, const char* n_seed,
                                   uint64_t cap, uint64_t trials, uint64_t seed, char** out_json,
                                   sr_verdict* verdict);
SR_API sr_status sr_verify_triple(const sr_group* g, const char* x1, const char* x2,
                                  const char* x3, uint64_t cap, char** out_json,
                                  sr_verdict* verdict);

/* ---- Lie algebras over Q ---- */

/* Catalog grammar: abelian<n>, nonabelian2, h3, sl2, gl2, borel2; direct
 * sums with "+". */
SR_API sr_status sr_lie_from_catalog(sr_lie** out, const char* name);
SR_API sr_status sr_lie_from_file(sr_lie** out, const char* path);
SR_API sr_status sr_lie_from_text(sr_lie** out, const char* json_text, const char* label);
SR_API void sr_lie_free(sr_lie* l);

SR_API sr_status sr_lie_dim(const sr_lie* l, uint32_t* out);
SR_API sr_status sr_lie_radical_json(const sr_lie* l, char** out_json);
/* Elements are comma-separated rationals ("1,-1/2,0"). n_elements == 0
 * tests the whole algebra. */
SR_API sr_status sr_lie_solvable_json(const sr_lie* l, const char* const* elements,
                                      size_t n_elements, char** out_json);
/* v_1..v_nmax plus the first vanishing index. */
SR_API sr_status sr_lie_vword_json(const sr_lie* l, const char* x, const char* y, uint32_t nmax,
                                   char** out_json);
SR_API sr_status sr_lie_pairs_json(const sr_lie* l, const char* const* xs, size_t n_xs,
                                   uint32_t samples, uint64_t seed, char** out_json,
                                   sr_verdict* verdict);

#ifdef __cplusplus
}
#endif

#endif /* SOLVRAD_H */
