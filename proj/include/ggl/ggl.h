/*
 * ggl - generic group lab
 *
 * C interface to the counting, sampling and decision machinery for
 * cyclically reduced words, folded labelled graphs, small cancellation
 * presentations, density experiments and modular-group orbit counting.
 *
 * Conventions:
 *   - Every function returns a ggl_status; outputs go through out-params.
 *   - Strings returned through char** are allocated by the library and
 *     must be released with ggl_string_free.
 *   - ggl_last_error() describes the most recent failure on this thread.
 *   - Words use the text format `abAB...` for rank <= 26 (uppercase =
 *     inverse) or space-separated signed indices `1 2 -1 -2`; the empty
 *     word renders as a lone epsilon.
 *   - Structured experiment configuration travels as JSON text; tabular
 *     results come back as RFC-4180 CSV with a header row.
 */
#ifndef GGL_GGL_H
#define GGL_GGL_H

#include <stdint.h>

#if defined(_WIN32)
#define GGL_API __declspec(dllexport)
#else
#define GGL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ggl_status {
  GGL_OK = 0,
  GGL_ERROR_INVALID_ARGUMENT = 1, /* bad input: letters, ranges, malformed text */
  GGL_ERROR_CAP_EXCEEDED = 2,     /* an enumeration or relator cap would be passed */
  GGL_ERROR_UNSUPPORTED = 3,      /* valid request outside this build's limits */
  GGL_ERROR_INTERNAL = 4
} ggl_status;

GGL_API const char *ggl_version(void);
GGL_API const char *ggl_status_name(ggl_status status);
/* Message for the most recent failure on the calling thread. */
GGL_API const char *ggl_last_error(void);
GGL_API void ggl_string_free(char *text);

/* ---- words: reduction, exact counts, enumeration, sampling ---- */

GGL_API ggl_status ggl_free_reduce(int k, const char *word, char **out_word);
GGL_API ggl_status ggl_cyclic_reduce(int k, const char *word, char **out_word);

/* Exact |{cyclically reduced words of length n}| as a decimal string. */
GGL_API ggl_status ggl_count_cyclic(int k, int n, char **out_decimal);
GGL_API ggl_status ggl_count_cyclic_ln(int k, int n, double *out_ln);

typedef struct ggl_word_iter ggl_word_iter;
/*
 * Lexicographic stream over all cyclically reduced words of length n.
 * Refused (GGL_ERROR_CAP_EXCEEDED) when the count exceeds the enumeration
 * cap: 10^8 words, overridable via the GGL_ENUM_CAP environment variable.
 */
GGL_API ggl_status ggl_enumerate_cyclic(int k, int n, ggl_word_iter **out_iter);
/* 1: a word was produced; 0: exhausted; -1: error (see ggl_last_error). */
GGL_API int ggl_word_iter_next(ggl_word_iter *iter, char **out_word);
GGL_API void ggl_word_iter_free(ggl_word_iter *iter);

/* Uniform cyclically reduced word of length n; deterministic in seed. */
GGL_API ggl_status ggl_sample_cyclic(int k, int n, uint64_t seed, char **out_word);

/* ---- readability and goodness ---- */

/*
 * L <= 0 selects plain mu-readability; L >= 2 the (mu,L) variant.
 * mode: "quotient" or "exact". Verdict JSON:
 *   {"readable":bool,"mode":...,"budget":int,"witness":{...}|null}
 */
GGL_API ggl_status ggl_readable(int k, const char *word, double mu, int L,
                                const char *mode, char **out_json);
GGL_API ggl_status ggl_good(int k, const char *word, double mu, int L, char **out_json);

/* ---- presentation checks ---- */

/*
 * relators: comma-separated word texts. config JSON keys (all optional):
 *   "lambda": C'(lambda) piece check
 *   "coverage": every length-ceil(|r|/6) cyclic window meets all generators
 *   "no_proper_power", "primitive"
 * Report: per-relator results plus presentation-level verdicts.
 */
GGL_API ggl_status ggl_check(int k, const char *relators, const char *config_json,
                             char **out_json);

/* ---- entropy profiles ---- */

/*
 * config JSON:
 *   {"k":2,"predicate":"a-head","n_min":2,"n_max":12,"mode":"exact"|"mc",
 *    "samples":10000,"seed":12648430,"mu":...,"L":...,"lambda":...,
 *    "enum_cap":...}
 * predicates: non-mu-readable, non-muL-readable, good, c-prime-complement,
 * a-head. CSV columns: n,gamma_bar,t_hat,ci_lo,ci_hi.
 */
GGL_API ggl_status ggl_entropy_csv(const char *config_json, char **out_csv);

/* (gamma_P/gamma_C)^{m_n(d)} in the log domain; gammas are decimal strings. */
GGL_API ggl_status ggl_tuple_fraction(int k, int n, double d, const char *gamma_p,
                                      const char *gamma_c, double *out_fraction);

/* ---- density experiments ---- */

/*
 * config JSON:
 *   {"k":2,"n":100,"d_grid":[0.02,0.4],"trials":100,"seed":12648430,
 *    "relator_cap":1000000,
 *    "suite":{"cprime":0.1666,"goodness":{"mu":0.2,"L":2},
 *             "coverage":true,"no_proper_power":true,"no_primitive":false}}
 * CSV columns: d,pass_fraction,ci_lo,ci_hi,trials,m,sampled.
 */
GGL_API ggl_status ggl_density_csv(const char *config_json, char **out_csv);

/*
 * config JSON: {"L":2,"mu":0.2,"nu":0.9,"d_small":{"2":0.3,...},
 *               "d_small_default":0.5}
 * Result JSON: {"k0":...,"d0":...,"lambda":...,"lambda_within_sixth":...}
 */
GGL_API ggl_status ggl_thm_ml_pipeline(const char *config_json, char **out_json);

/* ---- closed-form evaluators ---- */

/*
 * name / params:
 *   "mu_max_ao"              {"k"}
 *   "mu_max_a1"              {"k","L"}
 *   "bound_lemma_ml"         {"k","mu","L"}
 *   "readable_count_bound_ln"{"n","k","mu","L", optional "ln_c"}
 *   "lambda_bound"           {"mu","L"}
 *   "bound_prop_read"        {"k"}
 *   "remark_h_bound"         {"k","L"}
 */
GGL_API ggl_status ggl_formula(const char *name, const char *params_json, double *out_value);

/* ---- modular group (Z_2 * Z_3) ---- */

GGL_API ggl_status ggl_modular_count(int n, char **out_decimal);
GGL_API ggl_status ggl_modular_reduce(const char *word, int cyclic, char **out_word);
GGL_API ggl_status ggl_modular_inverse(const char *word, char **out_word);
GGL_API ggl_status ggl_modular_eta(const char *word, char **out_word);
/* mode: "canonical" or "burnside" (the latter for m = 1). */
GGL_API ggl_status ggl_modular_orbits(int m, int t, const char *mode, char **out_decimal);
/*
 * config JSON selects the bound:
 *   {"epsilon":0.1,"t":100}  -> lower bound on log2 J_eps(t)
 *   {"k":2,"n":10}           -> log2 log2 of the subset upper bound
 *   {"m":1,"t":10}           -> K_m(t) asymptotic formula
 */
GGL_API ggl_status ggl_modular_bounds(const char *config_json, char **out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GGL_GGL_H */
