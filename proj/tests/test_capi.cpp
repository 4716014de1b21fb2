// Exercises the shared-library C API end to end: handles, error codes,
// string ownership, JSON/CSV payloads.

#include "ggl/ggl.h"

#include <cstdio>
#include <cstring>
#include <string>

static int failures = 0;

#define EXPECT(cond, msg)                                   \
  do {                                                      \
    if (!(cond)) {                                          \
      std::fprintf(stderr, "FAIL: %s\n", msg);              \
      ++failures;                                           \
    }                                                       \
  } while (0)

static std::string take(char* text) {
  std::string out = text ? text : "";
  ggl_string_free(text);
  return out;
}

int main() {
  char* text = nullptr;

  EXPECT(ggl_version() != nullptr, "version string");
  EXPECT(std::strcmp(ggl_status_name(GGL_OK), "ok") == 0, "status name");

  // counting
  EXPECT(ggl_count_cyclic(2, 3, &text) == GGL_OK, "count status");
  EXPECT(take(text) == "28", "count value 28");
  EXPECT(ggl_count_cyclic(2, 45, &text) == GGL_OK, "big count status");
  EXPECT(take(text) == "2954312706550833698644", "3^45 + 1 exact decimal");
  double ln_value = 0.0;
  EXPECT(ggl_count_cyclic_ln(2, 3, &ln_value) == GGL_OK, "count ln status");
  EXPECT(ln_value > 3.33 && ln_value < 3.34, "ln 28");

  // invalid rank -> invalid argument with a message
  EXPECT(ggl_count_cyclic(1, 3, &text) == GGL_ERROR_INVALID_ARGUMENT, "rank 1 rejected");
  EXPECT(std::strlen(ggl_last_error()) > 0, "error message populated");

  // word ops
  EXPECT(ggl_free_reduce(2, "abBA", &text) == GGL_OK, "free reduce status");
  EXPECT(take(text) == "ε", "abBA cancels to the empty word");
  EXPECT(ggl_cyclic_reduce(2, "Aba", &text) == GGL_OK, "cyclic reduce status");
  EXPECT(take(text) == "b", "Aba ~ b");
  EXPECT(ggl_free_reduce(2, "a?b", &text) == GGL_ERROR_INVALID_ARGUMENT, "junk letters rejected");

  // enumeration through the iterator handle
  ggl_word_iter* iter = nullptr;
  EXPECT(ggl_enumerate_cyclic(2, 2, &iter) == GGL_OK, "enumerate status");
  int words = 0;
  int rc;
  std::string first;
  while ((rc = ggl_word_iter_next(iter, &text)) == 1) {
    if (words == 0) first = text;
    ggl_string_free(text);
    ++words;
  }
  ggl_word_iter_free(iter);
  EXPECT(rc == 0, "iterator exhausted cleanly");
  EXPECT(words == 12, "12 words at n=2");
  EXPECT(first == "aa", "lexicographically first word");

  // sampling determinism
  EXPECT(ggl_sample_cyclic(2, 10, 42, &text) == GGL_OK, "sample status");
  std::string sample1 = take(text);
  EXPECT(ggl_sample_cyclic(2, 10, 42, &text) == GGL_OK, "sample again");
  EXPECT(take(text) == sample1, "same seed, same word");

  // readability verdict JSON
  EXPECT(ggl_readable(2, "ababababab", 0.3, 0, "exact", &text) == GGL_OK, "readable status");
  std::string verdict = take(text);
  EXPECT(verdict.find("\"readable\":true") != std::string::npos, "(ab)^5 readable at mu=0.3");
  EXPECT(verdict.find("\"witness\"") != std::string::npos, "witness present");
  EXPECT(ggl_readable(2, "ab", 0.3, 0, "quotient", &text) == GGL_OK, "short word status");
  EXPECT(take(text).find("\"readable\":false") != std::string::npos, "ab not readable");
  EXPECT(ggl_readable(2, "ab", 0.3, 0, "nonsense", &text) == GGL_ERROR_INVALID_ARGUMENT,
         "bad mode rejected");

  // goodness
  EXPECT(ggl_good(3, "ab", 0.3, 2, &text) == GGL_OK, "good status");
  EXPECT(take(text).find("\"good\":true") != std::string::npos, "ab good at mu=0.3");

  // presentation check
  EXPECT(ggl_check(2, "abAB", "{\"lambda\":0.3333,\"no_proper_power\":true}", &text) == GGL_OK,
         "check status");
  std::string report = take(text);
  EXPECT(report.find("\"satisfied\":true") != std::string::npos, "C'(1/3) satisfied");
  EXPECT(report.find("\"max_piece\":1") != std::string::npos, "max piece 1");
  EXPECT(ggl_check(2, "", "{}", &text) == GGL_ERROR_INVALID_ARGUMENT, "empty relators rejected");

  // entropy CSV: header plus one row per n
  EXPECT(ggl_entropy_csv(
             "{\"k\":2,\"predicate\":\"a-head\",\"n_min\":4,\"n_max\":6,\"mode\":\"exact\"}",
             &text) == GGL_OK,
         "entropy status");
  std::string csv = take(text);
  EXPECT(csv.rfind("n,gamma_bar,t_hat,ci_lo,ci_hi\n", 0) == 0, "entropy CSV header");
  EXPECT(std::count(csv.begin(), csv.end(), '\n') == 4, "three data rows");

  // entropy cap error surfaces as CAP_EXCEEDED
  EXPECT(ggl_entropy_csv("{\"k\":2,\"predicate\":\"good\",\"mu\":0.3,\"L\":2,\"n_min\":40,"
                         "\"n_max\":40,\"mode\":\"exact\",\"enum_cap\":1000}",
                         &text) == GGL_ERROR_CAP_EXCEEDED,
         "enumeration cap surfaces");

  // tuple fraction with decimal strings
  double fraction = 0.0;
  EXPECT(ggl_tuple_fraction(2, 4, 0.5, "11", "12", &fraction) == GGL_OK, "tuple fraction status");
  EXPECT(fraction > 0.45 && fraction < 0.47, "(11/12)^9");

  // density CSV
  EXPECT(ggl_density_csv("{\"k\":2,\"n\":8,\"d_grid\":[0.1],\"trials\":5,"
                         "\"suite\":{\"no_proper_power\":true}}",
                         &text) == GGL_OK,
         "density status");
  std::string density = take(text);
  EXPECT(density.rfind("d,pass_fraction,ci_lo,ci_hi,trials,m,sampled\n", 0) == 0,
         "density CSV header");

  // identical config, identical bytes
  EXPECT(ggl_density_csv("{\"k\":2,\"n\":8,\"d_grid\":[0.1],\"trials\":5,"
                         "\"suite\":{\"no_proper_power\":true}}",
                         &text) == GGL_OK,
         "density rerun");
  EXPECT(take(text) == density, "deterministic density output");

  // pipeline
  EXPECT(ggl_thm_ml_pipeline("{\"L\":2,\"mu\":0.2,\"nu\":0.9,\"d_small_default\":0.5}", &text) ==
             GGL_OK,
         "pipeline status");
  std::string pipeline = take(text);
  EXPECT(pipeline.find("\"k0\":32") != std::string::npos, "k0 = 32");

  // formulas
  double value = 0.0;
  EXPECT(ggl_formula("mu_max_ao", "{\"k\":2}", &value) == GGL_OK, "formula status");
  EXPECT(value > 0.16 && value < 0.162, "mu_max_ao(2)");
  EXPECT(ggl_formula("no_such", "{}", &value) == GGL_ERROR_INVALID_ARGUMENT, "unknown formula");

  // modular surface
  EXPECT(ggl_modular_count(4, &text) == GGL_OK, "modular count status");
  EXPECT(take(text) == "8", "modular count 8");
  EXPECT(ggl_modular_reduce("aab", 0, &text) == GGL_OK, "modular reduce status");
  EXPECT(take(text) == "b", "aab -> b");
  EXPECT(ggl_modular_inverse("ab", &text) == GGL_OK, "modular inverse status");
  EXPECT(take(text) == "Ba", "(ab)^-1 = Ba");
  EXPECT(ggl_modular_eta("abaB", &text) == GGL_OK, "eta status");
  EXPECT(take(text) == "aBab", "eta letterwise");
  EXPECT(ggl_modular_orbits(1, 2, "canonical", &text) == GGL_OK, "orbits status");
  EXPECT(take(text) == "2", "two orbits at t=2");
  EXPECT(ggl_modular_orbits(2, 2, "burnside", &text) == GGL_ERROR_UNSUPPORTED,
         "burnside limited to m=1");
  EXPECT(ggl_modular_bounds("{\"epsilon\":0.1,\"t\":100}", &text) == GGL_OK, "bounds status");
  EXPECT(take(text).find("\"valid\":true") != std::string::npos, "j bound valid");

  if (failures == 0) std::puts("capi_tests: all checks passed");
  return failures == 0 ? 0 : 1;
}
