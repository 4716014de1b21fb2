#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggl/bigint.hpp"
#include "ggl/words.hpp"

namespace ggl {

// Named, parameterized membership test on cyclically reduced words. The
// complement counter, when present, returns exact values (transfer matrix
// or closed form) without enumeration.
struct PredicateHandle {
  std::string name;
  std::map<std::string, double> params;
  std::function<bool(const CyclicWord&)> contains;
  std::function<BigUint(int n)> exact_complement;  // may be empty
  bool has_exact_count() const { return static_cast<bool>(exact_complement); }
};

PredicateHandle always_true_predicate();
PredicateHandle always_false_predicate(int k);  // complement = all of C_k

// Synthetic calibration predicate whose complement has entropy 1/2:
// the complement holds the words whose first ceil(n/2) letters all equal
// a_1 or all equal a_1^-1. Exact counts via the head-run automata.
PredicateHandle a_head_predicate(int k);

PredicateHandle non_mu_readable_predicate(int k, double mu);
PredicateHandle non_muL_readable_predicate(int k, double mu, int L);
PredicateHandle good_predicate(int k, double mu, int L);
// Words whose single-relator presentation satisfies C'(lambda); the
// complement being counted is the violators.
PredicateHandle c_prime_predicate(int k, double lambda);

enum class CountMode { exact, monte_carlo };

inline constexpr std::uint64_t kDefaultEnumCap = 100'000'000;  // words

struct ComplementCount {
  bool exact = false;
  BigUint count;            // exact mode (or MC point estimate scaled)
  double fraction = 0.0;    // complement fraction of C_k at length n
  double ci_lo = 0.0;       // Wilson 95% on the fraction; = fraction when exact
  double ci_hi = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
};

// gamma(n, complement of pred). Exact mode uses the predicate's exact
// counter when available, otherwise full enumeration (refused past the
// enumeration cap). Monte Carlo scales the failing fraction by
// count_cyclic with a Wilson 95% interval.
ComplementCount count_complement(const PredicateHandle& pred, int n, int k, CountMode mode,
                                 std::uint64_t samples = 0, std::uint64_t seed = 0,
                                 std::uint64_t enum_cap = kDefaultEnumCap);

struct EntropySample {
  int n = 0;
  bool zero_complement = false;  // sentinel: excluded from sup/inf
  double t_hat = 0.0;            // ln gamma_bar / (n ln(2k-1))
  ComplementCount detail;
};

// Finite-n samples with window sup/inf; these are finite-n estimates of the
// limsup/liminf, never extrapolated. In exact mode `complement_counts`
// collects the per-n gamma-bar values.
struct EntropyProfile {
  int k = 2;
  int n_min = 0;
  int n_max = 0;
  std::vector<EntropySample> samples;
  CountTable complement_counts;
  std::optional<double> sup;
  std::optional<double> inf;
};

EntropyProfile entropy_profile(const PredicateHandle& pred, int k, int n_min, int n_max,
                               CountMode mode, std::uint64_t samples = 0,
                               std::uint64_t seed = 0,
                               std::uint64_t enum_cap = kDefaultEnumCap);

// (gamma_P / gamma_C)^{m} with m = max(1, floor((2k-1)^{dn})), evaluated as
// exp(m ln(1 - gamma_bar/gamma_C)) in the log domain.
double tuple_fraction(int k, int n, double d, const BigUint& gamma_p, const BigUint& gamma_c);

// Number of relators at density d, as a double (it reaches 10^20 at desk
// scales where only its magnitude matters).
double tuple_count(int k, int n, double d);

// Exact fraction of m-tuples of nonempty cyclically reduced words with all
// |r_i| <= n whose entries all satisfy pred; per-word predicates factor as
// the m-th power of the cumulative single-word fraction.
double ao_fraction(const PredicateHandle& pred, int k, int m, int n,
                   std::uint64_t enum_cap = kDefaultEnumCap);

// Closed forms: log(2k-3)/log(2k-1) and the (**)-style readable-word bound
// log((2k-1)^{3L} - 1/2) / (3L log(2k-1)).
double bound_prop_read(int k);
double remark_h_bound(int k, int L);

// Wilson 95% score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

}  // namespace ggl
