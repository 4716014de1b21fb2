#include "ggl/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ggl/cancellation.hpp"
#include "ggl/errors.hpp"
#include "ggl/readability.hpp"
#include "ggl/rng.hpp"

namespace ggl {

PredicateHandle always_true_predicate() {
  PredicateHandle p;
  p.name = "always-true";
  p.contains = [](const CyclicWord&) { return true; };
  p.exact_complement = [](int) { return BigUint{}; };
  return p;
}

PredicateHandle always_false_predicate(int k) {
  check_rank(k);
  PredicateHandle p;
  p.name = "always-false";
  p.contains = [](const CyclicWord&) { return false; };
  p.exact_complement = [k](int n) { return count_cyclic(n, k); };
  return p;
}

PredicateHandle a_head_predicate(int k) {
  check_rank(k);
  auto headed = [](const CyclicWord& w) {
    const int n = w.length();
    if (n == 0) return true;  // vacuous head
    const int run = (n + 1) / 2;
    const int head = w.word.letters[0];
    if (head != 1 && head != -1) return false;
    for (int i = 1; i < run; ++i)
      if (w.word.letters[i] != head) return false;
    return true;
  };
  PredicateHandle p;
  p.name = "a-head";
  p.contains = [headed](const CyclicWord& w) { return !headed(w); };
  p.exact_complement = [k](int n) {
    if (n < 0) throw input_error("length must be nonnegative");
    if (n == 0) return BigUint{1};
    const int run = (n + 1) / 2;
    // The two head letters are mutually exclusive for run >= 1.
    BigUint total = count_cyclic_accepted(n, k, LetterAutomaton::head_run(k, 1, run));
    total += count_cyclic_accepted(n, k, LetterAutomaton::head_run(k, -1, run));
    return total;
  };
  return p;
}

PredicateHandle non_mu_readable_predicate(int k, double mu) {
  ReadabilityParams params{mu, std::nullopt, k};
  params.validate();
  PredicateHandle p;
  p.name = "non-mu-readable";
  p.params = {{"mu", mu}};
  p.contains = [params](const CyclicWord& w) {
    return !is_mu_readable(w.word, params, ReadMode::quotient).readable;
  };
  return p;
}

PredicateHandle non_muL_readable_predicate(int k, double mu, int L) {
  ReadabilityParams params{mu, L, k};
  params.validate();
  PredicateHandle p;
  p.name = "non-muL-readable";
  p.params = {{"mu", mu}, {"L", static_cast<double>(L)}};
  p.contains = [params](const CyclicWord& w) { return !is_muL_readable(w.word, params).readable; };
  return p;
}

PredicateHandle good_predicate(int k, double mu, int L) {
  ReadabilityParams params{mu, L, k};
  params.validate();
  PredicateHandle p;
  p.name = "good";
  p.params = {{"mu", mu}, {"L", static_cast<double>(L)}};
  p.contains = [params](const CyclicWord& w) { return is_good(w, params); };
  return p;
}

PredicateHandle c_prime_predicate(int k, double lambda) {
  check_rank(k);
  if (!(lambda > 0.0 && lambda <= 1.0)) throw input_error("lambda must lie in (0,1]");
  PredicateHandle p;
  p.name = "c-prime";
  p.params = {{"lambda", lambda}};
  p.contains = [k, lambda](const CyclicWord& w) {
    return is_c_prime(make_presentation(k, {w}), lambda).satisfied;
  };
  return p;
}

ComplementCount count_complement(const PredicateHandle& pred, int n, int k, CountMode mode,
                                 std::uint64_t samples, std::uint64_t seed,
                                 std::uint64_t enum_cap) {
  check_rank(k);
  if (n < 1) throw input_error("length must be at least 1");
  ComplementCount out;
  const BigUint total = count_cyclic(n, k);
  if (mode == CountMode::exact) {
    out.exact = true;
    if (pred.has_exact_count()) {
      out.count = pred.exact_complement(n);
    } else {
      if (total > BigUint{enum_cap})
        throw cap_error("exact enumeration of " + total.to_decimal() +
                        " words exceeds cap " + std::to_string(enum_cap));
      std::uint64_t failures = 0;
      enumerate_cyclic(n, k, [&](const CyclicWord& w) {
        if (!pred.contains(w)) ++failures;
        return true;
      });
      out.count = BigUint{failures};
    }
    out.fraction = out.count.is_zero() ? 0.0 : std::exp(out.count.ln() - total.ln());
    out.ci_lo = out.ci_hi = out.fraction;
    return out;
  }
  if (samples == 0) throw input_error("monte carlo mode needs a positive sample count");
  out.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    CyclicWord w = sample_cyclic(n, k, derive_seed(seed, i));
    if (!pred.contains(w)) ++out.failures;
  }
  out.fraction = static_cast<double>(out.failures) / static_cast<double>(samples);
  std::tie(out.ci_lo, out.ci_hi) = wilson_interval(out.failures, samples);
  return out;
}

EntropyProfile entropy_profile(const PredicateHandle& pred, int k, int n_min, int n_max,
                               CountMode mode, std::uint64_t samples, std::uint64_t seed,
                               std::uint64_t enum_cap) {
  check_rank(k);
  if (n_min < 1 || n_max < n_min) throw input_error("need 1 <= n_min <= n_max");
  EntropyProfile profile;
  profile.k = k;
  profile.n_min = n_min;
  profile.n_max = n_max;
  const double log_q = std::log(2.0 * k - 1.0);
  for (int n = n_min; n <= n_max; ++n) {
    EntropySample sample;
    sample.n = n;
    sample.detail =
        count_complement(pred, n, k, mode, samples, derive_seed(seed, static_cast<std::uint64_t>(n)),
                         enum_cap);
    if (sample.detail.exact) profile.complement_counts.entries[n] = sample.detail.count;
    const bool zero = sample.detail.exact ? sample.detail.count.is_zero()
                                          : sample.detail.failures == 0;
    if (zero) {
      sample.zero_complement = true;
    } else {
      const double ln_gamma_bar = sample.detail.exact
                                      ? sample.detail.count.ln()
                                      : std::log(sample.detail.fraction) + count_cyclic_ln(n, k);
      sample.t_hat = ln_gamma_bar / (n * log_q);
      if (!profile.sup || sample.t_hat > *profile.sup) profile.sup = sample.t_hat;
      if (!profile.inf || sample.t_hat < *profile.inf) profile.inf = sample.t_hat;
    }
    profile.samples.push_back(std::move(sample));
  }
  return profile;
}

double tuple_count(int k, int n, double d) {
  check_rank(k);
  if (!(d > 0.0 && d < 1.0)) throw input_error("density must lie in (0,1)");
  if (n < 1) throw input_error("length must be at least 1");
  const double raw = std::exp(d * n * std::log(2.0 * k - 1.0));
  return std::max(1.0, std::floor(raw));
}

double tuple_fraction(int k, int n, double d, const BigUint& gamma_p, const BigUint& gamma_c) {
  if (gamma_c.is_zero()) throw input_error("gamma_C must be positive");
  if (gamma_p > gamma_c) throw input_error("gamma_P cannot exceed gamma_C");
  const double m = tuple_count(k, n, d);
  if (gamma_p == gamma_c) return 1.0;
  if (gamma_p.is_zero()) return 0.0;
  // ratio of the complement; stays accurate when it is tiny
  const BigUint gamma_bar = gamma_c - gamma_p;
  const double ratio = std::exp(gamma_bar.ln() - gamma_c.ln());
  return std::exp(m * std::log1p(-ratio));
}

double ao_fraction(const PredicateHandle& pred, int k, int m, int n, std::uint64_t enum_cap) {
  check_rank(k);
  if (m < 1) throw input_error("tuple size must be at least 1");
  if (n < 1) throw input_error("length bound must be at least 1");
  BigUint cumulative_total;
  BigUint cumulative_sat;
  std::uint64_t budget = enum_cap;
  for (int len = 1; len <= n; ++len) {
    const BigUint total = count_cyclic(len, k);
    if (BigUint{budget} < total)
      throw cap_error("cumulative enumeration exceeds cap " + std::to_string(enum_cap));
    budget -= total.as_u64();
    std::uint64_t sat = 0;
    enumerate_cyclic(len, k, [&](const CyclicWord& w) {
      if (pred.contains(w)) ++sat;
      return true;
    });
    cumulative_total += total;
    cumulative_sat += BigUint{sat};
  }
  if (cumulative_sat.is_zero()) return 0.0;
  const double single = std::exp(cumulative_sat.ln() - cumulative_total.ln());
  return std::pow(single, static_cast<double>(m));
}

double bound_prop_read(int k) {
  check_rank(k);
  return std::log(2.0 * k - 3.0) / std::log(2.0 * k - 1.0);
}

double remark_h_bound(int k, int L) {
  check_rank(k);
  if (L < 2) throw input_error("L must be at least 2");
  const double log_q = std::log(2.0 * k - 1.0);
  const double t = 3.0 * L * log_q;  // ln (2k-1)^{3L}
  // ln((2k-1)^{3L} - 1/2) = t + log1p(-0.5 e^{-t})
  const double adjusted = t + std::log1p(-0.5 * std::exp(-std::min(t, 700.0)));
  return adjusted / (3.0 * L * log_q);
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw input_error("wilson interval needs trials > 0");
  const double z = 1.959963984540054;  // 97.5th normal quantile
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (p + z2 / (2.0 * nt)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace ggl
