#include "ggl/density.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ggl/entropy.hpp"
#include "ggl/errors.hpp"
#include "ggl/readability.hpp"
#include "ggl/rng.hpp"

namespace ggl {

std::uint64_t relator_count(const DensityParams& params) {
  const double m = tuple_count(params.rank, params.n, params.d);
  if (m > static_cast<double>(params.relator_cap))
    throw cap_error("relator count " + std::to_string(m) + " exceeds cap " +
                    std::to_string(params.relator_cap));
  return static_cast<std::uint64_t>(m);
}

Presentation sample_presentation(const DensityParams& params) {
  check_rank(params.rank);
  if (params.n < 1) throw input_error("relator length must be at least 1");
  const std::uint64_t m = relator_count(params);
  std::vector<CyclicWord> relators;
  relators.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i)
    relators.push_back(sample_cyclic(params.n, params.rank, derive_seed(params.seed, i)));
  return make_presentation(params.rank, std::move(relators));
}

bool PresentationReport::all_pass() const {
  for (const auto& check : {cprime_ok, all_good, coverage_ok, no_proper_power_ok, no_primitive_ok})
    if (check && !*check) return false;
  return true;
}

PresentationReport run_suite(const Presentation& p, const SuiteConfig& suite) {
  PresentationReport report;
  report.params = suite;
  if (suite.cprime_lambda)
    report.cprime_ok = is_c_prime(p, *suite.cprime_lambda).satisfied;
  if (suite.goodness_mu) {
    if (!suite.goodness_L) throw input_error("goodness check needs both mu and L");
    ReadabilityParams params{*suite.goodness_mu, *suite.goodness_L, p.rank};
    bool ok = true;
    for (const CyclicWord& r : p.relators)
      if (!is_good(r, params)) {
        ok = false;
        break;
      }
    report.all_good = ok;
  }
  if (suite.coverage) {
    bool ok = true;
    for (const CyclicWord& r : p.relators)
      if (!covers_all_generators(r, p.rank)) {
        ok = false;
        break;
      }
    report.coverage_ok = ok;
  }
  if (suite.no_proper_power) {
    bool ok = true;
    for (const CyclicWord& r : p.relators)
      if (is_proper_power(r)) {
        ok = false;
        break;
      }
    report.no_proper_power_ok = ok;
  }
  if (suite.no_primitive) {
    bool ok = true;
    for (const CyclicWord& r : p.relators)
      if (is_primitive(r.word)) {
        ok = false;
        break;
      }
    report.no_primitive_ok = ok;
  }
  return report;
}

std::vector<SweepRow> density_sweep(int k, int n, const std::vector<double>& d_grid,
                                    int trials, const SuiteConfig& suite, std::uint64_t seed,
                                    std::uint64_t relator_cap, std::size_t grid_offset) {
  check_rank(k);
  if (trials < 1) throw input_error("trials must be at least 1");
  std::vector<SweepRow> rows;
  for (std::size_t index = 0; index < d_grid.size(); ++index) {
    const std::size_t di = index + grid_offset;
    const double d = d_grid[index];
    SweepRow row;
    row.d = d;
    row.m = tuple_count(k, n, d);
    row.trials = trials;
    const std::uint64_t sampled =
        static_cast<std::uint64_t>(std::min(row.m, static_cast<double>(relator_cap)));
    row.sampled = sampled;
    for (int trial = 0; trial < trials; ++trial) {
      const std::uint64_t trial_seed =
          derive_seed(seed, di * 1000003ULL + static_cast<std::uint64_t>(trial));
      std::vector<CyclicWord> relators;
      relators.reserve(sampled);
      for (std::uint64_t i = 0; i < sampled; ++i)
        relators.push_back(sample_cyclic(n, k, derive_seed(trial_seed, i)));
      Presentation p = make_presentation(k, std::move(relators));
      if (run_suite(p, suite).all_pass()) ++row.passes;
    }
    row.pass_fraction = static_cast<double>(row.passes) / trials;
    std::tie(row.ci_lo, row.ci_hi) =
        wilson_interval(static_cast<std::uint64_t>(row.passes), static_cast<std::uint64_t>(trials));
    rows.push_back(row);
  }
  return rows;
}

PipelineResult thm_ml_pipeline(int L, double mu, double nu,
                               const std::map<int, double>& d_small,
                               std::optional<double> d_small_default) {
  if (L < 2) throw input_error("L must be at least 2");
  if (!(mu > 0.0 && mu < 1.0)) throw input_error("mu must lie in (0,1)");
  if (!(nu > (mu + 1.0) / 2.0 && nu < 1.0))
    throw input_error("nu must lie in ((mu+1)/2, 1)");
  PipelineResult out;
  const LambdaBound lb = lambda_bound(mu, L);
  out.lambda = lb.value;
  out.lambda_within_sixth = lb.within_one_sixth;
  // least k > L with bound_lemma_ml(k, mu, L) <= nu, i.e.
  // ln(2k-1) >= ln(6L) / (2 nu - mu - 1)
  const double threshold = std::log(6.0 * L) / (2.0 * nu - mu - 1.0);
  int k = std::max(2, L + 1);
  while (std::log(2.0 * k - 1.0) < threshold) ++k;
  out.k0 = k;
  double d0 = 1.0 - nu;
  for (int small_k = 2; small_k < out.k0; ++small_k) {
    auto it = d_small.find(small_k);
    double dk;
    if (it != d_small.end()) {
      dk = it->second;
    } else if (d_small_default) {
      dk = *d_small_default;
    } else {
      throw input_error("missing density d(" + std::to_string(small_k) +
                        ") and no default supplied");
    }
    if (!(dk > 0.0 && dk < 1.0)) throw input_error("density entries must lie in (0,1)");
    d0 = std::min(d0, dk);
  }
  out.d0 = d0;
  return out;
}

}  // namespace ggl
