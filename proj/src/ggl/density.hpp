#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ggl/cancellation.hpp"
#include "ggl/words.hpp"

namespace ggl {

inline constexpr std::uint64_t kDefaultRelatorCap = 1'000'000;

struct DensityParams {
  int rank = 2;
  int n = 0;        // relator length
  double d = 0.0;   // density in (0,1)
  std::uint64_t seed = 0;
  std::uint64_t relator_cap = kDefaultRelatorCap;
};

// m_n = max(1, floor((2k-1)^{dn})), clamped to uint64; throws cap_error when
// it exceeds the configured cap.
std::uint64_t relator_count(const DensityParams& params);

// Tuple of m_n independent uniform cyclically reduced words of length n
// (repetition allowed); deterministic in seed.
Presentation sample_presentation(const DensityParams& params);

struct SuiteConfig {
  std::optional<double> cprime_lambda;
  std::optional<double> goodness_mu;  // paired with goodness_L
  std::optional<int> goodness_L;
  bool coverage = false;
  bool no_proper_power = false;
  bool no_primitive = false;
};

struct PresentationReport {
  SuiteConfig params;  // the configuration the verdicts were computed under
  std::optional<bool> cprime_ok;
  std::optional<bool> all_good;
  std::optional<bool> coverage_ok;
  std::optional<bool> no_proper_power_ok;
  std::optional<bool> no_primitive_ok;

  bool all_pass() const;
};

PresentationReport run_suite(const Presentation& p, const SuiteConfig& suite);

struct SweepRow {
  double d = 0.0;
  double m = 0.0;             // requested relators at this density
  std::uint64_t sampled = 0;  // actually sampled per trial (cap applies)
  int trials = 0;
  int passes = 0;
  double pass_fraction = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

// For each grid density: fraction of trials whose report is all-true, with
// Wilson 95% interval. When m_n exceeds the relator cap each trial runs the
// suite on a cap-sized random sub-presentation; every suite check is
// antitone under adding relators, so sub-presentation failures certify
// failure of the full tuple, while passes are reported for the subsample.
// grid_offset shifts the per-trial seed stream, letting a sweep split into
// several calls reproduce the single-call output exactly.
std::vector<SweepRow> density_sweep(int k, int n, const std::vector<double>& d_grid,
                                    int trials, const SuiteConfig& suite, std::uint64_t seed,
                                    std::uint64_t relator_cap = kDefaultRelatorCap,
                                    std::size_t grid_offset = 0);

struct PipelineResult {
  int k0 = 0;        // least k with bound_lemma_ml(k, mu, L) <= nu (and k > L)
  double d0 = 0.0;   // min{d(2),...,d(k0-1), 1-nu}
  double lambda = 0.0;
  bool lambda_within_sixth = false;
};

// Numeric pipeline for the fixed-L freeness threshold: requires
// (mu+1)/2 < nu < 1; d_small supplies the small-k densities (a default may
// stand in for missing entries).
PipelineResult thm_ml_pipeline(int L, double mu, double nu,
                               const std::map<int, double>& d_small,
                               std::optional<double> d_small_default = std::nullopt);

}  // namespace ggl
