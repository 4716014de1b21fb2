#include <doctest.h>

#include <cmath>
#include <map>

#include "ggl/density.hpp"
#include "ggl/entropy.hpp"
#include "ggl/errors.hpp"
#include "ggl/rng.hpp"

using namespace ggl;

TEST_CASE("relator counts at density d") {
  // k=2, d=0.5, n=10 -> 3^5 = 243
  CHECK(relator_count(DensityParams{2, 10, 0.5, 0}) == 243);
  // floor clamps to a minimum of one relator
  CHECK(relator_count(DensityParams{2, 10, 0.01, 0}) == 1);
  DensityParams over{2, 100, 0.4, 0};
  over.relator_cap = 1000;
  CHECK_THROWS_AS(relator_count(over), cap_error);
}

TEST_CASE("sample_presentation is deterministic with uniform marginals") {
  DensityParams params{2, 10, 0.5, 12345};
  Presentation p1 = sample_presentation(params);
  Presentation p2 = sample_presentation(params);
  CHECK(p1.relators.size() == 243);
  REQUIRE(p1.relators.size() == p2.relators.size());
  for (std::size_t i = 0; i < p1.relators.size(); ++i)
    CHECK(p1.relators[i] == p2.relators[i]);

  // coordinate marginals: chi-square over the 28 words at n = 3
  std::map<Letters, int> freq;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    DensityParams small{2, 3, 0.5, derive_seed(888, seed)};
    for (const CyclicWord& r : sample_presentation(small).relators) {
      ++freq[r.word.letters];
      ++total;
    }
  }
  CHECK(freq.size() == 28);
  const double expected = total / 28.0;
  double chi2 = 0.0;
  for (const auto& [letters, count] : freq)
    chi2 += (count - expected) * (count - expected) / expected;
  CHECK(chi2 < 55.5);  // chi-square_{27} at p = 0.001
}

TEST_CASE("run_suite pinned single checks") {
  SuiteConfig cprime_only;
  cprime_only.cprime_lambda = 1.0 / 3.0;
  Presentation comm = make_presentation(2, {make_cyclic(2, {1, 2, -1, -2})});
  PresentationReport r1 = run_suite(comm, cprime_only);
  REQUIRE(r1.cprime_ok.has_value());
  CHECK(*r1.cprime_ok);
  CHECK(r1.all_pass());

  SuiteConfig powers_only;
  powers_only.no_proper_power = true;
  Presentation abab = make_presentation(2, {make_cyclic(2, {1, 2, 1, 2})});
  PresentationReport r2 = run_suite(abab, powers_only);
  REQUIRE(r2.no_proper_power_ok.has_value());
  CHECK(!*r2.no_proper_power_ok);
  CHECK(!r2.all_pass());

  PresentationReport empty = run_suite(comm, SuiteConfig{});
  CHECK(empty.all_pass());
  CHECK(!empty.cprime_ok.has_value());
}

TEST_CASE("run_suite is reproducible on a stored presentation") {
  Presentation p = sample_presentation(DensityParams{2, 12, 0.3, 99});
  SuiteConfig suite;
  suite.cprime_lambda = 1.0 / 6.0;
  suite.no_proper_power = true;
  suite.coverage = true;
  PresentationReport a = run_suite(p, suite);
  PresentationReport b = run_suite(p, suite);
  CHECK(a.cprime_ok == b.cprime_ok);
  CHECK(a.no_proper_power_ok == b.no_proper_power_ok);
  CHECK(a.coverage_ok == b.coverage_ok);
}

TEST_CASE("density sweep on trivial suites") {
  // empty suite: every trial passes at every density
  std::vector<SweepRow> rows =
      density_sweep(2, 8, {0.1, 0.3}, 10, SuiteConfig{}, kDefaultSeed);
  for (const SweepRow& row : rows) CHECK(row.pass_fraction == doctest::Approx(1.0));

  // impossible suite: proper-power-free fails when every relator is a square
  // (length 2 words over one generator pair can still dodge this, so use a
  // check that always fails instead: coverage at window 1 with n = 2)
  SuiteConfig coverage_only;
  coverage_only.coverage = true;
  std::vector<SweepRow> zero = density_sweep(2, 2, {0.2}, 10, coverage_only, kDefaultSeed);
  CHECK(zero[0].pass_fraction == doctest::Approx(0.0));
}

TEST_CASE("density sweep separates low and high density under C'(1/6)") {
  SuiteConfig suite;
  suite.cprime_lambda = 1.0 / 6.0;
  // n = 100, d in {0.02, 0.4}: trials at the high density evaluate a
  // cap-sized sub-presentation, where piece collisions already abound
  std::vector<SweepRow> rows =
      density_sweep(2, 100, {0.02, 0.4}, 100, suite, kDefaultSeed, /*relator_cap=*/1500);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].pass_fraction > rows[1].pass_fraction);
  CHECK(rows[0].pass_fraction > 0.9);
  CHECK(rows[1].pass_fraction < 0.1);
  CHECK(rows[1].sampled == 1500);
  CHECK(rows[0].sampled == 9);  // floor(3^2)
}

TEST_CASE("exact product formula is non-increasing in density") {
  PredicateHandle pred = a_head_predicate(2);
  const int n = 40;
  const BigUint gamma_c = count_cyclic(n, 2);
  const BigUint gamma_p = gamma_c - pred.exact_complement(n);
  double prev = 2.0;
  for (double d = 0.05; d < 0.95; d += 0.05) {
    const double frac = tuple_fraction(2, n, d, gamma_p, gamma_c);
    CHECK(frac <= prev + 1e-12);
    prev = frac;
  }
}

TEST_CASE("thm ML pipeline") {
  PipelineResult r = thm_ml_pipeline(2, 0.2, 0.9, {}, 0.5);
  CHECK(r.k0 == 32);
  CHECK(r.d0 == doctest::Approx(0.1));  // 1 - nu dominates d(k) = 0.5
  CHECK(r.lambda == doctest::Approx(0.2 / 30.6).epsilon(1e-9));
  CHECK(r.lambda_within_sixth);

  // nu closer to 1 lowers k0
  PipelineResult relaxed = thm_ml_pipeline(2, 0.2, 0.99, {}, 0.5);
  CHECK(relaxed.k0 <= r.k0);

  // explicit small-k densities enter the minimum
  std::map<int, double> d_small;
  for (int k = 2; k < 32; ++k) d_small[k] = (k == 7) ? 0.03 : 0.5;
  PipelineResult pinned = thm_ml_pipeline(2, 0.2, 0.9, d_small);
  CHECK(pinned.d0 == doctest::Approx(0.03));

  CHECK_THROWS_AS(thm_ml_pipeline(2, 0.2, 0.5, {}, 0.5), input_error);   // nu <= (mu+1)/2
  CHECK_THROWS_AS(thm_ml_pipeline(2, 0.2, 0.9, {}), input_error);        // missing d(k)
}
