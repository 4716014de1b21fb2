// Command-line front end. All functionality goes through the C API of
// include/ggl/ggl.h; this file only parses flags, assembles config JSON and
// routes output.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggl/ggl.h"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct Sink {
  std::string path;  // empty: stdout

  int write(const std::string& text) const {
    if (path.empty()) {
      std::fputs(text.c_str(), stdout);
      if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
      return 0;
    }
    std::ofstream out(path);
    if (!out) {
      std::fprintf(stderr, "error: cannot open output file %s\n", path.c_str());
      return 1;
    }
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return 0;
  }
};

// 2: usage/input errors; 1: cap or capability errors.
int exit_code_for(ggl_status status) {
  return status == GGL_ERROR_INVALID_ARGUMENT ? 2 : 1;
}

int fail(ggl_status status) {
  std::fprintf(stderr, "error (%s): %s\n", ggl_status_name(status), ggl_last_error());
  return exit_code_for(status);
}

std::string take(char* text) {
  std::string out = text ? text : "";
  ggl_string_free(text);
  return out;
}

std::uint64_t enum_cap_from_env() {
  const char* env = std::getenv("GGL_ENUM_CAP");
  if (!env || !*env) return 100000000ULL;
  return std::strtoull(env, nullptr, 10);
}

// "cprime=0.1666,goodness:mu=0.2:L=2,coverage,noproperpower,noprimitive"
json parse_suite(const std::string& text) {
  json suite = json::object();
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    if (item.rfind("cprime", 0) == 0) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw CLI::ValidationError("--suite", "cprime needs a lambda value, e.g. cprime=0.1666");
      suite["cprime"] = std::stod(item.substr(eq + 1));
    } else if (item.rfind("goodness", 0) == 0) {
      json g;
      std::stringstream parts(item);
      std::string part;
      std::getline(parts, part, ':');  // skip "goodness"
      while (std::getline(parts, part, ':')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
          throw CLI::ValidationError("--suite", "goodness parameters look like mu=0.2:L=2");
        const std::string key = part.substr(0, eq);
        if (key == "mu")
          g["mu"] = std::stod(part.substr(eq + 1));
        else if (key == "L")
          g["L"] = std::stoi(part.substr(eq + 1));
        else
          throw CLI::ValidationError("--suite", "unknown goodness parameter: " + key);
      }
      suite["goodness"] = g;
    } else if (item == "coverage") {
      suite["coverage"] = true;
    } else if (item == "noproperpower") {
      suite["no_proper_power"] = true;
    } else if (item == "noprimitive") {
      suite["no_primitive"] = true;
    } else {
      throw CLI::ValidationError("--suite", "unknown suite item: " + item);
    }
  }
  return suite;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ggl: counting, sampling and decision experiments on random group presentations"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed / --output may follow the subcommand

  std::uint64_t seed = kDefaultSeed;
  Sink sink;
  app.add_option("--seed", seed, "global random seed (fixed default keeps runs reproducible)");
  app.add_option("--output", sink.path, "write results to a file instead of stdout");

  // count
  auto* count = app.add_subcommand("count", "exact number of cyclically reduced words");
  int count_k = 2, count_n = 0;
  count->add_option("--k", count_k, "alphabet rank")->required();
  count->add_option("--n", count_n, "word length")->required();

  // enumerate
  auto* enumerate =
      app.add_subcommand("enumerate", "list cyclically reduced words in lexicographic order");
  int enum_k = 2, enum_n = 0;
  std::uint64_t enum_limit = 0;
  enumerate->add_option("--k", enum_k, "alphabet rank")->required();
  enumerate->add_option("--n", enum_n, "word length")->required();
  enumerate->add_option("--limit", enum_limit, "stop after this many words (0 = all)");

  // sample
  auto* sample = app.add_subcommand("sample", "uniform cyclically reduced word");
  int sample_k = 2, sample_n = 0, sample_count = 1;
  sample->add_option("--k", sample_k, "alphabet rank")->required();
  sample->add_option("--n", sample_n, "word length")->required();
  sample->add_option("--count", sample_count, "number of words to draw");

  // readable
  auto* readable = app.add_subcommand("readable", "mu- or (mu,L)-readability verdict");
  std::string readable_word, readable_mode = "quotient";
  double readable_mu = 0.0;
  int readable_k = 2, readable_L = 0;
  readable->add_option("--word", readable_word, "word text")->required();
  readable->add_option("--mu", readable_mu, "volume budget fraction")->required();
  readable->add_option("--k", readable_k, "alphabet rank")->required();
  readable->add_option("--L", readable_L, "rank budget (omit for plain mu-readability)");
  readable->add_option("--mode", readable_mode, "quotient or exact");

  // good
  auto* good = app.add_subcommand("good", "(mu,L)-goodness verdict");
  std::string good_word;
  double good_mu = 0.0;
  int good_k = 2, good_L = 2;
  good->add_option("--word", good_word, "cyclically reduced word text")->required();
  good->add_option("--mu", good_mu, "volume budget fraction")->required();
  good->add_option("--k", good_k, "alphabet rank")->required();
  good->add_option("--L", good_L, "rank budget")->required();

  // check
  auto* check = app.add_subcommand("check", "presentation predicate report");
  std::string check_relators;
  int check_k = 2;
  double check_lambda = 0.0;
  bool check_coverage = false, check_no_pp = false, check_primitive = false;
  check->add_option("--relators", check_relators, "comma-separated relator words")->required();
  check->add_option("--k", check_k, "alphabet rank")->required();
  check->add_option("--lambda", check_lambda, "C'(lambda) piece condition");
  check->add_flag("--coverage", check_coverage, "generator coverage windows");
  check->add_flag("--no-proper-powers", check_no_pp, "flag proper powers");
  check->add_flag("--primitive", check_primitive, "flag primitive relators");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "finite-n genericity entropy profile (CSV)");
  std::string entropy_predicate;
  int entropy_k = 2, entropy_nmin = 1, entropy_nmax = 1, entropy_L = 0;
  double entropy_mu = 0.0, entropy_lambda = 0.0;
  std::string entropy_mode = "exact";
  std::uint64_t entropy_samples = 10000;
  entropy
      ->add_option("--predicate", entropy_predicate,
                   "non-mu-readable | non-muL-readable | good | c-prime-complement | a-head")
      ->required();
  entropy->add_option("--k", entropy_k, "alphabet rank")->required();
  entropy->add_option("--n-min", entropy_nmin, "first length")->required();
  entropy->add_option("--n-max", entropy_nmax, "last length")->required();
  entropy->add_option("--mode", entropy_mode, "exact or mc");
  entropy->add_option("--samples", entropy_samples, "Monte Carlo sample count");
  entropy->add_option("--mu", entropy_mu, "predicate parameter mu");
  entropy->add_option("--L", entropy_L, "predicate parameter L");
  entropy->add_option("--lambda", entropy_lambda, "predicate parameter lambda");

  // density
  auto* density = app.add_subcommand("density", "Gromov-density sweep (CSV)");
  int density_k = 2, density_n = 0, density_trials = 20;
  double density_d = 0.0;
  std::string density_grid, density_suite;
  std::uint64_t density_cap = 1000000;
  density->add_option("--k", density_k, "alphabet rank");
  density->add_option("--n", density_n, "relator length");
  density->add_option("--d", density_d, "single density value");
  density->add_option("--d-grid", density_grid, "comma-separated density grid");
  density->add_option("--trials", density_trials, "trials per density");
  density->add_option("--suite", density_suite,
                      "e.g. cprime=0.1666,goodness:mu=0.2:L=2,coverage,noproperpower");
  density->add_option("--relator-cap", density_cap, "max sampled relators per trial");

  // density pipeline
  auto* pipeline = density->add_subcommand("pipeline", "fixed-L freeness threshold arithmetic");
  int pipe_L = 2;
  double pipe_mu = 0.0, pipe_nu = 0.0, pipe_default = -1.0;
  std::string pipe_dsmall;
  pipeline->add_option("--L", pipe_L, "subgroup rank bound")->required();
  pipeline->add_option("--mu", pipe_mu, "goodness parameter mu")->required();
  pipeline->add_option("--nu", pipe_nu, "entropy target in ((mu+1)/2, 1)")->required();
  pipeline->add_option("--d-small", pipe_dsmall, "small-k densities, e.g. 2=0.3,3=0.25");
  pipeline->add_option("--d-small-default", pipe_default, "fallback density for small k");

  // modular
  auto* modular = app.add_subcommand("modular", "modular-group experiments");
  modular->require_subcommand(1);
  auto* mod_count = modular->add_subcommand("count", "cyclically reduced word count");
  int mod_count_n = 0;
  mod_count->add_option("--n", mod_count_n, "word length")->required();
  auto* mod_orbits = modular->add_subcommand("orbits", "tuple orbit count");
  int orbits_m = 1, orbits_t = 1;
  std::string orbits_mode = "canonical";
  mod_orbits->add_option("--m", orbits_m, "tuple size")->required();
  mod_orbits->add_option("--t", orbits_t, "half-length of relators")->required();
  mod_orbits->add_option("--mode", orbits_mode, "canonical or burnside");
  auto* mod_bounds = modular->add_subcommand("bounds", "isomorphism-count bound arithmetic");
  double bounds_eps = -1.0;
  int bounds_t = 0, bounds_k = 0, bounds_n = 0, bounds_m = 0;
  mod_bounds->add_option("--epsilon", bounds_eps, "with --t: lower bound on log2 J_eps(t)");
  mod_bounds->add_option("--t", bounds_t, "half-length parameter");
  mod_bounds->add_option("--k", bounds_k, "with --n: subset upper bound on I_k(n)");
  mod_bounds->add_option("--n", bounds_n, "ball radius");
  mod_bounds->add_option("--m", bounds_m, "with --t: K_m(t) asymptotic value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  char* text = nullptr;
  ggl_status status = GGL_OK;

  if (*count) {
    status = ggl_count_cyclic(count_k, count_n, &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*enumerate) {
    ggl_word_iter* iter = nullptr;
    status = ggl_enumerate_cyclic(enum_k, enum_n, &iter);
    if (status != GGL_OK) return fail(status);
    std::ostringstream lines;
    std::uint64_t produced = 0;
    int rc;
    while ((rc = ggl_word_iter_next(iter, &text)) == 1) {
      lines << take(text) << '\n';
      if (enum_limit && ++produced >= enum_limit) break;
    }
    ggl_word_iter_free(iter);
    if (rc == -1) return fail(GGL_ERROR_INTERNAL);
    return sink.write(lines.str());
  }

  if (*sample) {
    std::ostringstream lines;
    for (int i = 0; i < sample_count; ++i) {
      status = ggl_sample_cyclic(sample_k, sample_n, seed + static_cast<std::uint64_t>(i), &text);
      if (status != GGL_OK) return fail(status);
      lines << take(text) << '\n';
    }
    return sink.write(lines.str());
  }

  if (*readable) {
    status = ggl_readable(readable_k, readable_word.c_str(), readable_mu, readable_L,
                          readable_mode.c_str(), &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*good) {
    status = ggl_good(good_k, good_word.c_str(), good_mu, good_L, &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*check) {
    json cfg = json::object();
    if (check->count("--lambda")) cfg["lambda"] = check_lambda;
    if (check_coverage) cfg["coverage"] = true;
    if (check_no_pp) cfg["no_proper_power"] = true;
    if (check_primitive) cfg["primitive"] = true;
    status = ggl_check(check_k, check_relators.c_str(), cfg.dump().c_str(), &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*entropy) {
    json cfg;
    cfg["k"] = entropy_k;
    cfg["predicate"] = entropy_predicate;
    cfg["n_min"] = entropy_nmin;
    cfg["n_max"] = entropy_nmax;
    cfg["mode"] = entropy_mode == "mc" ? "mc" : "exact";
    cfg["samples"] = entropy_samples;
    cfg["seed"] = seed;
    cfg["enum_cap"] = enum_cap_from_env();
    if (entropy->count("--mu")) cfg["mu"] = entropy_mu;
    if (entropy->count("--L")) cfg["L"] = entropy_L;
    if (entropy->count("--lambda")) cfg["lambda"] = entropy_lambda;
    status = ggl_entropy_csv(cfg.dump().c_str(), &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*pipeline) {
    json cfg;
    cfg["L"] = pipe_L;
    cfg["mu"] = pipe_mu;
    cfg["nu"] = pipe_nu;
    if (!pipe_dsmall.empty()) {
      json d_small = json::object();
      std::stringstream stream(pipe_dsmall);
      std::string item;
      while (std::getline(stream, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          std::fprintf(stderr, "error: --d-small entries look like 2=0.3\n");
          return 2;
        }
        d_small[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      }
      cfg["d_small"] = d_small;
    }
    if (pipe_default >= 0.0) cfg["d_small_default"] = pipe_default;
    status = ggl_thm_ml_pipeline(cfg.dump().c_str(), &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*density) {
    std::vector<double> grid;
    if (!density_grid.empty()) {
      std::stringstream stream(density_grid);
      std::string item;
      while (std::getline(stream, item, ',')) grid.push_back(std::stod(item));
    } else if (density->count("--d")) {
      grid.push_back(density_d);
    } else {
      std::fprintf(stderr, "error: density needs --d or --d-grid\n");
      return 2;
    }
    json suite = json::object();
    try {
      if (!density_suite.empty()) suite = parse_suite(density_suite);
    } catch (const CLI::ParseError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }
    // One call per grid point: progress goes to the diagnostic stream,
    // results only to the data sink, ordered by grid index.
    std::ostringstream csv;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      json cfg;
      cfg["k"] = density_k;
      cfg["n"] = density_n;
      cfg["trials"] = density_trials;
      cfg["seed"] = seed;
      cfg["relator_cap"] = density_cap;
      cfg["d_grid"] = std::vector<double>{grid[i]};
      cfg["grid_offset"] = i;  // keeps per-trial seeds aligned with a full-grid run
      cfg["suite"] = suite;
      std::fprintf(stderr, "density: d=%g (%zu/%zu)...\n", grid[i], i + 1, grid.size());
      status = ggl_density_csv(cfg.dump().c_str(), &text);
      if (status != GGL_OK) return fail(status);
      std::string rows = take(text);
      if (i > 0) rows.erase(0, rows.find('\n') + 1);  // header only once
      csv << rows;
    }
    return sink.write(csv.str());
  }

  if (*mod_count) {
    status = ggl_modular_count(mod_count_n, &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*mod_orbits) {
    status = ggl_modular_orbits(orbits_m, orbits_t, orbits_mode.c_str(), &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  if (*mod_bounds) {
    json cfg = json::object();
    if (bounds_eps >= 0.0) {
      cfg["epsilon"] = bounds_eps;
      cfg["t"] = bounds_t;
    } else if (mod_bounds->count("--k")) {
      cfg["k"] = bounds_k;
      cfg["n"] = bounds_n;
    } else if (mod_bounds->count("--m")) {
      cfg["m"] = bounds_m;
      cfg["t"] = bounds_t;
    } else {
      std::fprintf(stderr, "error: bounds needs --epsilon/--t, --k/--n, or --m/--t\n");
      return 2;
    }
    status = ggl_modular_bounds(cfg.dump().c_str(), &text);
    if (status != GGL_OK) return fail(status);
    return sink.write(take(text));
  }

  return 0;
}
