#include "ggl/ggl.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ggl/cancellation.hpp"
#include "ggl/density.hpp"
#include "ggl/entropy.hpp"
#include "ggl/errors.hpp"
#include "ggl/graphs.hpp"
#include "ggl/modular.hpp"
#include "ggl/readability.hpp"
#include "ggl/rng.hpp"
#include "ggl/words.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* alloc_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ggl_status guarded(Fn&& fn) {
  try {
    fn();
    return GGL_OK;
  } catch (const ggl::input_error& e) {
    g_last_error = e.what();
    return GGL_ERROR_INVALID_ARGUMENT;
  } catch (const ggl::cap_error& e) {
    g_last_error = e.what();
    return GGL_ERROR_CAP_EXCEEDED;
  } catch (const ggl::capability_error& e) {
    g_last_error = e.what();
    return GGL_ERROR_UNSUPPORTED;
  } catch (const json::exception& e) {
    g_last_error = e.what();
    return GGL_ERROR_INVALID_ARGUMENT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return GGL_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GGL_ERROR_INTERNAL;
  }
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

json verdict_to_json(const ggl::ReadabilityVerdict& verdict) {
  json j;
  j["readable"] = verdict.readable;
  j["mode"] = verdict.mode == ggl::ReadMode::exact ? "exact" : "quotient";
  j["budget"] = verdict.budget;
  j["witness"] =
      verdict.witness ? json::parse(ggl::graph_to_json(*verdict.witness)) : json(nullptr);
  return j;
}

ggl::ReadabilityParams params_for(int k, double mu, int L) {
  ggl::ReadabilityParams params;
  params.rank = k;
  params.mu = mu;
  if (L > 0) params.L = L;
  return params;
}

std::vector<ggl::CyclicWord> parse_relators(int k, const char* relators) {
  if (!relators) throw ggl::input_error("relators must not be null");
  std::vector<ggl::CyclicWord> out;
  std::string text(relators);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!item.empty()) out.push_back(ggl::parse_cyclic_word(k, item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ggl::input_error("no relators supplied");
  return out;
}

ggl::PredicateHandle predicate_from_config(const json& cfg, int k) {
  const std::string name = cfg.at("predicate").get<std::string>();
  if (name == "a-head") return ggl::a_head_predicate(k);
  if (name == "non-mu-readable") return ggl::non_mu_readable_predicate(k, cfg.at("mu").get<double>());
  if (name == "non-muL-readable")
    return ggl::non_muL_readable_predicate(k, cfg.at("mu").get<double>(), cfg.at("L").get<int>());
  if (name == "good")
    return ggl::good_predicate(k, cfg.at("mu").get<double>(), cfg.at("L").get<int>());
  if (name == "c-prime-complement")
    return ggl::c_prime_predicate(k, cfg.at("lambda").get<double>());
  throw ggl::input_error("unknown predicate: " + name);
}

}  // namespace

extern "C" {

const char* ggl_version(void) { return "1.0.0"; }

const char* ggl_status_name(ggl_status status) {
  switch (status) {
    case GGL_OK: return "ok";
    case GGL_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case GGL_ERROR_CAP_EXCEEDED: return "cap exceeded";
    case GGL_ERROR_UNSUPPORTED: return "unsupported";
    case GGL_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ggl_last_error(void) { return g_last_error.c_str(); }

void ggl_string_free(char* text) { delete[] text; }

ggl_status ggl_free_reduce(int k, const char* word, char** out_word) {
  return guarded([&] {
    if (!word || !out_word) throw ggl::input_error("null argument");
    *out_word = alloc_string(ggl::format_word(ggl::parse_word(k, word)));
  });
}

ggl_status ggl_cyclic_reduce(int k, const char* word, char** out_word) {
  return guarded([&] {
    if (!word || !out_word) throw ggl::input_error("null argument");
    *out_word = alloc_string(ggl::format_word(ggl::parse_cyclic_word(k, word).word));
  });
}

ggl_status ggl_count_cyclic(int k, int n, char** out_decimal) {
  return guarded([&] {
    if (!out_decimal) throw ggl::input_error("null argument");
    *out_decimal = alloc_string(ggl::count_cyclic(n, k).to_decimal());
  });
}

ggl_status ggl_count_cyclic_ln(int k, int n, double* out_ln) {
  return guarded([&] {
    if (!out_ln) throw ggl::input_error("null argument");
    *out_ln = ggl::count_cyclic_ln(n, k);
  });
}

struct ggl_word_iter {
  std::vector<ggl::CyclicWord> words;
  std::size_t next = 0;
};

ggl_status ggl_enumerate_cyclic(int k, int n, ggl_word_iter** out_iter) {
  return guarded([&] {
    if (!out_iter) throw ggl::input_error("null argument");
    const std::uint64_t cap = []() -> std::uint64_t {
      const char* env = std::getenv("GGL_ENUM_CAP");
      if (!env || !*env) return ggl::kDefaultEnumCap;
      return std::strtoull(env, nullptr, 10);
    }();
    const ggl::BigUint total = ggl::count_cyclic(n, k);
    if (total > ggl::BigUint{cap})
      throw ggl::cap_error("enumeration of " + total.to_decimal() + " words exceeds cap " +
                           std::to_string(cap));
    auto iter = std::make_unique<ggl_word_iter>();
    iter->words = ggl::all_cyclic(n, k);
    *out_iter = iter.release();
  });
}

int ggl_word_iter_next(ggl_word_iter* iter, char** out_word) {
  if (!iter || !out_word) {
    g_last_error = "null argument";
    return -1;
  }
  if (iter->next >= iter->words.size()) return 0;
  *out_word = alloc_string(ggl::format_word(iter->words[iter->next].word));
  ++iter->next;
  return 1;
}

void ggl_word_iter_free(ggl_word_iter* iter) { delete iter; }

ggl_status ggl_sample_cyclic(int k, int n, uint64_t seed, char** out_word) {
  return guarded([&] {
    if (!out_word) throw ggl::input_error("null argument");
    *out_word = alloc_string(ggl::format_word(ggl::sample_cyclic(n, k, seed).word));
  });
}

ggl_status ggl_readable(int k, const char* word, double mu, int L, const char* mode,
                        char** out_json) {
  return guarded([&] {
    if (!word || !out_json) throw ggl::input_error("null argument");
    const std::string mode_name = mode ? mode : "quotient";
    ggl::ReadMode read_mode;
    if (mode_name == "exact")
      read_mode = ggl::ReadMode::exact;
    else if (mode_name == "quotient")
      read_mode = ggl::ReadMode::quotient;
    else
      throw ggl::input_error("mode must be 'exact' or 'quotient'");
    const ggl::Word w = ggl::parse_word(k, word);
    const ggl::ReadabilityParams params = params_for(k, mu, L);
    const ggl::ReadabilityVerdict verdict =
        params.L ? ggl::is_muL_readable(w, params, read_mode)
                 : ggl::is_mu_readable(w, params, read_mode);
    *out_json = alloc_string(verdict_to_json(verdict).dump());
  });
}

ggl_status ggl_good(int k, const char* word, double mu, int L, char** out_json) {
  return guarded([&] {
    if (!word || !out_json) throw ggl::input_error("null argument");
    const ggl::CyclicWord w = ggl::parse_cyclic_word(k, word);
    const bool good = ggl::is_good(w, params_for(k, mu, L));
    json j;
    j["good"] = good;
    j["mu"] = mu;
    j["L"] = L;
    j["word"] = ggl::format_word(w.word);
    *out_json = alloc_string(j.dump());
  });
}

ggl_status ggl_check(int k, const char* relators, const char* config_json, char** out_json) {
  return guarded([&] {
    if (!out_json) throw ggl::input_error("null argument");
    const json cfg = config_json && *config_json ? json::parse(config_json) : json::object();
    const ggl::Presentation p = ggl::make_presentation(k, parse_relators(k, relators));
    json report;
    report["k"] = k;
    json per_relator = json::array();
    for (const auto& r : p.relators) {
      json entry;
      entry["word"] = ggl::format_word(r.word);
      entry["length"] = r.length();
      if (cfg.value("no_proper_power", false)) entry["proper_power"] = ggl::is_proper_power(r);
      if (cfg.value("coverage", false))
        entry["covers_all_generators"] = ggl::covers_all_generators(r, k);
      if (cfg.value("primitive", false)) entry["primitive"] = ggl::is_primitive(r.word);
      per_relator.push_back(std::move(entry));
    }
    report["relators"] = std::move(per_relator);
    if (cfg.contains("lambda")) {
      const ggl::PieceReport pieces = ggl::is_c_prime(p, cfg.at("lambda").get<double>());
      json piece_json;
      piece_json["lambda"] = pieces.lambda;
      piece_json["max_piece"] = pieces.max_piece;
      piece_json["relator_max_piece"] = pieces.relator_max_piece;
      piece_json["relator_ratio"] = pieces.relator_ratio;
      piece_json["satisfied"] = pieces.satisfied;
      report["c_prime"] = std::move(piece_json);
    }
    *out_json = alloc_string(report.dump());
  });
}

ggl_status ggl_entropy_csv(const char* config_json, char** out_csv) {
  return guarded([&] {
    if (!config_json || !out_csv) throw ggl::input_error("null argument");
    const json cfg = json::parse(config_json);
    const int k = cfg.at("k").get<int>();
    const ggl::PredicateHandle pred = predicate_from_config(cfg, k);
    const std::string mode_name = cfg.value("mode", "exact");
    const ggl::CountMode mode =
        mode_name == "mc" ? ggl::CountMode::monte_carlo : ggl::CountMode::exact;
    const ggl::EntropyProfile profile = ggl::entropy_profile(
        pred, k, cfg.at("n_min").get<int>(), cfg.at("n_max").get<int>(), mode,
        cfg.value("samples", std::uint64_t{10000}), cfg.value("seed", ggl::kDefaultSeed),
        cfg.value("enum_cap", ggl::kDefaultEnumCap));
    // t_hat is the log-scaled sample; ci_lo/ci_hi bound the complement
    // fraction (they collapse to the exact fraction in exact mode). A "zero"
    // t_hat marks an empty complement at that length.
    std::ostringstream csv;
    csv << "n,gamma_bar,t_hat,ci_lo,ci_hi\n";
    for (const auto& sample : profile.samples) {
      csv << sample.n << ',';
      if (sample.detail.exact) {
        csv << csv_field(sample.detail.count.to_decimal()) << ',';
      } else {
        csv << format_double(sample.detail.fraction *
                             std::exp(ggl::count_cyclic_ln(sample.n, k)))
            << ',';
      }
      csv << (sample.zero_complement ? "zero" : format_double(sample.t_hat)) << ','
          << format_double(sample.detail.ci_lo) << ',' << format_double(sample.detail.ci_hi)
          << '\n';
    }
    *out_csv = alloc_string(csv.str());
  });
}

ggl_status ggl_tuple_fraction(int k, int n, double d, const char* gamma_p,
                              const char* gamma_c, double* out_fraction) {
  return guarded([&] {
    if (!gamma_p || !gamma_c || !out_fraction) throw ggl::input_error("null argument");
    auto parse_big = [](const char* text) {
      ggl::BigUint value;
      for (const char* c = text; *c; ++c) {
        if (*c < '0' || *c > '9') throw ggl::input_error("counts must be decimal integers");
        value.mul_small(10);
        value += ggl::BigUint{static_cast<std::uint64_t>(*c - '0')};
      }
      return value;
    };
    *out_fraction = ggl::tuple_fraction(k, n, d, parse_big(gamma_p), parse_big(gamma_c));
  });
}

ggl_status ggl_density_csv(const char* config_json, char** out_csv) {
  return guarded([&] {
    if (!config_json || !out_csv) throw ggl::input_error("null argument");
    const json cfg = json::parse(config_json);
    const int k = cfg.at("k").get<int>();
    const int n = cfg.at("n").get<int>();
    std::vector<double> grid;
    if (cfg.contains("d_grid"))
      grid = cfg.at("d_grid").get<std::vector<double>>();
    else
      grid = {cfg.at("d").get<double>()};
    ggl::SuiteConfig suite;
    if (cfg.contains("suite")) {
      const json& s = cfg.at("suite");
      if (s.contains("cprime")) suite.cprime_lambda = s.at("cprime").get<double>();
      if (s.contains("goodness")) {
        suite.goodness_mu = s.at("goodness").at("mu").get<double>();
        suite.goodness_L = s.at("goodness").at("L").get<int>();
      }
      suite.coverage = s.value("coverage", false);
      suite.no_proper_power = s.value("no_proper_power", false);
      suite.no_primitive = s.value("no_primitive", false);
    }
    const auto rows = ggl::density_sweep(k, n, grid, cfg.value("trials", 20), suite,
                                         cfg.value("seed", ggl::kDefaultSeed),
                                         cfg.value("relator_cap", ggl::kDefaultRelatorCap),
                                         cfg.value("grid_offset", std::size_t{0}));
    std::ostringstream csv;
    csv << "d,pass_fraction,ci_lo,ci_hi,trials,m,sampled\n";
    for (const auto& row : rows) {
      csv << format_double(row.d) << ',' << format_double(row.pass_fraction) << ','
          << format_double(row.ci_lo) << ',' << format_double(row.ci_hi) << ',' << row.trials
          << ',' << format_double(row.m) << ',' << row.sampled << '\n';
    }
    *out_csv = alloc_string(csv.str());
  });
}

ggl_status ggl_thm_ml_pipeline(const char* config_json, char** out_json) {
  return guarded([&] {
    if (!config_json || !out_json) throw ggl::input_error("null argument");
    const json cfg = json::parse(config_json);
    std::map<int, double> d_small;
    if (cfg.contains("d_small"))
      for (const auto& [key, value] : cfg.at("d_small").items())
        d_small[std::stoi(key)] = value.get<double>();
    std::optional<double> d_default;
    if (cfg.contains("d_small_default")) d_default = cfg.at("d_small_default").get<double>();
    const ggl::PipelineResult result =
        ggl::thm_ml_pipeline(cfg.at("L").get<int>(), cfg.at("mu").get<double>(),
                             cfg.at("nu").get<double>(), d_small, d_default);
    json j;
    j["k0"] = result.k0;
    j["d0"] = result.d0;
    j["lambda"] = result.lambda;
    j["lambda_within_sixth"] = result.lambda_within_sixth;
    *out_json = alloc_string(j.dump());
  });
}

ggl_status ggl_formula(const char* name, const char* params_json, double* out_value) {
  return guarded([&] {
    if (!name || !params_json || !out_value) throw ggl::input_error("null argument");
    const json p = json::parse(params_json);
    const std::string formula(name);
    if (formula == "mu_max_ao") {
      *out_value = ggl::mu_max_ao(p.at("k").get<int>());
    } else if (formula == "mu_max_a1") {
      *out_value = ggl::mu_max_a1(p.at("k").get<int>(), p.at("L").get<int>());
    } else if (formula == "bound_lemma_ml") {
      *out_value = ggl::bound_lemma_ml(p.at("k").get<int>(), p.at("mu").get<double>(),
                                       p.at("L").get<int>());
    } else if (formula == "readable_count_bound_ln") {
      *out_value = ggl::readable_count_bound_ln(p.at("n").get<int>(), p.at("k").get<int>(),
                                                p.at("mu").get<double>(), p.at("L").get<int>(),
                                                p.value("ln_c", 0.0));
    } else if (formula == "lambda_bound") {
      *out_value = ggl::lambda_bound(p.at("mu").get<double>(), p.at("L").get<int>()).value;
    } else if (formula == "bound_prop_read") {
      *out_value = ggl::bound_prop_read(p.at("k").get<int>());
    } else if (formula == "remark_h_bound") {
      *out_value = ggl::remark_h_bound(p.at("k").get<int>(), p.at("L").get<int>());
    } else {
      throw ggl::input_error("unknown formula: " + formula);
    }
  });
}

ggl_status ggl_modular_count(int n, char** out_decimal) {
  return guarded([&] {
    if (!out_decimal) throw ggl::input_error("null argument");
    *out_decimal = alloc_string(ggl::count_cyclic_modular(n).to_decimal());
  });
}

ggl_status ggl_modular_reduce(const char* word, int cyclic, char** out_word) {
  return guarded([&] {
    if (!word || !out_word) throw ggl::input_error("null argument");
    ggl::ModularWord w = ggl::parse_modular(word);
    if (cyclic) w = ggl::cyclic_reduce_modular(w);
    *out_word = alloc_string(ggl::format_modular(w));
  });
}

ggl_status ggl_modular_inverse(const char* word, char** out_word) {
  return guarded([&] {
    if (!word || !out_word) throw ggl::input_error("null argument");
    *out_word = alloc_string(ggl::format_modular(ggl::inverse_modular(ggl::parse_modular(word))));
  });
}

ggl_status ggl_modular_eta(const char* word, char** out_word) {
  return guarded([&] {
    if (!word || !out_word) throw ggl::input_error("null argument");
    *out_word = alloc_string(ggl::format_modular(ggl::eta(ggl::parse_modular(word))));
  });
}

ggl_status ggl_modular_orbits(int m, int t, const char* mode, char** out_decimal) {
  return guarded([&] {
    if (!out_decimal) throw ggl::input_error("null argument");
    const std::string mode_name = mode ? mode : "canonical";
    ggl::OrbitMode orbit_mode;
    if (mode_name == "canonical")
      orbit_mode = ggl::OrbitMode::canonical;
    else if (mode_name == "burnside")
      orbit_mode = ggl::OrbitMode::burnside;
    else
      throw ggl::input_error("mode must be 'canonical' or 'burnside'");
    *out_decimal = alloc_string(ggl::tuple_orbits(m, t, orbit_mode).to_decimal());
  });
}

ggl_status ggl_modular_bounds(const char* config_json, char** out_json) {
  return guarded([&] {
    if (!config_json || !out_json) throw ggl::input_error("null argument");
    const json cfg = json::parse(config_json);
    json j;
    if (cfg.contains("epsilon")) {
      const ggl::JBound bound =
          ggl::j_lower_bound(cfg.at("epsilon").get<double>(), cfg.at("t").get<int>());
      j["bound"] = "j_lower";
      j["log2_value"] = bound.log2_value;
      j["multiplier"] = bound.multiplier;
      j["log2_ratio"] = bound.log2_ratio;
      j["valid"] = bound.valid;
      j["constant"] = "log C omitted (symbolic)";
    } else if (cfg.contains("k")) {
      j["bound"] = "i_upper";
      j["log2_log2_value"] =
          ggl::i_upper_bound_log2log2(cfg.at("k").get<int>(), cfg.at("n").get<int>());
    } else if (cfg.contains("m")) {
      const ggl::KFormula f = ggl::k_formula(cfg.at("m").get<int>(), cfg.at("t").get<int>());
      j["bound"] = "k_formula";
      j["ln_value"] = f.ln_value;
      j["value"] = f.value;
    } else {
      throw ggl::input_error("config must carry epsilon/t, k/n, or m/t");
    }
    *out_json = alloc_string(j.dump());
  });
}

}  // extern "C"
