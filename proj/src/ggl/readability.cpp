#include "ggl/readability.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "ggl/errors.hpp"

namespace ggl {

void ReadabilityParams::validate() const {
  check_rank(rank);
  if (!(mu > 0.0 && mu < 1.0)) throw input_error("mu must lie in (0,1)");
  if (L && *L < 2) throw input_error("L must be at least 2");
}

namespace {

// "volume at most mu|w|" with integer volume; the epsilon absorbs
// representation dust when mu|w| is an exact integer.
int volume_budget(double mu, int n) {
  return static_cast<int>(std::floor(mu * n + 1e-9));
}

// ---------------------------------------------------------------------------
// Quotient search: fold the path graph of w letter by letter. Following an
// existing transition is forced (the graph is folded); otherwise spend one
// unit of volume on a fresh vertex (rank unchanged) or on any vertex with a
// free inverse slot (rank + 1).
// ---------------------------------------------------------------------------
struct QuotientSearch {
  int A = 0;                // 2k
  int volume_cap = 0;       // B
  int rank_cap = 0;         // k-1 (plain) or L
  bool plain = false;       // plain mode repairs a second degree-1 vertex
  const Letters* word = nullptr;

  std::vector<int> trans;   // (B+1) x A transition table, -1 = free slot
  std::vector<int> degree;
  int V = 0;
  int E = 0;
  std::optional<LabeledGraph> witness;

  bool run(int k, const Letters& letters, int budget, int rank_budget, bool plain_mode) {
    A = 2 * k;
    volume_cap = budget;
    rank_cap = rank_budget;
    plain = plain_mode;
    word = &letters;
    if (budget < 1) return false;  // a nonempty word needs at least one edge
    trans.assign(static_cast<std::size_t>(budget + 1) * A, -1);
    degree.assign(static_cast<std::size_t>(budget + 1), 0);
    V = 1;
    E = 0;
    return dfs(0, 0);
  }

  int slot(int v, int letter) const { return trans[v * A + letter_index(letter)]; }
  void set_slot(int v, int letter, int t) { trans[v * A + letter_index(letter)] = t; }

  bool dfs(std::size_t pos, int cur) {
    if (pos == word->size()) return accept(cur);
    const int l = (*word)[pos];
    const int existing = slot(cur, l);
    if (existing != -1) return dfs(pos + 1, existing);
    if (E == volume_cap) return false;

    // fresh vertex
    {
      const int v = V;
      ++V;
      link(cur, l, v);
      if (dfs(pos + 1, v)) return true;
      unlink(cur, l, v);
      --V;
    }
    // reuse an existing vertex (closes a cycle: rank goes up by one)
    if (E + 1 - V + 1 <= rank_cap) {
      for (int v = 0; v < V; ++v) {
        if (slot(v, -l) != -1) continue;
        link(cur, l, v);
        if (dfs(pos + 1, v)) return true;
        unlink(cur, l, v);
      }
    }
    return false;
  }

  void link(int u, int l, int v) {
    set_slot(u, l, v);
    set_slot(v, -l, u);
    degree[u] += (u == v) ? 2 : 1;
    if (u != v) degree[v] += 1;
    ++E;
  }

  void unlink(int u, int l, int v) {
    set_slot(u, l, -1);
    set_slot(v, -l, -1);
    degree[u] -= (u == v) ? 2 : 1;
    if (u != v) degree[v] -= 1;
    --E;
  }

  bool accept(int /*end*/) {
    if (!plain) {  // (mu,L): a traversed quotient has <= 2 degree-1 vertices
      witness = snapshot(std::nullopt);
      return true;
    }
    std::vector<int> leaves;
    for (int v = 0; v < V; ++v)
      if (degree[v] == 1) leaves.push_back(v);
    if (leaves.size() <= 1) {
      witness = snapshot(leaves.empty() ? 0 : leaves[0]);
      return true;
    }
    // Two path ends of degree 1: one augmenting edge incident to either of
    // them removes it from the degree-1 set, leaving at most one (the base).
    if (E < volume_cap && E + 1 - V + 1 <= rank_cap) {
      for (int u : leaves) {
        for (int idx = 0; idx < A; ++idx) {
          const int l = letter_at(idx);
          if (slot(u, l) != -1) continue;
          for (int v = 0; v < V; ++v) {
            if (slot(v, -l) != -1) continue;
            link(u, l, v);
            int base = 0;
            for (int x = 0; x < V; ++x)
              if (degree[x] == 1) base = x;
            witness = snapshot(base);
            unlink(u, l, v);
            return true;
          }
        }
      }
    }
    return false;
  }

  LabeledGraph snapshot(std::optional<int> base) const {
    LabeledGraph g = LabeledGraph::empty(A / 2, V);
    for (int v = 0; v < V; ++v) {
      for (int idx = 0; idx < A; ++idx) {
        const int l = letter_at(idx);
        const int t = trans[v * A + idx];
        if (t != -1 && l > 0) g.add_edge(v, l, t);
      }
    }
    g.base = base;
    return g;
  }
};

// ---------------------------------------------------------------------------
// Exact mode: precompiled candidate witnesses per (k, filter) key, grouped
// by volume.
// ---------------------------------------------------------------------------
struct CompiledGraph {
  int V = 0;
  std::vector<int> trans;  // V x 2k
  int graph_index = 0;     // into connected_folded_graphs(k, e)
};

struct FilterKey {
  int k;
  int rank_cap;
  int max_degree_one;
  bool need_low_degree_vertex;  // some vertex of degree < 2k
  auto operator<=>(const FilterKey&) const = default;
};

std::mutex g_compiled_mutex;
std::map<FilterKey, std::deque<std::vector<CompiledGraph>>> g_compiled;

const std::deque<std::vector<CompiledGraph>>& compiled_candidates(const FilterKey& key,
                                                                  int max_edges) {
  std::lock_guard<std::mutex> lock(g_compiled_mutex);
  auto& levels = g_compiled[key];
  while (static_cast<int>(levels.size()) <= max_edges) {
    const int e = static_cast<int>(levels.size());
    const auto& raw = connected_folded_graphs(key.k, e);
    std::vector<CompiledGraph> filtered;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const LabeledGraph& g = raw[i];
      if (g.cycle_rank() > key.rank_cap) continue;
      if (g.degree_one_count() > key.max_degree_one) continue;
      if (key.need_low_degree_vertex && !g.has_vertex_of_degree_below(2 * key.k)) continue;
      CompiledGraph cg;
      cg.V = g.num_vertices;
      cg.graph_index = static_cast<int>(i);
      cg.trans.assign(static_cast<std::size_t>(g.num_vertices) * 2 * key.k, -1);
      for (int v = 0; v < g.num_vertices; ++v)
        for (const auto& [label, t] : g.adj[v])
          cg.trans[v * 2 * key.k + letter_index(label)] = t;
      filtered.push_back(std::move(cg));
    }
    levels.push_back(std::move(filtered));
  }
  return levels;
}

bool read_compiled(const CompiledGraph& g, int A, const Letters& letters, int* start_out) {
  for (int start = 0; start < g.V; ++start) {
    int cur = start;
    bool ok = true;
    for (int l : letters) {
      cur = g.trans[cur * A + letter_index(l)];
      if (cur == -1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (start_out) *start_out = start;
      return true;
    }
  }
  return false;
}

ReadabilityVerdict exact_decide(const Word& w, const ReadabilityParams& params, bool plain) {
  const int n = w.length();
  const int budget = volume_budget(params.mu, n);
  ReadabilityVerdict verdict;
  verdict.mode = ReadMode::exact;
  verdict.budget = budget;
  if (budget > kExactVolumeCap)
    throw capability_error("exact readability enumeration capped at volume " +
                           std::to_string(kExactVolumeCap) + ", budget was " +
                           std::to_string(budget));
  FilterKey key{params.rank, plain ? params.rank - 1 : *params.L, plain ? 1 : 2, !plain};
  const auto& levels = compiled_candidates(key, budget);
  for (int e = 0; e <= budget; ++e) {
    for (const CompiledGraph& cg : levels[e]) {
      if (read_compiled(cg, 2 * params.rank, w.letters, nullptr)) {
        verdict.readable = true;
        LabeledGraph witness = connected_folded_graphs(params.rank, e)[cg.graph_index];
        if (plain) {
          witness.base = 0;
          for (int v = 0; v < witness.num_vertices; ++v)
            if (witness.degree(v) == 1) witness.base = v;
        }
        verdict.witness = std::move(witness);
        return verdict;
      }
    }
  }
  return verdict;
}

ReadabilityVerdict quotient_decide(const Word& w, const ReadabilityParams& params, bool plain) {
  const int n = w.length();
  const int budget = volume_budget(params.mu, n);
  ReadabilityVerdict verdict;
  verdict.mode = ReadMode::quotient;
  verdict.budget = budget;
  QuotientSearch search;
  verdict.readable = search.run(params.rank, w.letters, budget,
                                plain ? params.rank - 1 : *params.L, plain);
  if (verdict.readable) verdict.witness = std::move(search.witness);
  return verdict;
}

}  // namespace

ReadabilityVerdict is_mu_readable(const Word& w, const ReadabilityParams& params,
                                  ReadMode mode) {
  params.validate();
  if (w.letters.empty()) throw input_error("readability is defined for nonempty words");
  if (w.rank != params.rank) throw input_error("word rank does not match parameters");
  return mode == ReadMode::exact ? exact_decide(w, params, /*plain=*/true)
                                 : quotient_decide(w, params, /*plain=*/true);
}

ReadabilityVerdict is_muL_readable(const Word& w, const ReadabilityParams& params) {
  params.validate();
  if (!params.L) throw input_error("(mu,L)-readability needs L");
  if (w.letters.empty()) throw input_error("readability is defined for nonempty words");
  if (w.rank != params.rank) throw input_error("word rank does not match parameters");
  // For L < k the quotient search is exact; past that the traversed-subgraph
  // argument no longer covers the degree-< 2k condition.
  if (*params.L < params.rank) return quotient_decide(w, params, /*plain=*/false);
  return exact_decide(w, params, /*plain=*/false);
}

ReadabilityVerdict is_muL_readable(const Word& w, const ReadabilityParams& params,
                                   ReadMode mode) {
  params.validate();
  if (!params.L) throw input_error("(mu,L)-readability needs L");
  if (w.letters.empty()) throw input_error("readability is defined for nonempty words");
  return mode == ReadMode::exact ? exact_decide(w, params, /*plain=*/false)
                                 : quotient_decide(w, params, /*plain=*/false);
}

bool is_good(const CyclicWord& w, const ReadabilityParams& params) {
  params.validate();
  if (!params.L) throw input_error("goodness needs L");
  const int n = w.length();
  if (n < 1) throw input_error("goodness is defined for nonempty words");
  const int min_len = (n + 1) / 2;

  std::set<Letters> candidates;
  const Letters& fwd = w.word.letters;
  const Letters rev = w.word.inverse().letters;
  for (int offset = 0; offset < n; ++offset) {
    Letters rot_fwd = rotate(fwd, offset);
    Letters rot_rev = rotate(rev, offset);
    for (int len = n; len >= min_len; --len) {
      candidates.insert(Letters(rot_fwd.begin(), rot_fwd.begin() + len));
      candidates.insert(Letters(rot_rev.begin(), rot_rev.begin() + len));
    }
  }
  // Longest first: larger budgets are the likely failures.
  std::vector<const Letters*> ordered;
  ordered.reserve(candidates.size());
  for (const auto& c : candidates) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(),
            [](const Letters* a, const Letters* b) { return a->size() > b->size(); });
  for (const Letters* sub : ordered) {
    Word v{params.rank, *sub};
    if (is_muL_readable(v, params).readable) return false;
  }
  return true;
}

double mu_max_ao(int k) {
  check_rank(k);
  return std::log1p(1.0 / (4.0 * k - 4.0)) / std::log(2.0 * k);
}

double mu_max_a1(int k, int L) {
  check_rank(k);
  if (L < 2) throw input_error("L must be at least 2");
  const double t = 3.0 * L * std::log(2.0 * k - 1.0);  // ln (2k-1)^{3L}
  double inner;                                        // 1 / (2(2k-1)^{3L} - 2)
  if (t > 700.0) {
    inner = 0.5 * std::exp(-t);
  } else {
    inner = 1.0 / (2.0 * std::exp(t) - 2.0);
  }
  return std::log1p(inner) / std::log(2.0 * k) / (3.0 * L);
}

double bound_lemma_ml(int k, double mu, int L) {
  check_rank(k);
  if (L < 2) throw input_error("L must be at least 2");
  if (!(mu > 0.0 && mu < 1.0)) throw input_error("mu must lie in (0,1)");
  const double log_q = std::log(2.0 * k - 1.0);
  return (((mu + 1.0) / 2.0) * log_q + 0.5 * std::log(6.0 * L)) / log_q;
}

double readable_count_bound_ln(int n, int k, double mu, int L, double ln_c) {
  check_rank(k);
  if (n < 1) throw input_error("length must be positive");
  return ln_c + (3.0 * L + 1.0) * std::log(mu * n) + n * std::log(6.0 * L) +
         mu * n * std::log(2.0 * k - 1.0);
}

}  // namespace ggl
