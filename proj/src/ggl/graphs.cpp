#include "ggl/graphs.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ggl/errors.hpp"
#include "ggl/rng.hpp"

namespace ggl {

LabeledGraph LabeledGraph::empty(int k, int vertices) {
  check_rank(k);
  if (vertices < 0) throw input_error("vertex count must be nonnegative");
  LabeledGraph g;
  g.rank = k;
  g.num_vertices = vertices;
  g.adj.assign(static_cast<std::size_t>(vertices), {});
  return g;
}

void LabeledGraph::add_edge(int u, int label, int v) {
  if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
    throw input_error("edge endpoint out of range");
  check_letters({label}, rank);
  adj[u].emplace_back(label, v);
  adj[v].emplace_back(-label, u);
}

int LabeledGraph::volume() const {
  std::size_t directed = 0;
  for (const auto& edges : adj) directed += edges.size();
  return static_cast<int>(directed / 2);
}

int LabeledGraph::degree_one_count() const {
  int count = 0;
  for (int v = 0; v < num_vertices; ++v)
    if (degree(v) == 1) ++count;
  return count;
}

bool LabeledGraph::is_folded() const {
  for (const auto& edges : adj) {
    std::set<int> seen;
    for (const auto& [label, target] : edges)
      if (!seen.insert(label).second) return false;
  }
  return true;
}

bool LabeledGraph::is_connected() const {
  if (num_vertices == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(num_vertices), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const auto& [label, target] : adj[v]) {
      if (!seen[target]) {
        seen[target] = 1;
        ++reached;
        queue.push(target);
      }
    }
  }
  return reached == num_vertices;
}

int LabeledGraph::cycle_rank() const {
  if (!is_connected()) throw input_error("rank requires a connected graph");
  return volume() - num_vertices + 1;
}

int LabeledGraph::out(int v, int label) const {
  for (const auto& [l, target] : adj[v])
    if (l == label) return target;
  return -1;
}

bool LabeledGraph::has_vertex_of_degree_below(int bound) const {
  for (int v = 0; v < num_vertices; ++v)
    if (degree(v) < bound) return true;
  return false;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // Returns the surviving root.
  int merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return a;
  }
};

}  // namespace

LabeledGraph fold(const LabeledGraph& g, std::optional<std::uint64_t> shuffle_seed) {
  // Collect one orientation per unordered edge (the positive-label one).
  std::vector<std::array<int, 3>> edges;
  for (int u = 0; u < g.num_vertices; ++u)
    for (const auto& [label, v] : g.adj[u])
      if (label > 0) edges.push_back({u, label, v});
  if (shuffle_seed) {
    Rng rng(*shuffle_seed);
    for (std::size_t i = edges.size(); i > 1; --i)
      std::swap(edges[i - 1], edges[rng.below(i)]);
  }

  UnionFind uf(g.num_vertices);
  bool changed = true;
  while (changed) {
    changed = false;
    // label-clash scan: (root vertex, label) -> root target
    std::map<std::pair<int, int>, int> slot;
    for (const auto& e : edges) {
      for (int dir = 0; dir < 2; ++dir) {
        int u = uf.find(dir ? e[2] : e[0]);
        int label = dir ? -e[1] : e[1];
        int v = uf.find(dir ? e[0] : e[2]);
        auto [it, inserted] = slot.emplace(std::make_pair(u, label), v);
        if (!inserted && uf.find(it->second) != v) {
          uf.merge(it->second, v);
          changed = true;
        }
      }
      if (changed) break;  // roots moved; rebuild the scan
    }
  }

  // Rebuild with compressed vertex ids, deduplicating collapsed edges.
  std::vector<int> id(static_cast<std::size_t>(g.num_vertices), -1);
  int next_id = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    int r = uf.find(v);
    if (id[r] == -1) id[r] = next_id++;
  }
  LabeledGraph out = LabeledGraph::empty(g.rank, next_id);
  std::set<std::array<int, 3>> seen;
  for (const auto& e : edges) {
    std::array<int, 3> key{id[uf.find(e[0])], e[1], id[uf.find(e[2])]};
    if (seen.insert(key).second) out.add_edge(key[0], key[1], key[2]);
  }
  if (g.base) out.base = id[uf.find(*g.base)];
  return out;
}

bool read_word(const LabeledGraph& folded, const Word& w, int* witness_start) {
  for (int start = 0; start < folded.num_vertices; ++start) {
    int cur = start;
    bool ok = true;
    for (int l : w.letters) {
      cur = folded.out(cur, l);
      if (cur == -1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (witness_start) *witness_start = start;
      return true;
    }
  }
  if (witness_start) *witness_start = -1;
  return false;
}

namespace {

std::string bfs_encoding(const LabeledGraph& g, int start, const std::vector<int>& component) {
  std::vector<int> order(static_cast<std::size_t>(g.num_vertices), -1);
  std::vector<int> queue;
  order[start] = 0;
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int idx = 0; idx < 2 * g.rank; ++idx) {
      int t = g.out(v, letter_at(idx));
      if (t != -1 && order[t] == -1) {
        order[t] = static_cast<int>(queue.size());
        queue.push_back(t);
      }
    }
  }
  std::ostringstream enc;
  enc << component.size() << ':';
  for (int v : queue) {
    for (int idx = 0; idx < 2 * g.rank; ++idx) {
      int t = g.out(v, letter_at(idx));
      enc << (t == -1 ? -1 : order[t]) << ',';
    }
    if (g.base && *g.base == v) enc << "B";
    enc << ';';
  }
  return enc.str();
}

}  // namespace

std::string canonical_form(const LabeledGraph& g) {
  if (!g.is_folded()) throw input_error("canonical form requires a folded graph");
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices), -1);
  int comp_count = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = comp_count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [label, t] : g.adj[u]) {
        if (comp[t] == -1) {
          comp[t] = comp_count;
          stack.push_back(t);
        }
      }
    }
    ++comp_count;
  }
  std::vector<std::vector<int>> members(static_cast<std::size_t>(comp_count));
  for (int v = 0; v < g.num_vertices; ++v) members[comp[v]].push_back(v);
  std::vector<std::string> keys;
  for (const auto& component : members) {
    std::string best;
    for (int start : component) {
      std::string enc = bfs_encoding(g, start, component);
      if (best.empty() || enc < best) best = std::move(enc);
    }
    keys.push_back(std::move(best));
  }
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& key : keys) out += key + "|";
  return out;
}

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.rank != b.rank) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string graph_to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.num_vertices;
  j["base"] = g.base ? nlohmann::json(*g.base) : nlohmann::json(nullptr);
  j["rank"] = g.rank;
  std::vector<std::array<int, 3>> edges;
  for (int u = 0; u < g.num_vertices; ++u)
    for (const auto& [label, v] : g.adj[u])
      if (label > 0) edges.push_back({u, label, v});
  std::sort(edges.begin(), edges.end());
  j["edges"] = edges;
  return j.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LabeledGraph g = LabeledGraph::empty(j.value("rank", 2), j.at("vertices").get<int>());
  if (!j.at("base").is_null()) g.base = j.at("base").get<int>();
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
  return g;
}

namespace {

std::mutex g_graph_cache_mutex;
// k -> levels, levels[e] = all connected folded graphs with e unordered
// edges. Deque levels: growing the cache never moves handed-out level
// references.
std::map<int, std::deque<std::vector<LabeledGraph>>> g_graph_cache;
// ranks whose next level already hit the class cap; retries fail fast
std::set<int> g_graph_cap_hit;

// Every connected folded graph with e+1 edges arises from one with e edges
// by adding either an edge between existing vertices (some cycle-closing
// edge when the graph is not a tree) or a leaf edge to a fresh vertex, so
// level-by-level extension with canonical deduplication is exhaustive.
void extend_level(int k, const std::vector<LabeledGraph>& level,
                  std::vector<LabeledGraph>& next_level) {
  std::set<std::string> seen;
  for (const LabeledGraph& g : level) {
    for (int u = 0; u < g.num_vertices; ++u) {
      for (int idx = 0; idx < 2 * k; ++idx) {
        int label = letter_at(idx);
        if (g.out(u, label) != -1) continue;
        // target: any existing vertex with a free inverse slot, or a new one
        for (int v = 0; v <= g.num_vertices; ++v) {
          if (v < g.num_vertices && g.out(v, -label) != -1) continue;
          LabeledGraph h = g;
          if (v == h.num_vertices) {
            h.num_vertices += 1;
            h.adj.emplace_back();
          }
          h.add_edge(u, label, v);
          std::string key = canonical_form(h);
          if (seen.insert(key).second) {
            if (next_level.size() >= kGraphLevelCap)
              throw capability_error("folded graph enumeration exceeds " +
                                     std::to_string(kGraphLevelCap) +
                                     " classes per volume level");
            next_level.push_back(std::move(h));
          }
        }
      }
    }
  }
}

}  // namespace

const std::vector<LabeledGraph>& connected_folded_graphs(int k, int edges) {
  check_rank(k);
  if (edges < 0) throw input_error("edge count must be nonnegative");
  std::lock_guard<std::mutex> lock(g_graph_cache_mutex);
  auto& levels = g_graph_cache[k];
  if (levels.empty()) levels.push_back({LabeledGraph::empty(k, 1)});
  while (static_cast<int>(levels.size()) <= edges) {
    if (g_graph_cap_hit.count(k))
      throw capability_error("folded graph enumeration exceeds " +
                             std::to_string(kGraphLevelCap) + " classes per volume level");
    std::vector<LabeledGraph> next_level;
    try {
      extend_level(k, levels.back(), next_level);
    } catch (const capability_error&) {
      g_graph_cap_hit.insert(k);
      throw;
    }
    levels.push_back(std::move(next_level));
  }
  return levels[static_cast<std::size_t>(edges)];
}

}  // namespace ggl
