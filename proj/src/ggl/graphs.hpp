#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggl/words.hpp"

namespace ggl {

// Finite graph with edges labelled by letters of F_k. Every edge is stored
// in both orientations: (u, l, v) present iff (v, -l, u) present. Volume is
// the number of unordered edges; parallel equal-label edges may exist until
// the graph is folded.
struct LabeledGraph {
  int rank = 2;
  int num_vertices = 0;
  std::optional<int> base;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (label, target)

  static LabeledGraph empty(int k, int vertices);

  void add_edge(int u, int label, int v);  // inserts both orientations
  int volume() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int degree_one_count() const;
  bool is_folded() const;
  bool is_connected() const;
  // First Betti number E - V + 1; requires a connected graph.
  int cycle_rank() const;
  // Folded lookup: target of the label-edge at v, or -1.
  int out(int v, int label) const;

  bool has_vertex_of_degree_below(int bound) const;
};

// Stallings folding: repeatedly identify the targets of equal-label edges at
// a common vertex (union-find worklist). The optional seed shuffles the
// processing order; the result is isomorphism-invariant either way.
LabeledGraph fold(const LabeledGraph& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// True iff some start vertex admits a label-following path spelling w. In a
// folded graph such a path is automatically immersed for freely reduced w.
bool read_word(const LabeledGraph& folded, const Word& w, int* witness_start = nullptr);

// Isomorphism-invariant key for folded graphs: per component, the minimum
// over start vertices of a BFS encoding (transitions visited in label
// order); component keys sorted. Exact because folded transitions are
// deterministic.
std::string canonical_form(const LabeledGraph& folded);
bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);

// JSON with fields vertices, base, edges as [source, label, target], one
// orientation per unordered edge (positive label; loops listed once).
std::string graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

// All connected folded graphs over F_k with exactly `edges` unordered
// edges, one representative per isomorphism class. Grown level by level;
// results are cached process-wide. Levels past kGraphLevelCap classes
// throw capability_error (the class count grows by roughly an order of
// magnitude per edge).
inline constexpr std::size_t kGraphLevelCap = 120'000;
const std::vector<LabeledGraph>& connected_folded_graphs(int k, int edges);

}  // namespace ggl
