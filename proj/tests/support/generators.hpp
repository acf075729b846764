#pragma once

// Seeded random inputs shared by the property and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gruler/graph.hpp"
#include "gruler/shift_block.hpp"

namespace gruler::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                        const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Graph::build(std::move(names), edges);
}

/// Arbitrary multigraph: 1..max_vertices vertices, 0..max_edges edges with
/// uniformly random endpoints (self-loops and parallel edges allowed).
inline Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  const std::size_t e = uniform(rng, 0, max_edges);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t k = 0; k < e; ++k) {
    edges.emplace_back(static_cast<VertexId>(uniform(rng, 0, n - 1)),
                       static_cast<VertexId>(uniform(rng, 0, n - 1)));
  }
  return make_graph(n, edges);
}

/// No-exit multigraph by construction: disjoint cycles whose vertices emit
/// only their cycle edge, plus a DAG of other vertices feeding into later DAG
/// vertices or into cycle vertices. Vertex indices are shuffled so cycle
/// vertices land anywhere in the order.
inline Graph random_no_exit_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  const std::size_t on_cycles = uniform(rng, 0, std::min(n, max_edges));
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t pos = 0;
  while (pos < on_cycles) {
    const std::size_t len = uniform(rng, 1, on_cycles - pos);
    for (std::size_t k = 0; k < len; ++k) {
      edges.emplace_back(perm[pos + k], perm[pos + (k + 1) % len]);
    }
    pos += len;
  }
  for (std::size_t i = on_cycles; i < n && edges.size() < max_edges; ++i) {
    const std::size_t out = uniform(rng, 0, 2);
    // Targets: later DAG vertices or any cycle vertex.
    const std::size_t choices = on_cycles + (n - i - 1);
    for (std::size_t k = 0; k < out && choices > 0 && edges.size() < max_edges; ++k) {
      std::size_t t = uniform(rng, 0, choices - 1);
      const VertexId dst = t < on_cycles ? perm[t] : perm[i + 1 + (t - on_cycles)];
      edges.emplace_back(perm[i], dst);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return make_graph(n, edges);
}

/// Same graph under a random vertex permutation, edge reordering and fresh
/// names.
inline Graph relabel(const Graph& g, Rng& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.src], perm[e.dst]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return make_graph(n, edges, "r");
}

/// Random shift list of length 1..max_n with values in [lo, hi].
inline std::vector<std::int64_t> random_shifts(Rng& rng, std::size_t max_n, std::int64_t lo,
                                               std::int64_t hi) {
  std::vector<std::int64_t> s(uniform(rng, 1, max_n));
  for (auto& x : s) x = uniform_int(rng, lo, hi);
  return s;
}

/// All shift lists of length n over {0, ..., base-1}, lexicographic.
inline std::vector<std::vector<std::int64_t>> all_shift_lists(std::size_t n, std::int64_t base) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == base - 1) cur[--k] = 0;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

}  // namespace gruler::testing
