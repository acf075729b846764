#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "gruler/graph.hpp"

namespace gruler {

/// A cycle of a no-exit graph, stored starting at its canonical base (the
/// on-cycle vertex with the least index). `edges[k]` leaves `vertices[k]`.
struct CycleData {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  VertexId base = 0;
  std::size_t class_id = 0;

  std::size_t length() const noexcept { return edges.size(); }
};

/// counts[i] = number of paths whose length is congruent to i modulo m.
struct ResidueCounts {
  std::size_t modulus = 1;
  std::vector<std::size_t> counts;

  std::size_t total() const noexcept;
  bool all_equal() const noexcept;
  friend bool operator==(const ResidueCounts&, const ResidueCounts&) = default;
};

ResidueCounts residue_counts(const std::vector<std::size_t>& lengths, std::size_t modulus);

/// True iff `b` is a cyclic rotation of `a` (same modulus).
bool is_rotation_of(const ResidueCounts& a, const ResidueCounts& b);

std::vector<VertexId> find_sinks(const Graph& g);
/// Sinks with in-degree at least one.
std::vector<VertexId> receiving_sinks(const Graph& g);
/// Vertices in a strongly connected component that contains an edge
/// (self-loops included), in index order.
std::vector<VertexId> cycle_vertices(const Graph& g);
bool is_acyclic(const Graph& g);
bool is_no_exit(const Graph& g);
/// A cycle vertex emitting more than one edge, if any.
std::optional<VertexId> find_exit_vertex(const Graph& g);

/// Cycles of a no-exit graph ordered by base index. Throws NotNoExit.
std::vector<CycleData> enumerate_cycles(const Graph& g);

/// Sorted lengths of the paths ending at cycle vertex `v` in which `v`
/// occurs only as the terminal vertex (trivial path included).
/// Throws NotNoExit, NotOnCycle.
std::vector<std::size_t> entry_paths(const Graph& g, VertexId v);

/// Sorted lengths of all paths ending at sink `s` (trivial path included).
/// Throws NotNoExit, NotASink.
std::vector<std::size_t> sink_paths(const Graph& g, VertexId s);

struct EdlResult {
  bool holds = false;
  ResidueCounts residues;
};

/// Residues of entry_paths at the cycle's canonical base, modulo its length.
EdlResult edl_check(const Graph& g, const CycleData& c);
/// Same check taken at an arbitrary vertex of the cycle.
EdlResult edl_check_at(const Graph& g, const CycleData& c, VertexId base);

struct ExitWitness {
  VertexId vertex;
};
struct ReceivingSinkWitness {
  VertexId sink;
};
struct CycleWitness {
  CycleData cycle;
  ResidueCounts residues;
};
using Condition2Witness =
    std::variant<std::monostate, ExitWitness, ReceivingSinkWitness, CycleWitness>;

struct Condition2Result {
  bool holds = false;
  /// First failing clause; monostate when the condition holds.
  Condition2Witness witness;
};

/// No-exit, no sink receives an edge, and every cycle has equally
/// distributed entry-path lengths.
Condition2Result condition2_check(const Graph& g);

}  // namespace gruler
