#include "gruler/graph_analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "gruler/error.hpp"

namespace gruler {

std::size_t ResidueCounts::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

bool ResidueCounts::all_equal() const noexcept {
  return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
}

ResidueCounts residue_counts(const std::vector<std::size_t>& lengths, std::size_t modulus) {
  if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  ResidueCounts r{modulus, std::vector<std::size_t>(modulus, 0)};
  for (std::size_t len : lengths) ++r.counts[len % modulus];
  return r;
}

bool is_rotation_of(const ResidueCounts& a, const ResidueCounts& b) {
  if (a.modulus != b.modulus || a.counts.size() != b.counts.size()) return false;
  const std::size_t m = a.counts.size();
  for (std::size_t shift = 0; shift < m; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < m && same; ++i) same = a.counts[i] == b.counts[(i + shift) % m];
    if (same) return true;
  }
  return m == 0;
}

std::vector<VertexId> find_sinks(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> receiving_sinks(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v : find_sinks(g)) {
    if (g.in_degree(v) > 0) out.push_back(v);
  }
  return out;
}

namespace {

// Iterative Tarjan; returns the component id of every vertex.
std::vector<std::size_t> strongly_connected_components(const Graph& g) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::size_t next_index = 0, next_comp = 0;

  struct Frame {
    VertexId v;
    std::size_t edge_pos;
  };
  std::vector<Frame> call;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      const auto outs = g.out_edges(f.v);
      if (f.edge_pos < outs.size()) {
        const VertexId w = g.edge(outs[f.edge_pos++]).dst;
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
    }
  }
  return comp;
}

void require_no_exit(const Graph& g) {
  if (auto v = find_exit_vertex(g)) {
    throw Error(ErrorCode::NotNoExit,
                "graph has a cycle with an exit at vertex '" + g.name(*v) + "'");
  }
}

bool on_cycle(const Graph& g, VertexId v) {
  const auto cyc = cycle_vertices(g);
  return std::binary_search(cyc.begin(), cyc.end(), v);
}

// Reverse enumeration of paths ending at `target`; never steps onto `barrier`.
// Returns sorted lengths, one per path.
std::vector<std::size_t> reverse_path_lengths(const Graph& g, VertexId target, VertexId barrier) {
  std::vector<std::size_t> lengths;
  std::vector<std::pair<VertexId, std::size_t>> stack{{target, 0}};
  while (!stack.empty()) {
    const auto [u, len] = stack.back();
    stack.pop_back();
    lengths.push_back(len);
    for (EdgeId e : g.in_edges(u)) {
      const VertexId w = g.edge(e).src;
      if (w == barrier) continue;
      stack.emplace_back(w, len + 1);
    }
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

std::vector<VertexId> cycle_vertices(const Graph& g) {
  const auto comp = strongly_connected_components(g);
  std::vector<std::size_t> comp_size(g.vertex_count(), 0);
  for (auto c : comp) ++comp_size[c];
  std::vector<bool> marked(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (comp_size[comp[v]] > 1) marked[v] = true;
  }
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) marked[e.src] = true;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (marked[v]) out.push_back(v);
  }
  return out;
}

bool is_acyclic(const Graph& g) { return cycle_vertices(g).empty(); }

std::optional<VertexId> find_exit_vertex(const Graph& g) {
  for (VertexId v : cycle_vertices(g)) {
    if (g.out_degree(v) != 1) return v;
  }
  return std::nullopt;
}

bool is_no_exit(const Graph& g) { return !find_exit_vertex(g).has_value(); }

std::vector<CycleData> enumerate_cycles(const Graph& g) {
  require_no_exit(g);
  std::vector<CycleData> cycles;
  std::vector<bool> seen(g.vertex_count(), false);
  // cycle_vertices is sorted, so the first unseen vertex of each cycle is its
  // least index.
  for (VertexId base : cycle_vertices(g)) {
    if (seen[base]) continue;
    CycleData c;
    c.base = base;
    c.class_id = cycles.size();
    VertexId v = base;
    do {
      seen[v] = true;
      const EdgeId e = g.out_edges(v).front();
      c.vertices.push_back(v);
      c.edges.push_back(e);
      v = g.edge(e).dst;
    } while (v != base);
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::vector<std::size_t> entry_paths(const Graph& g, VertexId v) {
  require_no_exit(g);
  if (!on_cycle(g, v)) {
    throw Error(ErrorCode::NotOnCycle, "vertex '" + g.name(v) + "' does not lie on a cycle");
  }
  return reverse_path_lengths(g, v, v);
}

std::vector<std::size_t> sink_paths(const Graph& g, VertexId s) {
  require_no_exit(g);
  if (g.out_degree(s) != 0) {
    throw Error(ErrorCode::NotASink, "vertex '" + g.name(s) + "' is not a sink");
  }
  // A sink can never be an intermediate vertex, so the barrier is never hit.
  return reverse_path_lengths(g, s, s);
}

EdlResult edl_check_at(const Graph& g, const CycleData& c, VertexId base) {
  if (std::find(c.vertices.begin(), c.vertices.end(), base) == c.vertices.end()) {
    throw Error(ErrorCode::NotOnCycle, "vertex '" + g.name(base) + "' is not on the given cycle");
  }
  EdlResult r;
  r.residues = residue_counts(entry_paths(g, base), c.length());
  r.holds = r.residues.all_equal();
  return r;
}

EdlResult edl_check(const Graph& g, const CycleData& c) { return edl_check_at(g, c, c.base); }

Condition2Result condition2_check(const Graph& g) {
  if (auto v = find_exit_vertex(g)) return {false, ExitWitness{*v}};
  if (auto sinks = receiving_sinks(g); !sinks.empty()) {
    return {false, ReceivingSinkWitness{sinks.front()}};
  }
  for (auto& c : enumerate_cycles(g)) {
    auto edl = edl_check(g, c);
    if (!edl.holds) return {false, CycleWitness{std::move(c), std::move(edl.residues)}};
  }
  return {true, std::monostate{}};
}

}  // namespace gruler
