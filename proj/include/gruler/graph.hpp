#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gruler {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id;
  VertexId src;
  VertexId dst;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph. Vertices are addressed by dense index
/// internally and by name in every user-facing report. Parallel edges and
/// self-loops are allowed. Immutable once built.
class Graph {
 public:
  /// Validates and builds. Edge ids are assigned in the order given.
  /// Throws MalformedInput on an empty vertex set or an out-of-range
  /// endpoint, DuplicateVertex on repeated names.
  static Graph build(std::vector<std::string> vertex_names,
                     std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& name(VertexId v) const;
  std::span<const std::string> names() const noexcept { return names_; }

  std::optional<VertexId> find(std::string_view name) const;
  /// Throws UnknownVertex.
  VertexId index_of(std::string_view name) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Incident edges in id order. Throw UnknownVertex for a bad index.
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;
  std::span<const EdgeId> out_edges(std::string_view v) const { return out_edges(index_of(v)); }
  std::span<const EdgeId> in_edges(std::string_view v) const { return in_edges(index_of(v)); }

  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_edges(v).size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;
  void check_vertex(VertexId v) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// A path as an edge sequence; the trivial path carries only its base vertex.
struct Path {
  VertexId base = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
};

/// True iff consecutive edges compose and, for the trivial path, the base
/// vertex exists.
bool is_valid_path(const Graph& g, const Path& p);

enum class GraphFormat { Json, Edgelist };

Graph parse_graph(std::string_view input, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Picks JSON when the first non-blank character is '{', edgelist otherwise.
GraphFormat detect_format(std::string_view input) noexcept;

}  // namespace gruler
