#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "gruler/graph.hpp"
#include "gruler/graph_analysis.hpp"
#include "gruler/shift_block.hpp"

namespace gruler {

struct SinkSource {
  VertexId sink;
};
struct CycleSource {
  std::size_t class_id;
  VertexId base;
  std::vector<VertexId> vertices;
};
using BlockSource = std::variant<SinkSource, CycleSource>;

struct RepBlock {
  ShiftBlock block;
  BlockSource source;
};

/// Graded matricial representation of the Leavitt path algebra of a finite
/// no-exit graph: one matrix block over K per sink, one over K[x^m, x^-m] per
/// cycle of length m.
struct GradedMatricialRep {
  std::vector<RepBlock> blocks;

  std::vector<ShiftBlock> shift_blocks() const;
};

/// Chooses the on-cycle vertex whose entry paths define a cycle's block.
using BaseSelector = std::function<VertexId(const CycleData&)>;

/// Throws NotNoExit. Sink blocks come first (by sink index), then cycle
/// blocks (by base index); shift lists are sorted ascending.
GradedMatricialRep build_rep(const Graph& g);
GradedMatricialRep build_rep(const Graph& g, const BaseSelector& choose_base);

std::string describe_source(const Graph& g, const BlockSource& src);

}  // namespace gruler
