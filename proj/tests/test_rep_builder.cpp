#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gruler/error.hpp"
#include "gruler/rep_builder.hpp"
#include "gruler/shift_calculus.hpp"
#include "support/generators.hpp"

using namespace gruler;
using gruler::testing::Rng;

namespace {

Graph edgelist(const char* text) { return parse_graph(text, GraphFormat::Edgelist); }

using Shifts = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("single edge") {
  const Graph g = edgelist("v w");
  const auto rep = build_rep(g);
  REQUIRE(rep.blocks.size() == 1);
  const auto& b = rep.blocks[0].block;
  CHECK(b.kind == BlockKind::GroundField);
  CHECK(b.shifts == Shifts{0, 1});
  CHECK(notation(b) == "M_2(K)(0,1)");
  REQUIRE(std::holds_alternative<SinkSource>(rep.blocks[0].source));
  CHECK(describe_source(g, rep.blocks[0].source).find('w') != std::string::npos);
}

TEST_CASE("chain into a two-cycle") {
  const Graph g = edgelist("a b\nb c1\nc1 c2\nc2 c1\n");
  const auto rep = build_rep(g);
  REQUIRE(rep.blocks.size() == 1);
  const auto& b = rep.blocks[0].block;
  CHECK(b.kind == BlockKind::Laurent);
  CHECK(b.period == 2);
  CHECK(b.shifts == Shifts{0, 1, 1, 2});
  CHECK(notation(b) == "M_4(K[x^2,x^-2])(0,1,1,2)");
  CHECK(canonicalize_block(b).shifts == Shifts{0, 0, 1, 1});
}

TEST_CASE("rose is refused") {
  try {
    build_rep(edgelist("v v\nv v\n"));
    FAIL("expected NotNoExit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNoExit);
  }
}

TEST_CASE("sinks first, then cycles") {
  const Graph g = edgelist("c c\nvertex s\na c\na s\n");
  const auto rep = build_rep(g);
  REQUIRE(rep.blocks.size() == 2);
  CHECK(rep.blocks[0].block.kind == BlockKind::GroundField);
  CHECK(rep.blocks[0].block.shifts == Shifts{0, 1});
  CHECK(rep.blocks[1].block.kind == BlockKind::Laurent);
  CHECK(rep.blocks[1].block.period == 1);
  CHECK(rep.blocks[1].block.shifts == Shifts{0, 1});
  CHECK(notation(rep.blocks[1].block) == "M_2(K[x,x^-1])(0,1)");
}

TEST_CASE("representation invariants on random no-exit graphs") {
  Rng rng(0x5eed'0003);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = gruler::testing::random_no_exit_graph(rng, 8, 12);
    const auto rep = build_rep(g);
    const auto sinks = find_sinks(g);
    const auto cycles = enumerate_cycles(g);
    REQUIRE(rep.blocks.size() == sinks.size() + cycles.size());

    std::size_t sink_blocks = 0;
    for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
      const auto& rb = rep.blocks[i];
      CHECK(std::is_sorted(rb.block.shifts.begin(), rb.block.shifts.end()));
      CHECK(rb.block.shifts.front() == 0);
      if (const auto* s = std::get_if<SinkSource>(&rb.source)) {
        ++sink_blocks;
        CHECK(rb.block.kind == BlockKind::GroundField);
        CHECK(rb.block.shifts.size() == sink_paths(g, s->sink).size());
      } else {
        const auto& c = std::get<CycleSource>(rb.source);
        CHECK(rb.block.kind == BlockKind::Laurent);
        CHECK(rb.block.period == static_cast<std::int64_t>(c.vertices.size()));
        CHECK(rb.block.shifts.size() == entry_paths(g, c.base).size());
        // Cycle subpaths realise every residue.
        CHECK(all_residues_present(rb.block));
        CHECK(laurent_block_graded_ur(rb.block) != UrVerdict::Undetermined);
      }
    }
    CHECK(sink_blocks == sinks.size());
    if (is_acyclic(g)) CHECK(sink_blocks == rep.blocks.size());
    if (sinks.empty()) CHECK(sink_blocks == 0);

    // Any choice of base vertex gives an isomorphic representation.
    const BaseSelector random_base = [&](const CycleData& c) {
      return c.vertices[gruler::testing::uniform(rng, 0, c.vertices.size() - 1)];
    };
    CHECK(reps_graded_isomorphic(rep, build_rep(g, random_base)));
  }
}
