#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gruler/error.hpp"
#include "gruler/graph.hpp"
#include "support/generators.hpp"

using namespace gruler;
using gruler::testing::Rng;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

Graph rose() { return parse_graph("v v\nv v\n", GraphFormat::Edgelist); }

}  // namespace

TEST_CASE("json single edge") {
  const Graph g =
      parse_graph(R"({"vertices":["v","w"],"edges":[{"src":"v","dst":"w"}]})", GraphFormat::Json);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.name(0) == "v");
  CHECK(g.edge(0).src == 0);
  CHECK(g.edge(0).dst == 1);
}

TEST_CASE("edgelist parallel edges") {
  const Graph g = parse_graph("a b\na b", GraphFormat::Edgelist);
  CHECK(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 2);
  for (const auto& e : g.edges()) {
    CHECK(g.name(e.src) == "a");
    CHECK(g.name(e.dst) == "b");
  }
  CHECK(g.edge(0).id == 0);
  CHECK(g.edge(1).id == 1);
}

TEST_CASE("edgelist comments, isolated vertices and first-appearance order") {
  const Graph g = parse_graph("# header\n\nvertex z\nb a\n  # indented comment\na c\n",
                              GraphFormat::Edgelist);
  REQUIRE(g.vertex_count() == 4);
  CHECK(g.name(0) == "z");
  CHECK(g.name(1) == "b");
  CHECK(g.name(2) == "a");
  CHECK(g.name(3) == "c");
  CHECK(g.out_edges("z").empty());
  CHECK(g.in_edges("z").empty());
}

TEST_CASE("json edges may be omitted") {
  const Graph g = parse_graph(R"({"vertices":["v"]})", GraphFormat::Json);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("empty vertex set is rejected") {
  CHECK(code_of([] { parse_graph(R"({"vertices":[],"edges":[]})", GraphFormat::Json); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graph("", GraphFormat::Edgelist); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graph("# nothing\n", GraphFormat::Edgelist); }) ==
        ErrorCode::MalformedInput);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_graph("{", GraphFormat::Json); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graph(R"({"edges":[]})", GraphFormat::Json); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graph(R"({"vertices":["v"],"edges":{}})", GraphFormat::Json); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":["v"],"edges":[{"src":"v"}]})", GraphFormat::Json);
        }) == ErrorCode::MalformedInput);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":["v"],"edges":[{"src":"v","dst":"w"}]})", GraphFormat::Json);
        }) == ErrorCode::UnknownVertex);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":["v","v"],"edges":[]})", GraphFormat::Json);
        }) == ErrorCode::DuplicateVertex);
  CHECK(code_of([] {
          parse_graph(R"({"vertices":[1],"edges":[]})", GraphFormat::Json);
        }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graph("a b c\n", GraphFormat::Edgelist); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graph("a\n", GraphFormat::Edgelist); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graph("vertex a\nvertex a\n", GraphFormat::Edgelist); }) ==
        ErrorCode::DuplicateVertex);
}

TEST_CASE("build validates endpoints") {
  const std::vector<std::pair<VertexId, VertexId>> bad{{0, 5}};
  CHECK(code_of([&] { Graph::build({"a"}, bad); }) == ErrorCode::MalformedInput);
}

TEST_CASE("incidence accessors") {
  const Graph r = rose();
  CHECK(r.out_edges("v").size() == 2);
  CHECK(r.in_edges("v").size() == 2);

  const Graph g = parse_graph("v w", GraphFormat::Edgelist);
  CHECK(g.out_edges("w").empty());
  REQUIRE(g.in_edges("w").size() == 1);
  CHECK(g.in_edges("w")[0] == 0);
  CHECK(code_of([&] { (void)g.out_edges("x"); }) == ErrorCode::UnknownVertex);
  CHECK(code_of([&] { (void)g.in_edges(VertexId{7}); }) == ErrorCode::UnknownVertex);
  CHECK(code_of([&] { (void)g.index_of("x"); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("paths") {
  const Graph g = parse_graph("a b\nb c\n", GraphFormat::Edgelist);
  CHECK(is_valid_path(g, Path{0, {}}));
  CHECK(is_valid_path(g, Path{0, {0, 1}}));
  CHECK_FALSE(is_valid_path(g, Path{0, {1, 0}}));
  CHECK_FALSE(is_valid_path(g, Path{9, {}}));
  CHECK(Path{0, {0, 1}}.length() == 2);
}

TEST_CASE("format detection") {
  CHECK(detect_format("  \n {\"vertices\":[]}") == GraphFormat::Json);
  CHECK(detect_format("a b") == GraphFormat::Edgelist);
  CHECK(detect_format("# {") == GraphFormat::Edgelist);
}

TEST_CASE("edgelist serialization refuses unrepresentable names") {
  const Graph spaced = parse_graph(R"({"vertices":["a b"],"edges":[]})", GraphFormat::Json);
  CHECK(code_of([&] { serialize_graph(spaced, GraphFormat::Edgelist); }) ==
        ErrorCode::MalformedInput);
  CHECK(parse_graph(serialize_graph(spaced, GraphFormat::Json), GraphFormat::Json) == spaced);
}

TEST_CASE("round trip and incidence partition on random graphs") {
  Rng rng(0x5eed'0001);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = gruler::testing::random_graph(rng, 8, 12);
    for (const auto fmt : {GraphFormat::Json, GraphFormat::Edgelist}) {
      const Graph back = parse_graph(serialize_graph(g, fmt), fmt);
      CHECK(back == g);
    }
    std::size_t out_total = 0;
    std::size_t in_total = 0;
    std::vector<int> seen_out(g.edge_count(), 0);
    std::vector<int> seen_in(g.edge_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      out_total += g.out_degree(v);
      in_total += g.in_degree(v);
      for (EdgeId e : g.out_edges(v)) {
        CHECK(g.edge(e).src == v);
        ++seen_out[e];
      }
      for (EdgeId e : g.in_edges(v)) {
        CHECK(g.edge(e).dst == v);
        ++seen_in[e];
      }
    }
    CHECK(out_total == g.edge_count());
    CHECK(in_total == g.edge_count());
    CHECK(std::all_of(seen_out.begin(), seen_out.end(), [](int c) { return c == 1; }));
    CHECK(std::all_of(seen_in.begin(), seen_in.end(), [](int c) { return c == 1; }));
  }
}
