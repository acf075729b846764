#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gruler/classifier.hpp"
#include "gruler/shift_calculus.hpp"
#include "support/generators.hpp"

using namespace gruler;
using gruler::testing::Rng;

namespace {

Graph edgelist(const char* text) { return parse_graph(text, GraphFormat::Edgelist); }

bool v(const PropertyReport& r, const char* name) { return r.verdicts.at(name); }

}  // namespace

TEST_CASE("property table") {
  CHECK(all_properties().size() == 15);
  for (Property p : all_properties()) {
    CHECK(property_from_name(property_name(p)) == p);
    CHECK_FALSE(class_justification(property_class(p)).empty());
  }
  CHECK_FALSE(property_from_name("nonsense").has_value());
  CHECK(property_class(Property::GradedStableRange1) == PropertyClass::Condition2);
  CHECK(property_class(Property::Cancellation) == PropertyClass::NoExit);
  CHECK(property_class(Property::StableRange1) == PropertyClass::Acyclic);
  CHECK(property_class(Property::GradedCancellable) == PropertyClass::Always);
}

TEST_CASE("single edge") {
  const Graph g = edgelist("v w");
  const auto r = classify(g);
  CHECK_FALSE(v(r, "graded_unit_regular"));
  CHECK(v(r, "unit_regular"));
  CHECK(v(r, "internal_cancellation"));
  const auto& w = r.witnesses.at("graded_unit_regular");
  REQUIRE(std::holds_alternative<ReceivingSinkWitness>(w));
  CHECK(g.name(std::get<ReceivingSinkWitness>(w).sink) == "w");
  CHECK(r.witnesses.count("unit_regular") == 0);
  CHECK(r.rep.has_value());
}

TEST_CASE("entry into a two-cycle") {
  const Graph g = edgelist("a c1\nc1 c2\nc2 c1\n");
  const auto r = classify(g);
  CHECK_FALSE(v(r, "graded_unit_regular"));
  CHECK(v(r, "directly_finite"));
  CHECK_FALSE(v(r, "unit_regular"));
  const auto& w = r.witnesses.at("graded_stable_range_1");
  REQUIRE(std::holds_alternative<CycleWitness>(w));
  CHECK(std::get<CycleWitness>(w).residues.counts == std::vector<std::size_t>{1, 2});
  REQUIRE(std::holds_alternative<CycleVertexWitness>(r.witnesses.at("regular")));
}

TEST_CASE("graded unit-regular graphs") {
  for (const char* text : {"a b\nb c1\nc1 c2\nc2 c1\n", "a c1\nc1 c2\nc2 c1\nb c2\n"}) {
    const auto r = classify(edgelist(text));
    CHECK(v(r, "graded_unit_regular"));
    CHECK(v(r, "graded_internal_cancellation"));
    CHECK(v(r, "cancellation"));
    CHECK_FALSE(v(r, "stable_range_1"));
  }
}

TEST_CASE("rose with two loops") {
  const Graph g = edgelist("v v\nv v\n");
  const auto r = classify(g);
  for (const char* name :
       {"graded_unit_regular", "graded_stable_range_1", "graded_internal_cancellation",
        "weak_graded_unit_regular", "graded_directly_finite", "internal_cancellation",
        "cancellation", "directly_finite", "unit_regular", "regular", "stable_range_1"}) {
    CHECK_MESSAGE(!v(r, name), name);
  }
  for (const char* name : {"graded_regular", "ur_epsilon", "graded_substitution",
                           "graded_cancellable"}) {
    CHECK_MESSAGE(v(r, name), name);
  }
  REQUIRE(std::holds_alternative<ExitWitness>(r.witnesses.at("directly_finite")));
  CHECK(std::holds_alternative<ExitWitness>(r.witnesses.at("graded_unit_regular")));
  CHECK_FALSE(r.rep.has_value());
  CHECK(diagram_violations(r).empty());
}

TEST_CASE("diagram violations are detected") {
  auto r = classify(edgelist("v w"));
  REQUIRE(diagram_violations(r).empty());
  auto broken = r;
  broken.verdicts["cancellation"] = false;
  CHECK_FALSE(diagram_violations(broken).empty());
  broken = r;
  broken.verdicts["graded_unit_regular"] = true;
  broken.verdicts["graded_stable_range_1"] = true;
  broken.verdicts["graded_internal_cancellation"] = true;
  broken.verdicts["graded_cancellable"] = false;
  CHECK_FALSE(diagram_violations(broken).empty());
  broken = r;
  broken.rep.reset();
  CHECK_FALSE(diagram_violations(broken).empty());
  broken = r;
  broken.verdicts.erase("regular");
  CHECK_FALSE(diagram_violations(broken).empty());
}

TEST_CASE("reports on random graphs") {
  Rng rng(0x5eed'0301);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = trial % 2 == 0 ? gruler::testing::random_no_exit_graph(rng, 8, 12)
                                   : gruler::testing::random_graph(rng, 8, 12);
    const auto r = classify(g);
    const auto violations = diagram_violations(r);
    CHECK_MESSAGE(violations.empty(), (violations.empty() ? "" : violations.front()));

    // Class verdicts against the graph predicates.
    CHECK(r.verdict(Property::GradedUnitRegular) == condition2_check(g).holds);
    CHECK(r.verdict(Property::DirectlyFinite) == is_no_exit(g));
    CHECK(r.verdict(Property::Regular) == is_acyclic(g));
    for (const auto& [name, value] : r.verdicts) {
      CHECK((r.witnesses.count(name) == 1) == !value);
    }

    // Same verdicts after relabelling.
    CHECK(classify(gruler::testing::relabel(g, rng)).verdicts == r.verdicts);

    if (!r.rep) continue;
    bool all_blocks_ur = true;
    for (const auto& rb : r.rep->blocks) {
      all_blocks_ur = all_blocks_ur && block_graded_ur(rb.block) == UrVerdict::True;
    }
    CHECK(all_blocks_ur == r.verdict(Property::GradedUnitRegular));
    if (!r.verdict(Property::GradedUnitRegular) && receiving_sinks(g).empty()) {
      const auto& w = std::get<CycleWitness>(r.witnesses.at("graded_unit_regular"));
      bool matched = false;
      for (const auto& rb : r.rep->blocks) {
        const auto* src = std::get_if<CycleSource>(&rb.source);
        if (!src || src->class_id != w.cycle.class_id) continue;
        CHECK(laurent_block_graded_ur(rb.block) == UrVerdict::False);
        std::vector<std::size_t> lengths(rb.block.shifts.begin(), rb.block.shifts.end());
        CHECK(residue_counts(lengths, w.cycle.length()) == w.residues);
        matched = true;
      }
      CHECK(matched);
    }
  }
}
