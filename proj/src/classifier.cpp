#include "gruler/classifier.hpp"

#include <array>

namespace gruler {

namespace {

constexpr std::array kProperties = {
    Property::GradedUnitRegular,     Property::GradedStableRange1,
    Property::GradedInternalCancellation, Property::WeakGradedUnitRegular,
    Property::GradedDirectlyFinite,  Property::InternalCancellation,
    Property::Cancellation,          Property::DirectlyFinite,
    Property::UnitRegular,           Property::Regular,
    Property::StableRange1,          Property::GradedRegular,
    Property::UrEpsilon,             Property::GradedSubstitution,
    Property::GradedCancellable,
};

}  // namespace

std::span<const Property> all_properties() noexcept { return kProperties; }

std::string_view property_name(Property p) noexcept {
  switch (p) {
    case Property::GradedUnitRegular: return "graded_unit_regular";
    case Property::GradedStableRange1: return "graded_stable_range_1";
    case Property::GradedInternalCancellation: return "graded_internal_cancellation";
    case Property::WeakGradedUnitRegular: return "weak_graded_unit_regular";
    case Property::GradedDirectlyFinite: return "graded_directly_finite";
    case Property::InternalCancellation: return "internal_cancellation";
    case Property::Cancellation: return "cancellation";
    case Property::DirectlyFinite: return "directly_finite";
    case Property::UnitRegular: return "unit_regular";
    case Property::Regular: return "regular";
    case Property::StableRange1: return "stable_range_1";
    case Property::GradedRegular: return "graded_regular";
    case Property::UrEpsilon: return "ur_epsilon";
    case Property::GradedSubstitution: return "graded_substitution";
    case Property::GradedCancellable: return "graded_cancellable";
  }
  return "";
}

std::optional<Property> property_from_name(std::string_view name) noexcept {
  for (auto p : kProperties) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

PropertyClass property_class(Property p) noexcept {
  switch (p) {
    case Property::GradedUnitRegular:
    case Property::GradedStableRange1:
    case Property::GradedInternalCancellation:
      return PropertyClass::Condition2;
    case Property::WeakGradedUnitRegular:
    case Property::GradedDirectlyFinite:
    case Property::InternalCancellation:
    case Property::Cancellation:
    case Property::DirectlyFinite:
      return PropertyClass::NoExit;
    case Property::UnitRegular:
    case Property::Regular:
    case Property::StableRange1:
      return PropertyClass::Acyclic;
    case Property::GradedRegular:
    case Property::UrEpsilon:
    case Property::GradedSubstitution:
    case Property::GradedCancellable:
      return PropertyClass::Always;
  }
  return PropertyClass::Always;
}

std::string_view class_name(PropertyClass c) noexcept {
  switch (c) {
    case PropertyClass::Condition2: return "no_exit_no_receiving_sink_equal_residues";
    case PropertyClass::NoExit: return "no_exit";
    case PropertyClass::Acyclic: return "acyclic";
    case PropertyClass::Always: return "any_finite_graph";
  }
  return "";
}

std::string_view class_justification(PropertyClass c) noexcept {
  switch (c) {
    case PropertyClass::Condition2:
      return "holds iff the graph is no-exit, no sink receives an edge, and for every cycle "
             "of length m the entry-path lengths are equidistributed modulo m";
    case PropertyClass::NoExit:
      return "holds iff every vertex on a cycle emits exactly one edge";
    case PropertyClass::Acyclic:
      return "holds iff the graph has no cycle";
    case PropertyClass::Always:
      return "holds for the Leavitt path algebra of every finite graph: it is graded regular "
             "and its zero component is a matricial algebra over the field";
  }
  return "";
}

PropertyReport classify(const Graph& g) {
  PropertyReport r;
  const auto cond2 = condition2_check(g);
  const auto exit_vertex = find_exit_vertex(g);
  const auto cyc = cycle_vertices(g);

  auto set = [&](PropertyClass cls, bool value, const std::optional<PropertyWitness>& w) {
    for (auto p : kProperties) {
      if (property_class(p) != cls) continue;
      const std::string name(property_name(p));
      r.verdicts[name] = value;
      if (!value && w) r.witnesses.emplace(name, *w);
    }
  };

  std::optional<PropertyWitness> cond2_witness;
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (!std::is_same_v<T, std::monostate>) cond2_witness = w;
      },
      cond2.witness);
  set(PropertyClass::Condition2, cond2.holds, cond2_witness);

  std::optional<PropertyWitness> exit_witness;
  if (exit_vertex) exit_witness = ExitWitness{*exit_vertex};
  set(PropertyClass::NoExit, !exit_vertex.has_value(), exit_witness);

  std::optional<PropertyWitness> cycle_witness;
  if (!cyc.empty()) cycle_witness = CycleVertexWitness{cyc.front()};
  set(PropertyClass::Acyclic, cyc.empty(), cycle_witness);

  set(PropertyClass::Always, true, std::nullopt);

  if (!exit_vertex) r.rep = build_rep(g);
  return r;
}

std::vector<std::string> diagram_violations(const PropertyReport& r) {
  std::vector<std::string> out;
  for (auto p : kProperties) {
    if (!r.verdicts.contains(std::string(property_name(p)))) {
      out.push_back("missing verdict " + std::string(property_name(p)));
    }
  }
  if (!out.empty()) return out;

  // Equal truth values within each class.
  std::map<PropertyClass, bool> class_value;
  for (auto p : kProperties) {
    const auto cls = property_class(p);
    const bool v = r.verdict(p);
    auto [it, fresh] = class_value.emplace(cls, v);
    if (!fresh && it->second != v) {
      out.push_back(std::string(property_name(p)) + " differs from its class " +
                    std::string(class_name(cls)));
    }
  }
  auto implies = [&](Property a, Property b) {
    if (r.verdict(a) && !r.verdict(b)) {
      out.push_back(std::string(property_name(a)) + " holds but " +
                    std::string(property_name(b)) + " fails");
    }
  };
  implies(Property::GradedUnitRegular, Property::WeakGradedUnitRegular);
  implies(Property::UnitRegular, Property::WeakGradedUnitRegular);
  implies(Property::GradedUnitRegular, Property::GradedCancellable);
  implies(Property::WeakGradedUnitRegular, Property::UrEpsilon);
  implies(Property::GradedStableRange1, Property::GradedDirectlyFinite);
  implies(Property::Regular, Property::GradedRegular);
  if (!r.verdict(Property::GradedRegular)) out.push_back("graded_regular must always hold");

  const bool no_exit = r.verdict(Property::DirectlyFinite);
  if (no_exit != r.rep.has_value()) out.push_back("representation present iff no-exit");
  return out;
}

}  // namespace gruler
