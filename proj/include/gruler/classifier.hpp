#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gruler/graph.hpp"
#include "gruler/graph_analysis.hpp"
#include "gruler/rep_builder.hpp"

namespace gruler {

enum class Property {
  GradedUnitRegular,
  GradedStableRange1,
  GradedInternalCancellation,
  WeakGradedUnitRegular,
  GradedDirectlyFinite,
  InternalCancellation,
  Cancellation,
  DirectlyFinite,
  UnitRegular,
  Regular,
  StableRange1,
  GradedRegular,
  UrEpsilon,
  GradedSubstitution,
  GradedCancellable,
};

/// Groups of properties that coincide for Leavitt path algebras of finite
/// graphs, each with the graph condition deciding it.
enum class PropertyClass {
  Condition2,  // no-exit, no receiving sinks, equal entry-length residues
  NoExit,
  Acyclic,
  Always,
};

std::span<const Property> all_properties() noexcept;
std::string_view property_name(Property p) noexcept;
std::optional<Property> property_from_name(std::string_view name) noexcept;
PropertyClass property_class(Property p) noexcept;
std::string_view class_name(PropertyClass c) noexcept;
/// Why the class verdict is what it is, in one sentence.
std::string_view class_justification(PropertyClass c) noexcept;

struct CycleVertexWitness {
  VertexId vertex;
};
using PropertyWitness = std::variant<ExitWitness, ReceivingSinkWitness, CycleWitness,
                                     CycleVertexWitness>;

struct PropertyReport {
  std::map<std::string, bool> verdicts;
  /// Only for false verdicts.
  std::map<std::string, PropertyWitness> witnesses;
  /// Present iff the graph is no-exit.
  std::optional<GradedMatricialRep> rep;

  bool verdict(Property p) const { return verdicts.at(std::string(property_name(p))); }
};

PropertyReport classify(const Graph& g);

/// Implication/equality constraints between verdicts that every report must
/// satisfy. Returns a description of each violated constraint.
std::vector<std::string> diagram_violations(const PropertyReport& r);

}  // namespace gruler
