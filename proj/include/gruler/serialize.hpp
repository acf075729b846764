#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gruler/classifier.hpp"
#include "gruler/ff_oracle.hpp"
#include "gruler/graph.hpp"
#include "gruler/rep_builder.hpp"
#include "gruler/shift_block.hpp"

namespace gruler {

/// {"kind":"K"|"L", "m":int (Laurent only), "n":int, "shifts":[...]}
nlohmann::json block_to_json(const ShiftBlock& b);
/// Inverse of block_to_json; extra keys are ignored. Throws MalformedInput.
ShiftBlock block_from_json(const nlohmann::json& j);

/// Blocks annotated with notation, canonical shifts and source.
nlohmann::json rep_to_json(const GradedMatricialRep& rep, const Graph& g);

/// Accepts a bare {"blocks":[...]} document or a tool report whose "result"
/// holds one. Throws MalformedInput.
std::vector<ShiftBlock> parse_rep_document(std::string_view text);

nlohmann::json witness_to_json(const PropertyWitness& w, const Graph& g);
nlohmann::json report_to_json(const PropertyReport& r, const Graph& g);

/// Degree, dense coefficient rows, and the nonzero entries (1-based) with the
/// power of x each carries for Laurent blocks.
nlohmann::json matrix_to_json(const HomogeneousMatrix& x, const ShiftBlock& b);
/// `e_12 + 2*e_21` style rendering, with x powers for Laurent blocks.
std::string matrix_to_text(const HomogeneousMatrix& x, const ShiftBlock& b);

std::string sha256_hex(std::string_view data);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_document(const nlohmann::json& doc);

}  // namespace gruler
