#include "gruler/serialize.hpp"

#include <array>
#include <cstdio>

#include <openssl/sha.h>

#include "gruler/error.hpp"
#include "gruler/shift_calculus.hpp"

namespace gruler {

using nlohmann::json;

json block_to_json(const ShiftBlock& b) {
  json j;
  j["kind"] = b.is_laurent() ? "L" : "K";
  if (b.is_laurent()) j["m"] = b.period;
  j["n"] = b.size();
  j["shifts"] = b.shifts;
  return j;
}

ShiftBlock block_from_json(const json& j) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::MalformedInput, why); };
  if (!j.is_object()) fail("block must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) fail("block needs a string 'kind'");
  if (!j.contains("shifts") || !j["shifts"].is_array()) fail("block needs a 'shifts' array");
  std::vector<std::int64_t> shifts;
  for (const auto& s : j["shifts"]) {
    if (!s.is_number_integer()) fail("shifts must be integers");
    shifts.push_back(s.get<std::int64_t>());
  }
  if (shifts.empty()) fail("block has no shifts");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() != static_cast<std::int64_t>(shifts.size())) {
      fail("'n' does not match the number of shifts");
    }
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "K") return ShiftBlock::ground_field(std::move(shifts));
  if (kind == "L") {
    if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<std::int64_t>() < 1) {
      fail("Laurent block needs a positive integer 'm'");
    }
    return ShiftBlock::laurent(j["m"].get<std::int64_t>(), std::move(shifts));
  }
  fail("unknown block kind '" + kind + "'");
  return {};
}

json rep_to_json(const GradedMatricialRep& rep, const Graph& g) {
  json blocks = json::array();
  for (const auto& rb : rep.blocks) {
    auto j = block_to_json(rb.block);
    j["notation"] = notation(rb.block);
    j["canonical_shifts"] = canonicalize_block(rb.block).shifts;
    j["source"] = describe_source(g, rb.source);
    blocks.push_back(std::move(j));
  }
  return json{{"blocks", std::move(blocks)}};
}

std::vector<ShiftBlock> parse_rep_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  const json* body = &doc;
  if (doc.is_object() && !doc.contains("blocks") && doc.contains("result")) body = &doc["result"];
  if (!body->is_object() || !body->contains("blocks") || !(*body)["blocks"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected an object with a 'blocks' array");
  }
  std::vector<ShiftBlock> out;
  for (const auto& b : (*body)["blocks"]) out.push_back(block_from_json(b));
  return out;
}

namespace {

json names_of(const Graph& g, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

}  // namespace

json witness_to_json(const PropertyWitness& w, const Graph& g) {
  return std::visit(
      [&](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ExitWitness>) {
          return {{"type", "exit_vertex"}, {"vertex", g.name(x.vertex)}};
        } else if constexpr (std::is_same_v<T, ReceivingSinkWitness>) {
          return {{"type", "receiving_sink"}, {"sink", g.name(x.sink)}};
        } else if constexpr (std::is_same_v<T, CycleWitness>) {
          return {{"type", "cycle_residues"},
                  {"cycle", names_of(g, x.cycle.vertices)},
                  {"base", g.name(x.cycle.base)},
                  {"length", x.cycle.length()},
                  {"residue_counts", x.residues.counts}};
        } else {
          return {{"type", "cycle_vertex"}, {"vertex", g.name(x.vertex)}};
        }
      },
      w);
}

json report_to_json(const PropertyReport& r, const Graph& g) {
  json j;
  j["verdicts"] = r.verdicts;
  j["witnesses"] = json::object();
  for (const auto& [name, w] : r.witnesses) j["witnesses"][name] = witness_to_json(w, g);
  j["classes"] = json::object();
  j["justifications"] = json::object();
  for (auto p : all_properties()) {
    const std::string name(property_name(p));
    j["classes"][name] = class_name(property_class(p));
    j["justifications"][name] = class_justification(property_class(p));
  }
  j["graph"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  j["representation"] = r.rep ? rep_to_json(*r.rep, g) : json(nullptr);
  return j;
}

json matrix_to_json(const HomogeneousMatrix& x, const ShiftBlock& b) {
  json rows = json::array();
  json entries = json::array();
  const auto n = x.coeffs.n;
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = x.coeffs.at(i, j);
      row.push_back(c);
      if (c == 0) continue;
      json e{{"row", i + 1}, {"col", j + 1}, {"coeff", c}};
      if (b.is_laurent()) e["x_power"] = x.degree - b.shifts[i] + b.shifts[j];
      entries.push_back(std::move(e));
    }
    rows.push_back(std::move(row));
  }
  return {{"degree", x.degree}, {"rows", std::move(rows)}, {"entries", std::move(entries)},
          {"text", matrix_to_text(x, b)}};
}

std::string matrix_to_text(const HomogeneousMatrix& x, const ShiftBlock& b) {
  std::string out;
  const auto n = x.coeffs.n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = x.coeffs.at(i, j);
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (c != 1) out += std::to_string(c) + "*";
      out += "e_" + std::to_string(i + 1) + (n > 9 ? "," : "") + std::to_string(j + 1);
      if (b.is_laurent()) {
        const auto p = x.degree - b.shifts[i] + b.shifts[j];
        if (p != 0) out += "*x^" + std::to_string(p);
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest.data());
  std::string out;
  out.reserve(2 * digest.size());
  char buf[3];
  for (auto byte : digest) {
    std::snprintf(buf, sizeof buf, "%02x", byte);
    out += buf;
  }
  return out;
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace gruler
