#include "gruler/graph.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "gruler/error.hpp"

namespace gruler {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NotNoExit: return "NotNoExit";
    case ErrorCode::NotOnCycle: return "NotOnCycle";
    case ErrorCode::NotASink: return "NotASink";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::ComponentTooLarge: return "ComponentTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Graph Graph::build(std::vector<std::string> vertex_names,
                   std::span<const std::pair<VertexId, VertexId>> edges) {
  if (vertex_names.empty()) {
    throw Error(ErrorCode::MalformedInput, "graph has no vertices");
  }
  Graph g;
  g.index_.reserve(vertex_names.size());
  for (std::size_t i = 0; i < vertex_names.size(); ++i) {
    if (vertex_names[i].empty()) {
      throw Error(ErrorCode::MalformedInput, "empty vertex name");
    }
    auto [it, inserted] = g.index_.emplace(vertex_names[i], static_cast<VertexId>(i));
    if (!inserted) {
      throw Error(ErrorCode::DuplicateVertex, "duplicate vertex '" + vertex_names[i] + "'");
    }
  }
  g.names_ = std::move(vertex_names);
  g.out_.resize(g.names_.size());
  g.in_.resize(g.names_.size());
  g.edges_.reserve(edges.size());
  for (const auto& [src, dst] : edges) {
    if (src >= g.names_.size() || dst >= g.names_.size()) {
      throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
    }
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({id, src, dst});
    g.out_[src].push_back(id);
    g.in_[dst].push_back(id);
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= names_.size()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  }
}

const std::string& Graph::name(VertexId v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

std::span<const EdgeId> Graph::out_edges(VertexId v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const EdgeId> Graph::in_edges(VertexId v) const {
  check_vertex(v);
  return in_[v];
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.edges.empty()) return p.base < g.vertex_count();
  for (EdgeId e : p.edges) {
    if (e >= g.edge_count()) return false;
  }
  for (std::size_t k = 1; k < p.edges.size(); ++k) {
    if (g.edge(p.edges[k - 1]).dst != g.edge(p.edges[k]).src) return false;
  }
  return true;
}

namespace {

Graph parse_json(std::string_view input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected an object with a 'vertices' array");
  }
  std::vector<std::string> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorCode::MalformedInput, "vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  if (names.empty()) throw Error(ErrorCode::MalformedInput, "graph has no vertices");

  std::unordered_map<std::string, VertexId> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<VertexId>(i)).second) {
      throw Error(ErrorCode::DuplicateVertex, "duplicate vertex '" + names[i] + "'");
    }
  }
  auto lookup = [&](const nlohmann::json& field) {
    if (!field.is_string()) throw Error(ErrorCode::MalformedInput, "edge endpoints must be strings");
    auto it = index.find(field.get<std::string>());
    if (it == index.end()) {
      throw Error(ErrorCode::UnknownVertex,
                  "edge references undeclared vertex '" + field.get<std::string>() + "'");
    }
    return it->second;
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorCode::MalformedInput, "'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("src") || !e.contains("dst")) {
        throw Error(ErrorCode::MalformedInput, "each edge needs 'src' and 'dst'");
      }
      edges.emplace_back(lookup(e["src"]), lookup(e["dst"]));
    }
  }
  return Graph::build(std::move(names), edges);
}

Graph parse_edgelist(std::string_view input) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::pair<VertexId, VertexId>> edges;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<VertexId>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::istringstream lines{std::string(input)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty() || words.front().front() == '#') continue;
    if (words.size() != 2) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(lineno) + ": expected 'src dst' or 'vertex name'");
    }
    if (words[0] == "vertex") {
      if (index.contains(words[1])) {
        throw Error(ErrorCode::DuplicateVertex, "line " + std::to_string(lineno) +
                                                    ": vertex '" + words[1] + "' already declared");
      }
      intern(words[1]);
      continue;
    }
    const VertexId src = intern(words[0]);
    const VertexId dst = intern(words[1]);
    edges.emplace_back(src, dst);
  }
  if (names.empty()) throw Error(ErrorCode::MalformedInput, "graph has no vertices");
  return Graph::build(std::move(names), edges);
}

bool edgelist_safe(const std::string& name) {
  if (name == "vertex" || name.front() == '#') return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph parse_graph(std::string_view input, GraphFormat format) {
  return format == GraphFormat::Json ? parse_json(input) : parse_edgelist(input);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    nlohmann::json doc;
    doc["vertices"] = g.names();
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
      doc["edges"].push_back({{"src", g.name(e.src)}, {"dst", g.name(e.dst)}});
    }
    return doc.dump() + "\n";
  }
  // Declaring every vertex up front pins the vertex order on re-parse.
  std::string out;
  for (const auto& name : g.names()) {
    if (!edgelist_safe(name)) {
      throw Error(ErrorCode::MalformedInput,
                  "vertex name '" + name + "' cannot be written in edgelist format");
    }
    out += "vertex " + name + "\n";
  }
  for (const Edge& e : g.edges()) {
    out += g.name(e.src) + " " + g.name(e.dst) + "\n";
  }
  return out;
}

GraphFormat detect_format(std::string_view input) noexcept {
  for (char c : input) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? GraphFormat::Json : GraphFormat::Edgelist;
  }
  return GraphFormat::Edgelist;
}

}  // namespace gruler
