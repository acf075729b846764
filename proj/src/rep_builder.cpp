#include "gruler/rep_builder.hpp"

#include <algorithm>
#include <sstream>

#include "gruler/error.hpp"

namespace gruler {

ShiftBlock ShiftBlock::ground_field(std::vector<std::int64_t> shifts) {
  if (shifts.empty()) throw Error(ErrorCode::InvalidArgument, "a block needs at least one shift");
  return {BlockKind::GroundField, 1, std::move(shifts)};
}

ShiftBlock ShiftBlock::laurent(std::int64_t m, std::vector<std::int64_t> shifts) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "Laurent period must be positive");
  if (shifts.empty()) throw Error(ErrorCode::InvalidArgument, "a block needs at least one shift");
  return {BlockKind::Laurent, m, std::move(shifts)};
}

std::string notation(const ShiftBlock& b) {
  std::ostringstream os;
  os << "M_" << b.size() << '(';
  if (b.is_laurent()) {
    if (b.period == 1) {
      os << "K[x,x^-1]";
    } else {
      os << "K[x^" << b.period << ",x^-" << b.period << ']';
    }
  } else {
    os << 'K';
  }
  os << ")(";
  for (std::size_t i = 0; i < b.shifts.size(); ++i) os << (i ? "," : "") << b.shifts[i];
  os << ')';
  return os.str();
}

std::vector<ShiftBlock> GradedMatricialRep::shift_blocks() const {
  std::vector<ShiftBlock> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.block);
  return out;
}

namespace {

std::vector<std::int64_t> to_shifts(const std::vector<std::size_t>& lengths) {
  return {lengths.begin(), lengths.end()};
}

}  // namespace

GradedMatricialRep build_rep(const Graph& g) {
  return build_rep(g, [](const CycleData& c) { return c.base; });
}

GradedMatricialRep build_rep(const Graph& g, const BaseSelector& choose_base) {
  const auto cycles = enumerate_cycles(g);  // throws NotNoExit
  GradedMatricialRep rep;
  for (VertexId s : find_sinks(g)) {
    rep.blocks.push_back({ShiftBlock::ground_field(to_shifts(sink_paths(g, s))), SinkSource{s}});
  }
  for (const auto& c : cycles) {
    const VertexId base = choose_base(c);
    if (std::find(c.vertices.begin(), c.vertices.end(), base) == c.vertices.end()) {
      throw Error(ErrorCode::NotOnCycle, "selected base '" + g.name(base) + "' is not on the cycle");
    }
    auto block = ShiftBlock::laurent(static_cast<std::int64_t>(c.length()),
                                     to_shifts(entry_paths(g, base)));
    rep.blocks.push_back({std::move(block), CycleSource{c.class_id, base, c.vertices}});
  }
  return rep;
}

std::string describe_source(const Graph& g, const BlockSource& src) {
  if (const auto* s = std::get_if<SinkSource>(&src)) return "sink " + g.name(s->sink);
  const auto& c = std::get<CycleSource>(src);
  std::string out = "cycle";
  for (VertexId v : c.vertices) out += " " + g.name(v);
  out += " (base " + g.name(c.base) + ")";
  return out;
}

}  // namespace gruler
