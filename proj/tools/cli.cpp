#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gruler/classifier.hpp"
#include "gruler/error.hpp"
#include "gruler/ff_oracle.hpp"
#include "gruler/graph.hpp"
#include "gruler/graph_analysis.hpp"
#include "gruler/rep_builder.hpp"
#include "gruler/serialize.hpp"
#include "gruler/shift_calculus.hpp"

namespace gruler::cli {

using nlohmann::json;

namespace {

struct Invocation {
  std::string command;
  std::string digest_source;
  json result;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  const auto text = read_file(path);
  GraphFormat fmt = detect_format(text);
  if (format == "json") fmt = GraphFormat::Json;
  if (format == "edgelist") fmt = GraphFormat::Edgelist;
  return parse_graph(text, fmt);
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string join_counts(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string witness_text(const PropertyWitness& w, const Graph& g) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ExitWitness>) {
          return "exit at " + g.name(x.vertex);
        } else if constexpr (std::is_same_v<T, ReceivingSinkWitness>) {
          return "sink " + g.name(x.sink) + " receives an edge";
        } else if constexpr (std::is_same_v<T, CycleWitness>) {
          std::string cyc;
          for (auto v : x.cycle.vertices) cyc += (cyc.empty() ? "" : " ") + g.name(v);
          return "cycle " + cyc + " residues (" + join_counts(x.residues.counts) + ") mod " +
                 std::to_string(x.cycle.length());
        } else {
          return "vertex " + g.name(x.vertex) + " lies on a cycle";
        }
      },
      w);
}

std::string rep_text(const GradedMatricialRep& rep, const Graph& g) {
  std::ostringstream os;
  for (const auto& b : rep.blocks) {
    os << std::left << std::setw(32) << notation(b.block) << " canonical ("
       << join(canonicalize_block(b.block).shifts) << ")  " << describe_source(g, b.source) << "\n";
  }
  return os.str();
}

Invocation do_analyze(const std::string& path, const std::string& format) {
  const Graph g = load_graph(path, format);
  const auto report = classify(g);
  Invocation inv{"analyze", serialize_graph(g, GraphFormat::Json), report_to_json(report, g), {}};

  std::ostringstream os;
  os << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (auto p : all_properties()) {
    const std::string name(property_name(p));
    os << std::left << std::setw(30) << name << std::setw(7)
       << (report.verdicts.at(name) ? "true" : "false");
    if (auto it = report.witnesses.find(name); it != report.witnesses.end()) {
      os << witness_text(it->second, g);
    }
    os << "\n";
  }
  if (report.rep) {
    os << "representation:\n" << rep_text(*report.rep, g);
  } else {
    os << "representation: none (graph has a cycle with an exit)\n";
  }
  inv.text = os.str();
  return inv;
}

Invocation do_rep(const std::string& path, const std::string& format) {
  const Graph g = load_graph(path, format);
  const auto rep = build_rep(g);
  return {"rep", serialize_graph(g, GraphFormat::Json), rep_to_json(rep, g), rep_text(rep, g)};
}

ShiftBlock make_block(const std::string& kind, std::optional<std::int64_t> m,
                      const std::vector<std::int64_t>& shifts) {
  if (kind == "K") {
    if (m) throw Error(ErrorCode::InvalidArgument, "--m applies only to --kind L");
    return ShiftBlock::ground_field(shifts);
  }
  if (!m) throw Error(ErrorCode::InvalidArgument, "--kind L requires --m");
  return ShiftBlock::laurent(*m, shifts);
}

json positions_json(const ComponentSupport& s) {
  json out = json::array();
  for (const auto& p : s.positions) out.push_back({p.row + 1, p.col + 1});
  return out;
}

Invocation do_check_shifts(const ShiftBlock& b) {
  const auto verdict = block_graded_ur(b);
  const auto canon = canonicalize_block(b);
  const auto blocking = find_blocking_degree(b);

  json r = block_to_json(b);
  r["notation"] = notation(b);
  r["canonical_shifts"] = canon.shifts;
  r["graded_unit_regular"] = to_string(verdict);
  if (b.is_laurent()) r["all_residues_present"] = all_residues_present(b);
  if (blocking) {
    const auto s = component_support(b, *blocking);
    r["blocking_component"] = {{"degree", *blocking}, {"support", positions_json(s)}};
  } else {
    r["blocking_component"] = nullptr;
  }

  std::ostringstream os;
  os << notation(b) << "\n"
     << "canonical shifts: (" << join(canon.shifts) << ")\n"
     << "graded unit-regular: " << to_string(verdict) << "\n";
  if (blocking) {
    os << "degree " << *blocking << " component has no invertible element (support";
    for (const auto& p : component_support(b, *blocking).positions) {
      os << " (" << p.row + 1 << "," << p.col + 1 << ")";
    }
    os << ")\n";
  }
  return {"check-shifts", block_to_json(b).dump(), std::move(r), os.str()};
}

Invocation do_oracle(const ShiftBlock& b, unsigned q) {
  const PrimeField field(q);  // validates q before any enumeration
  const auto opts = OracleOptions::from_environment();
  check_caps(b, opts);

  auto verdict_json = [&](const OracleVerdict& v) {
    json j{{"holds", v.holds}};
    j["counterexample"] = v.counterexample ? matrix_to_json(*v.counterexample, b) : json(nullptr);
    if (v.partner) j["partner"] = matrix_to_json(*v.partner, b);
    return j;
  };
  const auto reg = check_graded_regular(b, q, opts);
  const auto ur = check_graded_unit_regular(b, q, opts);
  const auto df = check_graded_directly_finite(b, q, opts);

  json r = block_to_json(b);
  r["notation"] = notation(b);
  r["q"] = q;
  r["graded_regular"] = verdict_json(reg);
  r["graded_unit_regular"] = verdict_json(ur);
  r["graded_directly_finite"] = verdict_json(df);
  r["criterion_graded_unit_regular"] = to_string(block_graded_ur(b));

  std::ostringstream os;
  os << notation(b) << " over F_" << q << "\n";
  auto line = [&](const char* label, const OracleVerdict& v) {
    os << std::left << std::setw(24) << label << (v.holds ? "true" : "false");
    if (v.counterexample) {
      os << "  counterexample x = " << matrix_to_text(*v.counterexample, b) << " (degree "
         << v.counterexample->degree << ")";
    }
    if (v.partner) os << ", y = " << matrix_to_text(*v.partner, b);
    os << "\n";
  };
  line("graded regular:", reg);
  line("graded unit-regular:", ur);
  line("graded directly finite:", df);
  os << "closed-form criterion:  " << to_string(block_graded_ur(b)) << "\n";

  json digest_src = block_to_json(b);
  digest_src["q"] = q;
  return {"oracle", digest_src.dump(), std::move(r), os.str()};
}

Invocation do_compare(const std::string& path_a, const std::string& path_b) {
  const auto a = parse_rep_document(read_file(path_a));
  const auto b = parse_rep_document(read_file(path_b));
  const bool iso = reps_graded_isomorphic(a, b);

  auto canon_list = [](const std::vector<ShiftBlock>& blocks) {
    std::vector<CanonicalBlock> cs;
    for (const auto& blk : blocks) cs.push_back(canonicalize_block(blk));
    std::sort(cs.begin(), cs.end());
    json out = json::array();
    for (const auto& c : cs) out.push_back(block_to_json(to_shift_block(c)));
    return out;
  };
  auto plain_list = [](const std::vector<ShiftBlock>& blocks) {
    json out = json::array();
    for (const auto& blk : blocks) out.push_back(block_to_json(blk));
    return out;
  };
  json r{{"isomorphic", iso}, {"canonical_a", canon_list(a)}, {"canonical_b", canon_list(b)}};
  const json digest_src{plain_list(a), plain_list(b)};
  return {"compare", digest_src.dump(), std::move(r),
          std::string(iso ? "graded isomorphic" : "not graded isomorphic") + "\n"};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::UnknownVertex:
    case ErrorCode::DuplicateVertex:
    case ErrorCode::InvalidArgument:
      return kBadInput;
    case ErrorCode::NotNoExit: return kNotNoExit;
    case ErrorCode::ComponentTooLarge: return kComponentTooLarge;
    case ErrorCode::NotOnCycle:
    case ErrorCode::NotASink:
    case ErrorCode::WrongKind:
      return kPrecondition;
  }
  return kPrecondition;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded cancellation properties of Leavitt path algebras of finite graphs",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "auto";
  bool text = false;
  bool json_flag = false;
  std::string graph_file, file_a, file_b, kind;
  std::int64_t m_value = 0;
  unsigned q = 2;
  std::vector<std::int64_t> shifts;

  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_flag("--text", text, "Human-readable output");
    sub->add_flag("--json", json_flag, "JSON output (default)");
  };
  auto add_graph_args = [&](CLI::App* sub) {
    sub->add_option("graph", graph_file, "Graph file")->required();
    sub->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "json", "edgelist"}));
    add_output_flags(sub);
  };

  auto* analyze = app.add_subcommand("analyze", "Decide every cancellation property of a graph");
  add_graph_args(analyze);
  auto* rep = app.add_subcommand("rep", "Print the graded matricial representation");
  add_graph_args(rep);

  CLI::Option* m_opts[2]{};
  auto add_block_args = [&](CLI::App* sub, std::size_t slot) {
    sub->add_option("--kind", kind, "K (ground field) or L (Laurent)")
        ->required()
        ->check(CLI::IsMember({"K", "L"}));
    m_opts[slot] = sub->add_option("--m", m_value, "Laurent period")->check(CLI::PositiveNumber);
    sub->add_option("shifts", shifts, "Shift list")->required();
    add_output_flags(sub);
  };
  auto* check = app.add_subcommand("check-shifts", "Graded unit-regularity of one matrix block");
  add_block_args(check, 0);
  auto* oracle = app.add_subcommand("oracle", "Brute-force graded checks over F_q");
  add_block_args(oracle, 1);
  oracle->add_option("--q", q, "Field order (2, 3, 5 or 7)");

  auto* compare = app.add_subcommand("compare", "Graded-isomorphism test of two representations");
  compare->add_option("a", file_a, "First representation file")->required();
  compare->add_option("b", file_b, "Second representation file")->required();
  add_output_flags(compare);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    Invocation inv;
    if (analyze->parsed()) {
      inv = do_analyze(graph_file, format);
    } else if (rep->parsed()) {
      inv = do_rep(graph_file, format);
    } else if (check->parsed() || oracle->parsed()) {
      const std::size_t slot = check->parsed() ? 0 : 1;
      std::optional<std::int64_t> m;
      if (m_opts[slot]->count() > 0) m = m_value;
      const auto block = make_block(kind, m, shifts);
      inv = check->parsed() ? do_check_shifts(block) : do_oracle(block, q);
    } else {
      inv = do_compare(file_a, file_b);
    }

    if (text) {
      out << inv.text;
    } else {
      const json doc{{"tool", kToolName},
                     {"version", kVersion},
                     {"command", inv.command},
                     {"input_digest", "sha256:" + sha256_hex(inv.digest_source)},
                     {"result", std::move(inv.result)}};
      out << dump_document(doc);
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace gruler::cli
