#include "randic/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "randic/extremal.hpp"
#include "randic/graph6.hpp"
#include "randic/harness.hpp"
#include "randic/indices.hpp"
#include "randic/properties.hpp"
#include "randic/report.hpp"
#include "randic/theorem.hpp"
#include "randic/thresholds.hpp"

namespace randic {
namespace {

using Json = nlohmann::ordered_json;

// Malformed flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto at = text.find(sep);
    out.push_back(text.substr(0, at));
    if (at == std::string_view::npos) return out;
    text.remove_prefix(at + 1);
  }
}

std::vector<double> parse_alphas(std::string_view text) {
  std::vector<double> out;
  for (std::string_view item : split(text, ',')) {
    double value = 0.0;
    const char* first = item.data();
    if (!item.empty() && item.front() == '+') ++first;
    const auto [end, ec] = std::from_chars(first, item.data() + item.size(), value, std::chars_format::fixed);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw UsageError("--alpha: '" + std::string(item) + "' is not a decimal number");
    }
    out.push_back(value);
  }
  return out;
}

int parse_count(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

PropertyKind parse_property_flag(const std::string& text) {
  try {
    return parse_property(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--property: ") + e.what());
  }
}

// hub:Q:T1,T2,... or bip:N,S,T
ExtremalSpec parse_spec(std::string_view text) {
  const std::vector<std::string_view> fields = split(text, ':');
  if (fields.size() == 3 && fields[0] == "hub") {
    family::HubJoinOddCliques spec{parse_count(fields[1], "--spec"), {}};
    for (std::string_view t : split(fields[2], ',')) spec.t.push_back(parse_count(t, "--spec"));
    return spec;
  }
  if (fields.size() == 2 && fields[0] == "bip") {
    const std::vector<std::string_view> n_s_t = split(fields[1], ',');
    if (n_s_t.size() == 3) {
      return family::BipartiteDeleted{parse_count(n_s_t[0], "--spec"), parse_count(n_s_t[1], "--spec"),
                                      parse_count(n_s_t[2], "--spec")};
    }
  }
  throw UsageError("--spec: expected hub:Q:T1,T2,... or bip:N,S,T");
}

struct GraphInput {
  std::string g6;
  std::string file;

  bool given() const { return !g6.empty() || !file.empty(); }

  // Graphs with their graph6 text as supplied.
  std::vector<std::pair<std::string, Graph>> load(std::istream& in) const {
    if (!g6.empty() && !file.empty()) throw UsageError("use either --g6 or --file, not both");
    if (!given()) throw UsageError("a graph is required: pass --g6 or --file");
    std::vector<std::pair<std::string, Graph>> out;
    if (!g6.empty()) {
      out.emplace_back(g6, graph6_decode(g6));
      return out;
    }
    const auto collect = [&out](const Graph& g, int) { out.emplace_back(graph6_encode(g), g); };
    if (file == "-") {
      read_graph6_stream(in, collect);
    } else {
      std::ifstream stream(file);
      if (!stream) throw std::invalid_argument("cannot open '" + file + "'");
      read_graph6_stream(stream, collect);
    }
    return out;
  }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_index(const std::vector<double>& alphas, const GraphInput& input, OutputFormat format, std::ostream& out,
              std::istream& in) {
  const auto graphs = input.load(in);
  Json rows = Json::array();
  std::string csv = "graph6,alpha,value\n";
  std::string text;
  for (const auto& [code, g] : graphs) {
    std::string line = code;
    for (double a : alphas) {
      const double value = zeroth_order_randic(g, Alpha(a));
      rows.push_back(Json{{"graph6", code}, {"alpha", a}, {"value", value}});
      csv += code + "," + format_number(a) + "," + format_number(value) + "\n";
      if (graphs.size() == 1) {
        text += format_number(value) + "\n";
      } else {
        line += " " + format_number(value);
      }
    }
    if (graphs.size() != 1) text += line + "\n";
  }
  if (format == OutputFormat::kJson) out << rows.dump(2) << "\n";
  if (format == OutputFormat::kCsv) out << csv;
  if (format == OutputFormat::kText) out << text;
  return kExitOk;
}

int cmd_check(const PropertyKind& prop, bool maximal, const GraphInput& input, OutputFormat format,
              std::ostream& out, std::istream& in) {
  const auto graphs = input.load(in);
  const bool bipartite = std::holds_alternative<property::BipExtendable>(prop);
  Json rows = Json::array();
  std::string csv = "graph6,property,maximal,result\n";
  std::string text;
  for (const auto& [code, g] : graphs) {
    std::optional<Bipartition> parts;
    if (bipartite) parts = two_coloring(g);
    bool result = false;
    if (!bipartite || parts) {
      result = maximal ? is_maximal_non_property(g, prop, parts) : has_property(g, prop, parts);
    }
    rows.push_back(Json{{"graph6", code}, {"property", to_string(prop)}, {"maximal", maximal}, {"result", result}});
    csv += code + "," + to_string(prop) + "," + bool_text(maximal) + "," + bool_text(result) + "\n";
    text += (graphs.size() == 1 ? "" : code + " ") + bool_text(result) + "\n";
  }
  if (format == OutputFormat::kJson) out << rows.dump(2) << "\n";
  if (format == OutputFormat::kCsv) out << csv;
  if (format == OutputFormat::kText) out << text;
  return kExitOk;
}

int cmd_construct(const std::vector<ExtremalSpec>& specs, OutputFormat format, std::ostream& out) {
  Json rows = Json::array();
  std::string csv = "spec,graph6\n";
  std::string text;
  for (const ExtremalSpec& spec : specs) {
    const std::string code = graph6_encode(build_extremal(spec).graph);
    rows.push_back(Json{{"spec", Json::parse(spec_json(spec))}, {"label", to_string(spec)}, {"graph6", code}});
    csv += "\"" + to_string(spec) + "\"," + code + "\n";
    text += code + "\n";
  }
  if (format == OutputFormat::kJson) out << rows.dump(2) << "\n";
  if (format == OutputFormat::kCsv) out << csv;
  if (format == OutputFormat::kText) out << text;
  return kExitOk;
}

int cmd_enumerate(const GraphClassFilter& filter, bool labelled, bool count_only, OutputFormat format,
                  std::ostream& out) {
  const std::vector<SourceGraph> graphs = enumerate_graphs(filter, !labelled);
  std::vector<std::string> codes;
  if (!count_only) {
    for (const SourceGraph& s : graphs) codes.push_back(graph6_encode(s.graph));
  }
  if (format == OutputFormat::kJson) {
    Json doc{{"order", filter.order}, {"count", graphs.size()}};
    if (!count_only) doc["graphs"] = codes;
    out << doc.dump(2) << "\n";
  } else if (count_only) {
    out << (format == OutputFormat::kCsv ? "count\n" : "") << graphs.size() << "\n";
  } else {
    if (format == OutputFormat::kCsv) out << "graph6\n";
    for (const std::string& c : codes) out << c << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Zeroth-order general Randic index and matching-extendability toolkit", "randic"};
  app.require_subcommand(1);

  std::string alpha_text;
  std::string property_text;
  std::string theorem_text;
  std::string spec_text;
  std::string format_text = "text";
  GraphInput input;
  int order = -1;
  int jobs = 1;
  bool maximal = false;
  bool timing = false;
  bool all = false;
  bool connected = false;
  bool perfect = false;
  bool bipartite = false;
  bool labelled = false;
  bool count_only = false;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  const auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("--g6", input.g6, "One headerless graph6 token");
    cmd->add_option("--file", input.file, "File of graph6 lines ('-' for standard input)");
  };

  CLI::App* index = app.add_subcommand("index", "Zeroth-order general Randic index of graphs");
  index->add_option("--alpha", alpha_text, "Comma-separated exponents")->required();
  add_graph_input(index);
  add_format(index);

  CLI::App* check = app.add_subcommand("check", "Test a matching property");
  check->add_option("--property", property_text, "pm | ext:K | bipext:K | fc:K | nkd:N,K,D")->required();
  check->add_flag("--maximal", maximal, "Test maximal non-P instead of P");
  add_graph_input(check);
  add_format(check);

  CLI::App* construct = app.add_subcommand("construct", "Emit maximal non-P family members as graph6");
  construct->add_option("--property", property_text, "Family to list");
  construct->add_option("--order", order, "Number of vertices");
  construct->add_flag("--all", all, "Every composition instead of one per isomorphism class");
  construct->add_option("--spec", spec_text, "Single member: hub:Q:T1,T2,... or bip:N,S,T");
  add_format(construct);

  CLI::App* threshold = app.add_subcommand("threshold", "Closed-form and exact thresholds");
  threshold->add_option("--theorem", theorem_text, "Theorem property, e.g. pm or ext:1")->required();
  threshold->add_option("--order", order, "Number of vertices")->required();
  threshold->add_option("--alpha", alpha_text, "Comma-separated exponents")->required();
  add_format(threshold);

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive theorem check (--theorem mono: edge monotonicity)");
  verify->add_option("--theorem", theorem_text, "Theorem property or 'mono'")->required();
  verify->add_option("--order", order, "Number of vertices")->required();
  verify->add_option("--alpha", alpha_text, "Comma-separated exponents")->required();
  verify->add_option("--file", input.file, "Scan graph6 lines instead of the built-in generator");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "Include wall time in the report");
  add_format(verify);

  CLI::App* maximal_cmd = app.add_subcommand("maximal", "Compare maximal non-P graphs with the characterised family");
  maximal_cmd->add_option("--property", property_text, "Property")->required();
  maximal_cmd->add_option("--order", order, "Number of vertices")->required();
  maximal_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(maximal_cmd);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List graphs of one order");
  enumerate->add_option("--order", order, "Number of vertices")->required();
  enumerate->add_flag("--connected", connected, "Connected graphs only");
  enumerate->add_flag("--pm", perfect, "Graphs with a perfect matching only");
  enumerate->add_flag("--bipartite", bipartite, "Connected balanced bipartite graphs");
  enumerate->add_flag("--labelled", labelled, "Every labelled graph instead of one per class");
  enumerate->add_flag("--count", count_only, "Print only the number of graphs");
  add_format(enumerate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_text);
    if (index->parsed()) return cmd_index(parse_alphas(alpha_text), input, format, out, in);
    if (check->parsed()) return cmd_check(parse_property_flag(property_text), maximal, input, format, out, in);

    if (construct->parsed()) {
      if (!spec_text.empty()) {
        if (!property_text.empty() || order >= 0) throw UsageError("--spec excludes --property and --order");
        return cmd_construct({parse_spec(spec_text)}, format, out);
      }
      if (property_text.empty() || order < 0) throw UsageError("construct needs --spec or --property with --order");
      const PropertyKind prop = parse_property_flag(property_text);
      return cmd_construct(all ? enumerate_family(prop, order) : enumerate_family_classes(prop, order), format, out);
    }

    if (threshold->parsed()) {
      parse_property_flag(theorem_text);
      const TheoremId t = make_theorem(theorem_text, order);
      std::vector<ThresholdEntry> entries;
      for (double a : parse_alphas(alpha_text)) entries.push_back({a, exact_threshold(t, a), audit_closed_form(t, a)});
      out << render(t, entries, format);
      return kExitOk;
    }

    if (verify->parsed()) {
      const std::vector<double> alphas = parse_alphas(alpha_text);
      if (theorem_text == "mono") {
        if (!input.file.empty()) throw UsageError("--file is not used with --theorem mono");
        const MonotonicityReport report = verify_monotonicity(alphas, order);
        out << render(report, format);
        return report.holds() ? kExitOk : kExitCounterexample;
      }
      parse_property_flag(theorem_text);
      const TheoremId t = make_theorem(theorem_text, order);
      GraphSource source;
      if (input.file.empty()) {
        source = builtin_source(t);
      } else {
        std::vector<Graph> graphs;
        for (auto& [code, g] : input.load(in)) graphs.push_back(std::move(g));
        source = external_source(t, graphs, "graph6: " + input.file);
      }
      const VerificationReport report = verify_theorem(t, alphas, source, jobs);
      out << render(report, format, timing);
      return report.verdict == Verdict::kViolated ? kExitCounterexample : kExitOk;
    }

    if (maximal_cmd->parsed()) {
      const CharacterizationReport report = verify_characterization(parse_property_flag(property_text), order, jobs);
      out << render(report, format);
      return report.matches() ? kExitOk : kExitCounterexample;
    }

    if (enumerate->parsed()) {
      GraphClassFilter filter;
      filter.order = order;
      filter.connected = connected || bipartite;
      filter.perfect_matching = perfect;
      filter.bipartite_balanced = bipartite;
      return cmd_enumerate(filter, labelled, count_only, format, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "graph6 error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace randic
