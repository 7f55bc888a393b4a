#include "randic/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "overloaded.hpp"

namespace randic {
namespace {

using Json = nlohmann::ordered_json;

Json number(double value) { return std::isfinite(value) ? Json(value) : Json(nullptr); }

Json spec_to_json(const ExtremalSpec& spec) {
  return std::visit(Overloaded{
                        [](const family::BipartiteDeleted& b) {
                          return Json{{"type", "bipartite_deleted"}, {"n", b.n}, {"s", b.s}, {"t_size", b.t_size}};
                        },
                        [](const family::HubJoinOddCliques& h) {
                          return Json{{"type", "hub_join"}, {"q", h.q}, {"t", h.t}};
                        },
                    },
                    spec);
}

Json params_json(const TheoremId& t) {
  return std::visit(Overloaded{
                        [](const theorem::BipExtendK0& x) { return Json{{"n", x.n}, {"k", 0}}; },
                        [](const theorem::BipExtend& x) { return Json{{"n", x.n}, {"k", x.k}}; },
                        [](const theorem::ExtendPM& x) { return Json{{"n", x.n}, {"k", x.k}}; },
                        [](const theorem::PerfectMatching& x) { return Json{{"n", x.n}}; },
                        [](const theorem::FactorCritical& x) { return Json{{"p", x.p}, {"k", x.k}}; },
                        [](const theorem::NKD& x) {
                          return Json{{"p", x.p}, {"n", x.n}, {"k", x.k}, {"d", x.d}};
                        },
                    },
                    t);
}

Json threshold_json(const ThresholdReport& r) {
  return Json{{"closed_form", number(r.closed_form)},
              {"exact", number(r.exact)},
              {"argmax_spec", spec_to_json(r.argmax_spec)},
              {"discrepancy", number(r.discrepancy)}};
}

Json audit_json(const ClosedFormAudit& a) {
  Json branches = Json::array();
  for (const BranchValue& b : a.branches) {
    branches.push_back(Json{{"name", b.name},
                            {"printed", number(b.printed)},
                            {"family", number(b.family)},
                            {"discrepancy", number(b.discrepancy)}});
  }
  Json out{{"branches", branches}, {"sharp", a.sharp}};
  if (a.corollary) {
    const CorollaryCheck& c = *a.corollary;
    out["corollary"] = Json{{"formula", c.formula},
                            {"edge_bound", number(c.edge_bound)},
                            {"doubled", number(c.doubled)},
                            {"exact", number(c.exact)},
                            {"discrepancy", number(c.discrepancy)}};
  } else {
    out["corollary"] = nullptr;
  }
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double value) { return std::isnan(value) ? "" : format_number(value); }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string list_or_none(const std::vector<std::string>& items) { return items.empty() ? "none" : join(items, " "); }

std::string audit_text(const ClosedFormAudit& a) {
  std::ostringstream out;
  for (const BranchValue& b : a.branches) {
    out << "    " << b.name << ": printed " << format_number(b.printed) << ", family member "
        << format_number(b.family) << ", discrepancy " << format_number(b.discrepancy) << "\n";
  }
  out << "    sharp branch: " << a.sharp << "\n";
  if (a.corollary) {
    out << "    corollary " << a.corollary->formula << " = " << format_number(a.corollary->edge_bound)
        << " edges, doubled " << format_number(a.corollary->doubled) << ", discrepancy "
        << format_number(a.corollary->discrepancy) << "\n";
  }
  return out.str();
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::kText;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == std::trunc(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string spec_json(const ExtremalSpec& spec) { return spec_to_json(spec).dump(); }

std::string render(const TheoremId& t, const std::vector<ThresholdEntry>& entries, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json results = Json::array();
      for (const ThresholdEntry& e : entries) {
        results.push_back(Json{{"alpha", e.alpha}, {"threshold", threshold_json(e.report)}, {"audit", audit_json(e.audit)}});
      }
      const Json out{{"theorem", theorem_name(t)},
                     {"params", params_json(t)},
                     {"order", theorem_order(t)},
                     {"results", results}};
      return out.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::string out = "theorem,order,alpha,closed_form,exact,discrepancy,argmax_spec,sharp\n";
      for (const ThresholdEntry& e : entries) {
        out += csv_field(theorem_name(t)) + "," + std::to_string(theorem_order(t)) + "," + format_number(e.alpha) +
               "," + csv_number(e.report.closed_form) + "," + csv_number(e.report.exact) + "," +
               csv_number(e.report.discrepancy) + "," + csv_field(to_string(e.report.argmax_spec)) + "," +
               csv_field(e.audit.sharp) + "\n";
      }
      return out;
    }
    case OutputFormat::kText:
      break;
  }
  std::ostringstream out;
  out << theorem_name(t) << " on " << theorem_order(t) << " vertices\n";
  for (const ThresholdEntry& e : entries) {
    out << "alpha " << format_number(e.alpha) << ": exact " << format_number(e.report.exact) << " at "
        << to_string(e.report.argmax_spec) << ", closed form " << format_number(e.report.closed_form)
        << ", discrepancy " << format_number(e.report.discrepancy) << "\n";
    out << audit_text(e.audit);
  }
  return out.str();
}

std::string render(const VerificationReport& report, OutputFormat format, bool timing) {
  switch (format) {
    case OutputFormat::kJson: {
      Json results = Json::array();
      for (const AlphaOutcome& o : report.outcomes) {
        results.push_back(Json{{"alpha", o.alpha},
                               {"threshold", threshold_json(o.threshold)},
                               {"audit", audit_json(o.audit)},
                               {"above_exact", o.above_exact},
                               {"above_closed", o.above_closed},
                               {"exceptional_matches", o.exceptional_matches},
                               {"counterexamples", o.counterexamples},
                               {"closed_form_counterexamples", o.closed_form_counterexamples},
                               {"verdict", to_string(o.verdict)},
                               {"closed_form_verdict", to_string(o.closed_form_verdict)}});
      }
      Json out{{"theorem", theorem_name(report.theorem)},
               {"params", params_json(report.theorem)},
               {"order", theorem_order(report.theorem)},
               {"alphas", report.alphas},
               {"source", report.source},
               {"graphs_scanned", report.graphs_scanned},
               {"graphs_skipped", report.graphs_skipped},
               {"verdict", to_string(report.verdict)},
               {"results", results}};
      if (timing && report.wall_time_seconds) out["wall_time_seconds"] = *report.wall_time_seconds;
      return out.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::string out =
          "theorem,order,alpha,graphs_scanned,closed_form,exact,discrepancy,argmax_spec,above_exact,above_closed,"
          "exceptional_matches,counterexamples,closed_form_counterexamples,verdict,closed_form_verdict,sharp\n";
      for (const AlphaOutcome& o : report.outcomes) {
        out += csv_field(theorem_name(report.theorem)) + "," + std::to_string(theorem_order(report.theorem)) + "," +
               format_number(o.alpha) + "," + std::to_string(report.graphs_scanned) + "," +
               csv_number(o.threshold.closed_form) + "," + csv_number(o.threshold.exact) + "," +
               csv_number(o.threshold.discrepancy) + "," + csv_field(to_string(o.threshold.argmax_spec)) + "," +
               std::to_string(o.above_exact) + "," + std::to_string(o.above_closed) + "," +
               csv_field(join(o.exceptional_matches, " ")) + "," + csv_field(join(o.counterexamples, " ")) + "," +
               csv_field(join(o.closed_form_counterexamples, " ")) + "," + to_string(o.verdict) + "," +
               to_string(o.closed_form_verdict) + "," + csv_field(o.audit.sharp) + "\n";
      }
      return out;
    }
    case OutputFormat::kText:
      break;
  }
  std::ostringstream out;
  out << "theorem " << theorem_name(report.theorem) << " on " << theorem_order(report.theorem) << " vertices\n"
      << "source: " << report.source << "\n"
      << "graphs scanned: " << report.graphs_scanned << ", skipped: " << report.graphs_skipped << "\n";
  for (const AlphaOutcome& o : report.outcomes) {
    out << "alpha " << format_number(o.alpha) << "\n"
        << "  exact threshold " << format_number(o.threshold.exact) << " at " << to_string(o.threshold.argmax_spec)
        << "\n"
        << "  closed form " << format_number(o.threshold.closed_form) << " (discrepancy "
        << format_number(o.threshold.discrepancy) << ")\n"
        << audit_text(o.audit) << "  at or above exact: " << o.above_exact
        << ", at or above closed form: " << o.above_closed << "\n"
        << "  exceptional graphs seen: " << list_or_none(o.exceptional_matches) << "\n"
        << "  counterexamples: " << list_or_none(o.counterexamples) << "\n"
        << "  closed-form counterexamples: " << list_or_none(o.closed_form_counterexamples) << "\n"
        << "  verdict: " << to_string(o.verdict) << ", closed form: " << to_string(o.closed_form_verdict) << "\n";
  }
  out << "overall: " << to_string(report.verdict) << "\n";
  if (timing && report.wall_time_seconds) out << "wall time: " << format_number(*report.wall_time_seconds) << " s\n";
  return out.str();
}

std::string render(const CharacterizationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      const Json out{{"property", to_string(report.property)},
                     {"order", report.order},
                     {"graphs_scanned", report.graphs_scanned},
                     {"family", report.family},
                     {"found", report.found},
                     {"missing", report.missing},
                     {"unexpected", report.unexpected},
                     {"matches", report.matches()}};
      return out.dump(2) + "\n";
    }
    case OutputFormat::kCsv:
      return "property,order,graphs_scanned,family,found,missing,unexpected,matches\n" +
             csv_field(to_string(report.property)) + "," + std::to_string(report.order) + "," +
             std::to_string(report.graphs_scanned) + "," + std::to_string(report.family.size()) + "," +
             std::to_string(report.found.size()) + "," + csv_field(join(report.missing, " ")) + "," +
             csv_field(join(report.unexpected, " ")) + "," + (report.matches() ? "true" : "false") + "\n";
    case OutputFormat::kText:
      break;
  }
  std::ostringstream out;
  out << "maximal non-" << to_string(report.property) << " graphs on " << report.order << " vertices\n"
      << "graphs scanned: " << report.graphs_scanned << "\n"
      << "family classes: " << report.family.size() << ", maximal graphs found: " << report.found.size() << "\n"
      << "missing: " << list_or_none(report.missing) << "\n"
      << "unexpected: " << list_or_none(report.unexpected) << "\n"
      << (report.matches() ? "characterization matches" : "characterization differs") << "\n";
  return out.str();
}

std::string render(const MonotonicityReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json results = Json::array();
      for (const MonotonicityOutcome& o : report.outcomes) {
        results.push_back(Json{{"alpha", o.alpha},
                               {"claim", o.claim},
                               {"pairs_checked", o.pairs_checked},
                               {"violations", o.violations}});
      }
      const Json out{{"order", report.order},
                     {"graphs_scanned", report.graphs_scanned},
                     {"holds", report.holds()},
                     {"results", results}};
      return out.dump(2) + "\n";
    }
    case OutputFormat::kCsv: {
      std::string out = "order,alpha,claim,pairs_checked,violations\n";
      for (const MonotonicityOutcome& o : report.outcomes) {
        out += std::to_string(report.order) + "," + format_number(o.alpha) + "," + csv_field(o.claim) + "," +
               std::to_string(o.pairs_checked) + "," + std::to_string(o.violations.size()) + "\n";
      }
      return out;
    }
    case OutputFormat::kText:
      break;
  }
  std::ostringstream out;
  out << "edge monotonicity on " << report.order << " vertices, " << report.graphs_scanned << " graphs\n";
  for (const MonotonicityOutcome& o : report.outcomes) {
    out << "alpha " << format_number(o.alpha) << ": " << o.claim << " on " << o.pairs_checked << " pairs, "
        << o.violations.size() << " violations\n";
    for (const std::string& v : o.violations) out << "  " << v << "\n";
  }
  out << (report.holds() ? "holds" : "violated") << "\n";
  return out.str();
}

}  // namespace randic
