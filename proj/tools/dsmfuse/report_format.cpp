#include "report_format.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dsmfuse/error.hpp"
#include "json_codec.hpp"

namespace dsmfuse::cli {

namespace {

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

// Column widths from content so tables stay aligned for long propositions.
std::string render_table(const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c] + 2);
    }
    out += line + "\n";
  }
  return out;
}

std::string optional_number(const std::optional<double>& value) { return value ? format_number(*value) : "-"; }

const Frame& engine_frame(const FusionReport& report, const EngineReport& engine) {
  return engine.model ? engine.model->frame() : report.frame;
}

std::string status_label(const EngineReport& engine) {
  if (engine.status == EngineStatus::ok) return "ok";
  return engine.message.empty() ? std::string(to_string(engine.status)) : engine.message;
}

void append_engine_table(std::string& out, const FusionReport& report, const EngineReport& engine) {
  out += "== " + std::string(to_string(engine.engine)) + " [" + status_label(engine) + "] ==\n";
  for (const auto& w : engine.warnings) out += "  warning: " + w + "\n";

  if (!engine.stages.empty()) {
    std::vector<std::vector<std::string>> rows{{"stage", "conflict_mass", "K"}};
    for (const auto& s : engine.stages) {
      rows.push_back({s.stage, format_number(s.conflict_mass), optional_number(s.normalization_constant)});
    }
    out += render_table(rows, "  ");
  }
  if (engine.fused) {
    std::vector<std::vector<std::string>> rows{{"focal element", "mass"}};
    for (const auto& [focal, mass] : engine.fused->focal_elements()) {
      rows.push_back({format_proposition(focal, engine_frame(report, engine)), format_number(mass)});
    }
    out += render_table(rows, "  ");
  }
  if (engine.bayes) {
    const auto& b = *engine.bayes;
    out += "  P(f|p&b) ~ " + format_number(b.p_fly) + "   P(~f|p&b) ~ " + format_number(b.p_not_fly) +
           "   additivity deficit " + format_number(b.additivity_deficit) + "   upper bound " +
           format_number(b.bound) + "\n";
    for (const auto& flag : b.validity_flags) out += "  flag: " + flag + "\n";
  }
  if (!engine.queries.empty()) {
    std::vector<std::vector<std::string>> rows{{"query", "Bel", "Pl"}};
    for (const auto& q : engine.queries) {
      rows.push_back({format_proposition(q.query, report.frame), format_number(q.interval.bel),
                      format_number(q.interval.pl)});
    }
    out += render_table(rows, "  ");
  }
}

Json engine_to_json(const FusionReport& report, const EngineReport& engine) {
  Json stages = Json::array();
  for (const auto& s : engine.stages) {
    stages.push_back(Json{{"stage", s.stage},
                          {"conflict_mass", s.conflict_mass},
                          {"normalization_constant",
                           s.normalization_constant ? Json(*s.normalization_constant) : Json(nullptr)}});
  }
  Json queries = Json::array();
  for (const auto& q : engine.queries) {
    queries.push_back(
        Json{{"query", proposition_to_json(q.query, report.frame)}, {"bel", q.interval.bel}, {"pl", q.interval.pl}});
  }
  Json bayes = nullptr;
  if (engine.bayes) {
    bayes = Json{{"p_fly", engine.bayes->p_fly},
                 {"p_not_fly", engine.bayes->p_not_fly},
                 {"additivity_deficit", engine.bayes->additivity_deficit},
                 {"bound", engine.bayes->bound},
                 {"validity_flags", engine.bayes->validity_flags}};
  }
  return Json{{"engine", to_string(engine.engine)},
              {"status", to_string(engine.status)},
              {"message", engine.message},
              {"model", engine.model ? model_to_json(*engine.model) : Json(nullptr)},
              {"stages", std::move(stages)},
              {"prior", engine.prior ? bba_to_json(*engine.prior) : Json(nullptr)},
              {"fused", engine.fused ? bba_to_json(*engine.fused) : Json(nullptr)},
              {"queries", std::move(queries)},
              {"bayes", std::move(bayes)},
              {"warnings", engine.warnings}};
}

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  if (j.is_array()) {
    for (const auto& s : j) out.push_back(s.get<std::string>());
  }
  return out;
}

EngineStatus status_from_string(const std::string& s) {
  if (s == "ok") return EngineStatus::ok;
  if (s == "inconsistent") return EngineStatus::inconsistent;
  if (s == "not applicable") return EngineStatus::not_applicable;
  throw InputError("report: unknown engine status '" + s + "'");
}

EngineReport engine_from_json(const Json& j, const Frame& frame, std::size_t index) {
  const std::string where = "engines[" + std::to_string(index) + "]";
  EngineReport engine;
  const auto parsed = parse_engine(j.at("engine").get<std::string>());
  if (!parsed) throw InputError(where + ".engine: unknown engine");
  engine.engine = *parsed;
  engine.status = status_from_string(j.at("status").get<std::string>());
  engine.message = j.at("message").get<std::string>();
  if (!j.at("model").is_null()) engine.model = model_from_json(j.at("model"), where + ".model");
  for (const auto& s : j.at("stages")) {
    const Json& k = s.at("normalization_constant");
    engine.stages.push_back({s.at("stage").get<std::string>(), s.at("conflict_mass").get<double>(),
                             k.is_null() ? std::nullopt : std::optional<double>(k.get<double>())});
  }
  if (!j.at("prior").is_null()) engine.prior = bba_from_json(j.at("prior"), *engine.model, where + ".prior");
  if (!j.at("fused").is_null()) engine.fused = bba_from_json(j.at("fused"), *engine.model, where + ".fused");
  for (const auto& q : j.at("queries")) {
    engine.queries.push_back({proposition_from_json(q.at("query"), frame, where + ".queries"),
                              Interval{q.at("bel").get<double>(), q.at("pl").get<double>()}});
  }
  if (const Json& b = j.at("bayes"); !b.is_null()) {
    engine.bayes = BayesEstimates{b.at("p_fly").get<double>(), b.at("p_not_fly").get<double>(),
                                  b.at("additivity_deficit").get<double>(), b.at("bound").get<double>(),
                                  string_list(b.at("validity_flags"))};
  }
  engine.warnings = string_list(j.at("warnings"));
  return engine;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) noexcept {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string format_proposition(const Proposition& p, const Frame& frame) {
  if (p.is_empty()) return "{}";
  std::string out;
  const bool several = p.terms().size() > 1;
  for (IndexSet term : p.terms()) {
    if (!out.empty()) out += " | ";
    std::string names;
    for (IndexSet rest = term; rest != 0; rest &= rest - 1) {
      if (!names.empty()) names += "&";
      names += frame.name(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    out += several && cardinality(term) > 1 ? "(" + names + ")" : names;
  }
  return out;
}

std::string emit_report(const FusionReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: {
      std::string out;
      for (const auto& engine : report.engines) {
        if (!out.empty()) out += "\n";
        append_engine_table(out, report, engine);
      }
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "engine,query,bel,pl,status\n";
      for (const auto& engine : report.engines) {
        const std::string name(to_string(engine.engine));
        if (engine.status == EngineStatus::ok) {
          for (const auto& q : engine.queries) {
            out += name + "," + format_proposition(q.query, report.frame) + "," + format_number(q.interval.bel) +
                   "," + format_number(q.interval.pl) + ",ok\n";
          }
        } else {
          out += name + ",,,," + status_label(engine) + "\n";
        }
      }
      return out;
    }
    case OutputFormat::json: {
      Json engines = Json::array();
      for (const auto& engine : report.engines) engines.push_back(engine_to_json(report, engine));
      return Json{{"frame", report.frame.names()}, {"engines", std::move(engines)}}.dump(2) + "\n";
    }
  }
  return {};
}

std::string emit_comparison(const FusionReport& report) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"query"};
  for (const auto& engine : report.engines) header.push_back(std::string(to_string(engine.engine)) + " [Bel, Pl]");
  rows.push_back(header);

  // Every engine answers the same scenario queries; bayes may skip some.
  std::vector<Proposition> queries;
  for (const auto& engine : report.engines) {
    for (const auto& q : engine.queries) {
      if (std::find(queries.begin(), queries.end(), q.query) == queries.end()) queries.push_back(q.query);
    }
  }
  for (const auto& query : queries) {
    std::vector<std::string> row{format_proposition(query, report.frame)};
    for (const auto& engine : report.engines) {
      const auto it = std::find_if(engine.queries.begin(), engine.queries.end(),
                                   [&](const QueryResult& r) { return r.query == query; });
      if (it != engine.queries.end()) {
        row.push_back("[" + format_number(it->interval.bel) + ", " + format_number(it->interval.pl) + "]");
      } else {
        row.push_back(engine.status == EngineStatus::ok ? "-" : status_label(engine));
      }
    }
    rows.push_back(std::move(row));
  }
  std::string out = render_table(rows, "");
  for (const auto& engine : report.engines) {
    if (engine.status != EngineStatus::ok) {
      out += std::string(to_string(engine.engine)) + ": " + status_label(engine) + "\n";
    }
    for (const auto& s : engine.stages) {
      out += std::string(to_string(engine.engine)) + " conflict at " + s.stage + ": " + format_number(s.conflict_mass) +
             "\n";
    }
    if (engine.bayes) {
      const auto& b = *engine.bayes;
      out += "bayes: P(f|p&b) ~ " + format_number(b.p_fly) + ", P(~f|p&b) ~ " + format_number(b.p_not_fly) +
             ", sum " + format_number(b.p_fly + b.p_not_fly) + " (deficit " + format_number(b.additivity_deficit) +
             "), upper bound " + format_number(b.bound) + "\n";
      for (const auto& flag : b.validity_flags) out += "bayes flag: " + flag + "\n";
    }
  }
  return out;
}

FusionReport parse_report(std::string_view json) {
  try {
    const Json doc = Json::parse(json.begin(), json.end());
    const Model frame_model = model_from_json(Json{{"frame", doc.at("frame")}}, "");
    FusionReport report{frame_model.frame(), {}};
    const Json& engines = doc.at("engines");
    for (std::size_t i = 0; i < engines.size(); ++i) {
      report.engines.push_back(engine_from_json(engines[i], report.frame, i));
    }
    return report;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace dsmfuse::cli
