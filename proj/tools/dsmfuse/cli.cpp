#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dsmfuse/error.hpp"
#include "dsmfuse/formula.hpp"
#include "dsmfuse/hyper_power_set.hpp"
#include "json_codec.hpp"
#include "report_format.hpp"
#include "scenario_json.hpp"

namespace dsmfuse::cli {

namespace {

struct Options {
  std::string input;
  std::string engine;
  std::string format = "table";
  std::size_t n = 0;
  bool allow_large = false;
  int verbosity = 0;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  text << file.rdbuf();
  return text.str();
}

OutputFormat format_or_throw(const std::string& name) {
  const auto format = parse_format(name);
  if (!format) throw InputError("unknown format '" + name + "' (expected table, json or csv)");
  return *format;
}

void log_scenario(const Scenario& s, std::ostream& err) {
  err << "scenario: " << s.frame().size() << " singletons, " << s.model.constraints().size() << " constraints ("
      << to_string(s.model.kind()) << "), " << s.rules.size() << " rules, " << s.observations.size()
      << " observations, " << s.queries.size() << " queries\n";
}

int finish(const FusionReport& report, std::ostream& err) {
  for (const auto& engine : report.engines) {
    if (engine.status != EngineStatus::ok) err << to_string(engine.engine) << ": " << engine.message << "\n";
  }
  return report.inconsistent() ? kExitInconsistent : kExitOk;
}

int run_fuse(const Options& opt, std::ostream& out, std::ostream& err, std::istream& in) {
  const OutputFormat format = format_or_throw(opt.format);
  Scenario scenario = parse_scenario(read_input(opt.input, in));
  if (opt.engine == "all") {
    scenario.engines = {Engine::bayes, Engine::dst, Engine::dsm};
  } else if (!opt.engine.empty()) {
    const auto engine = parse_engine(opt.engine);
    if (!engine) throw InputError("unknown engine '" + opt.engine + "' (expected dsm, dst, bayes or all)");
    scenario.engines = {*engine};
  }
  if (opt.verbosity > 0) log_scenario(scenario, err);
  const FusionReport report = run_scenario(scenario);
  out << emit_report(report, format);
  return finish(report, err);
}

int run_compare(const Options& opt, std::ostream& out, std::ostream& err, std::istream& in) {
  Scenario scenario = parse_scenario(read_input(opt.input, in));
  scenario.engines = {Engine::bayes};
  if (scenario.dst_axes) {
    scenario.engines.push_back(Engine::dst);
  } else {
    err << "note: no dst_axes in the scenario, skipping the dst engine\n";
  }
  scenario.engines.push_back(Engine::dsm);
  if (opt.verbosity > 0) log_scenario(scenario, err);
  const FusionReport report = run_scenario(scenario);
  out << emit_comparison(report);
  return finish(report, err);
}

int run_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
  const OutputFormat format = format_or_throw(opt.format);
  if (opt.n == 0) throw InputError("--n must be at least 1");
  if (opt.n > kMaxFrameSize) throw LimitExceeded("--n " + std::to_string(opt.n) + " is above any supported frame size");
  const Frame frame = Frame::numbered(opt.n);
  EnumerationOptions options;
  options.allow_large = opt.allow_large;

  std::uint64_t count = 0;
  // Stream: n = 6 has millions of elements.
  switch (format) {
    case OutputFormat::table:
      for_each_hyper_power_set_element(opt.n, options, [&](const Proposition& p) {
        out << format_proposition(p, frame) << '\n';
        ++count;
      });
      out << "count: " << count << '\n';
      break;
    case OutputFormat::csv:
      out << "index,proposition\n";
      for_each_hyper_power_set_element(opt.n, options, [&](const Proposition& p) {
        out << count++ << ",\"" << format_proposition(p, frame) << "\"\n";
      });
      break;
    case OutputFormat::json:
      out << "{\"frame\": " << Json(frame.names()).dump() << ", \"elements\": [";
      for_each_hyper_power_set_element(opt.n, options, [&](const Proposition& p) {
        out << (count++ == 0 ? "\n  " : ",\n  ") << proposition_to_json(p, frame).dump();
      });
      out << "\n], \"count\": " << count << "}\n";
      break;
  }
  if (opt.verbosity > 0) err << "enumerated " << count << " elements for n = " << opt.n << '\n';
  return kExitOk;
}

int run_check_logic(const Options& opt, std::ostream& out, std::ostream& err) {
  bool all = true;
  for (const auto& principle : classical_principles()) {
    const Formula formula = Formula::parse(principle.text);
    const bool holds = tautology_check(formula);
    all = all && holds;
    out << (holds ? "tautology  " : "FAILS      ") << principle.name << ": " << principle.text << '\n';
    if (opt.verbosity > 0) err << principle.name << " parsed as " << formula.to_string() << '\n';
  }
  // A failing classical principle is an internal fault, not a user error.
  return all ? kExitOk : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Belief-function fusion of weighted rule bases", "dsmfuse"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("-v,--verbose", opt.verbosity, "Diagnostics on stderr (repeatable)");

  auto* fuse = app.add_subcommand("fuse", "Fuse a scenario and print Bel/Pl per query");
  fuse->add_option("file", opt.input, "Scenario JSON file, or - for stdin")->required();
  fuse->add_option("--engine", opt.engine, "dsm, dst, bayes or all (default: the scenario's engines)");
  fuse->add_option("--format", opt.format, "table, json or csv");

  auto* enumerate = app.add_subcommand("enumerate", "List the hyper-power set of t1..tn");
  enumerate->add_option("--n", opt.n, "Frame size")->required();
  enumerate->add_flag("--allow-large", opt.allow_large, "Permit n = 6");
  enumerate->add_option("--format", opt.format, "table, json or csv");

  auto* compare = app.add_subcommand("compare", "Run every engine side by side");
  compare->add_option("file", opt.input, "Scenario JSON file, or - for stdin")->required();

  auto* check_logic = app.add_subcommand("check-logic", "Truth-table check of the classical inference principles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (fuse->parsed()) return run_fuse(opt, out, err, in);
    if (enumerate->parsed()) return run_enumerate(opt, out, err);
    if (compare->parsed()) return run_compare(opt, out, err, in);
    if (check_logic->parsed()) return run_check_logic(opt, out, err);
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitLimitExceeded;
  } catch (const TotalConflict& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dsmfuse::cli
