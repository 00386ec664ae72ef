#include "scenario_json.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dsmfuse/error.hpp"
#include "json_codec.hpp"

namespace dsmfuse::cli {

namespace {

constexpr std::array<std::string_view, 7> kFields{"frame",   "constraints", "rules",   "observations",
                                                  "queries", "engines",     "dst_axes"};

const Json& array_field(const Json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + field + "\"");
  if (!it->is_array()) throw InputError(std::string(field) + ": expected an array");
  return *it;
}

std::vector<Proposition> propositions(const Json& doc, const char* field, const Frame& frame, bool required) {
  if (!required && !doc.contains(field)) return {};
  const Json& list = array_field(doc, field);
  std::vector<Proposition> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(proposition_from_json(list[i], frame, std::string(field) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

WeightedRule parse_rule(const Json& j, const Frame& frame, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object with \"if\", \"then\" and \"weight\"");
  for (const char* field : {"if", "then", "weight"}) {
    if (!j.contains(field)) throw InputError("missing field \"" + where + "." + field + "\"");
  }
  const Json& weight = j.at("weight");
  if (!weight.is_number()) throw InputError(where + ".weight: expected a number");
  const double w = weight.get<double>();
  if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
    throw InputError(where + ".weight: " + weight.dump() + " is outside [0, 1]");
  }
  WeightedRule rule{proposition_from_json(j.at("if"), frame, where + ".if"),
                    proposition_from_json(j.at("then"), frame, where + ".then"), w};
  if (rule.antecedent.is_empty()) throw InputError(where + ".if: antecedent must not be empty");
  return rule;
}

DstAxes parse_dst_axes(const Json& j, const Frame& frame) {
  if (!j.is_object()) throw InputError("dst_axes: expected an object with \"axes\" and \"map\"");
  if (!j.contains("axes")) throw InputError("missing field \"dst_axes.axes\"");
  if (!j.contains("map")) throw InputError("missing field \"dst_axes.map\"");
  const Json& axes_json = j.at("axes");
  if (!axes_json.is_array()) throw InputError("dst_axes.axes: expected an array of value-name arrays");
  std::vector<std::vector<std::string>> axes;
  for (std::size_t a = 0; a < axes_json.size(); ++a) {
    const std::string where = "dst_axes.axes[" + std::to_string(a) + "]";
    if (!axes_json[a].is_array()) throw InputError(where + ": expected an array of value names");
    std::vector<std::string> values;
    for (const auto& v : axes_json[a]) {
      if (!v.is_string()) throw InputError(where + ": value names must be strings");
      values.push_back(v.get<std::string>());
    }
    axes.push_back(std::move(values));
  }
  std::optional<AtomFrame> atoms;
  try {
    atoms.emplace(std::move(axes));
  } catch (const InputError& e) {
    throw InputError(std::string("dst_axes.axes: ") + e.what());
  }

  const Json& map_json = j.at("map");
  if (!map_json.is_object()) throw InputError("dst_axes.map: expected an object from singleton to [axis, value]");
  std::vector<std::pair<std::size_t, AxisValue>> entries;
  for (const auto& [name, target] : map_json.items()) {
    const std::string where = "dst_axes.map." + name;
    const auto singleton = frame.find(name);
    if (!singleton) throw InputError(where + ": unknown singleton '" + name + "'");
    if (!target.is_array() || target.size() != 2 || !target[0].is_number_unsigned() ||
        !target[1].is_number_unsigned()) {
      throw InputError(where + ": expected [axis_index, value_index]");
    }
    entries.emplace_back(*singleton, AxisValue{target[0].get<std::size_t>(), target[1].get<std::size_t>()});
  }
  try {
    return DstAxes{*atoms, LiteralMap(frame.size(), *atoms, entries)};
  } catch (const InputError& e) {
    throw InputError(std::string("dst_axes.map: ") + e.what());
  }
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("scenario must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
      throw InputError("unknown field \"" + key + "\"");
    }
  }

  Model model = model_from_json(doc, "");
  const Frame& frame = model.frame();

  std::vector<WeightedRule> rules;
  const Json& rules_json = array_field(doc, "rules");
  for (std::size_t i = 0; i < rules_json.size(); ++i) {
    rules.push_back(parse_rule(rules_json[i], frame, "rules[" + std::to_string(i) + "]"));
  }

  std::vector<Engine> engines;
  if (doc.contains("engines")) {
    const Json& list = array_field(doc, "engines");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto engine = list[i].is_string() ? parse_engine(list[i].get<std::string>()) : std::nullopt;
      if (!engine) {
        throw InputError("engines[" + std::to_string(i) + "]: expected one of \"bayes\", \"dst\", \"dsm\"");
      }
      engines.push_back(*engine);
    }
  } else {
    engines.push_back(Engine::dsm);
  }

  std::optional<DstAxes> dst_axes;
  if (doc.contains("dst_axes")) dst_axes = parse_dst_axes(doc.at("dst_axes"), frame);

  auto observations = propositions(doc, "observations", frame, false);
  auto queries = propositions(doc, "queries", frame, true);
  Scenario scenario{std::move(model),        std::move(rules),   std::move(observations),
                    std::move(queries),      std::move(engines),
                    std::move(dst_axes)};
  scenario.validate();
  return scenario;
}

}  // namespace dsmfuse::cli
