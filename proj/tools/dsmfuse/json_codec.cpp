#include "json_codec.hpp"

#include <bit>

#include "dsmfuse/error.hpp"

namespace dsmfuse::cli {

namespace {

std::string member(const std::string& path, const char* field) {
  return path.empty() ? std::string(field) : path + "." + field;
}

const Json& require_field(const Json& j, const char* field, const std::string& path) {
  if (!j.is_object()) throw InputError((path.empty() ? std::string("document") : path) + ": expected an object");
  const auto it = j.find(field);
  if (it == j.end()) throw InputError("missing field \"" + member(path, field) + "\"");
  return *it;
}

IndexSet term_from_json(const Json& j, const Frame& frame, const std::string& path) {
  if (!j.is_array() || j.empty()) throw InputError(path + ": expected a nonempty array of singleton names");
  IndexSet term = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw InputError(path + "[" + std::to_string(i) + "]: expected a singleton name");
    const auto name = j[i].get<std::string>();
    const auto index = frame.find(name);
    if (!index) throw InputError(path + "[" + std::to_string(i) + "]: unknown singleton '" + name + "'");
    term |= IndexSet{1} << *index;
  }
  return term;
}

}  // namespace

Json proposition_to_json(const Proposition& p, const Frame& frame) {
  if (p.width() != frame.size()) throw FrameMismatch("proposition does not belong to the frame being serialized");
  Json out = Json::array();
  for (IndexSet term : p.terms()) {
    Json names = Json::array();
    for (IndexSet rest = term; rest != 0; rest &= rest - 1) names.push_back(frame.name(std::countr_zero(rest)));
    out.push_back(std::move(names));
  }
  return out;
}

Proposition proposition_from_json(const Json& j, const Frame& frame, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected a proposition (array of arrays of singleton names)");
  std::vector<IndexSet> terms;
  for (std::size_t i = 0; i < j.size(); ++i) terms.push_back(term_from_json(j[i], frame, path + "[" + std::to_string(i) + "]"));
  return Proposition::canonicalize(frame.size(), terms);
}

Json bba_to_json(const Bba& bba) {
  Json masses = Json::array();
  for (const auto& [focal, mass] : bba.focal_elements()) {
    masses.push_back(Json{{"prop", proposition_to_json(focal, bba.frame())}, {"mass", mass}});
  }
  return Json{{"masses", std::move(masses)}};
}

Bba bba_from_json(const Json& j, const Model& model, const std::string& path) {
  const Json& masses = require_field(j, "masses", path);
  if (!masses.is_array()) throw InputError(member(path, "masses") + ": expected an array");
  std::vector<Bba::Entry> entries;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string where = member(path, "masses") + "[" + std::to_string(i) + "]";
    const Json& mass = require_field(masses[i], "mass", where);
    if (!mass.is_number()) throw InputError(where + ".mass: expected a number");
    entries.emplace_back(proposition_from_json(require_field(masses[i], "prop", where), model.frame(), where + ".prop"),
                         mass.get<double>());
  }
  return Bba::with_conflict(model, entries);
}

Json combination_report_to_json(const CombinationReport& report) {
  Json out = bba_to_json(report.result);
  out["conflict_mass"] = report.conflict_mass;
  out["normalization_constant"] =
      report.normalization_constant ? Json(*report.normalization_constant) : Json(nullptr);
  return out;
}

Json model_to_json(const Model& model) {
  Json constraints = Json::array();
  for (IndexSet c : model.constraints()) {
    constraints.push_back(proposition_to_json(Proposition::intersection(model.width(), c), model.frame()).front());
  }
  return Json{{"frame", model.frame().names()}, {"constraints", std::move(constraints)}};
}

Model model_from_json(const Json& j, const std::string& path) {
  const Json& names = require_field(j, "frame", path);
  if (!names.is_array()) throw InputError(member(path, "frame") + ": expected an array of singleton names");
  std::vector<std::string> singletons;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].is_string()) throw InputError(member(path, "frame") + "[" + std::to_string(i) + "]: expected a string");
    singletons.push_back(names[i].get<std::string>());
  }
  Frame frame = [&] {
    try {
      return Frame(std::move(singletons));
    } catch (const InputError& e) {
      throw InputError(member(path, "frame") + ": " + e.what());
    }
  }();
  std::vector<IndexSet> constraints;
  if (const auto it = j.find("constraints"); it != j.end()) {
    if (!it->is_array()) throw InputError(member(path, "constraints") + ": expected an array of singleton-name arrays");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = member(path, "constraints") + "[" + std::to_string(i) + "]";
      const IndexSet c = term_from_json((*it)[i], frame, where);
      if (cardinality(c) < 2) throw InputError(where + ": a constraint needs at least two distinct singletons");
      constraints.push_back(c);
    }
  }
  return Model(std::move(frame), constraints);
}

}  // namespace dsmfuse::cli
