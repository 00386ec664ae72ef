#include "dsmfuse/belief.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "compensated_sum.hpp"
#include "dsmfuse/error.hpp"

namespace dsmfuse {

namespace {

using Accumulator = std::map<Proposition, detail::CompensatedSum>;

std::vector<Bba::Entry> drain(const Accumulator& acc) {
  std::vector<Bba::Entry> out;
  out.reserve(acc.size());
  for (const auto& [key, sum] : acc) out.emplace_back(key, sum.value());
  return out;
}

void require_query_width(const Bba& bba, const Proposition& a) {
  if (a.width() != bba.model().width()) {
    throw FrameMismatch("query proposition over a frame of size " + std::to_string(a.width()) +
                        " evaluated on a BBA over a frame of size " + std::to_string(bba.model().width()));
  }
}

void require_compatible(std::span<const Bba> sources) {
  if (sources.size() < 2) throw InputError("combination needs at least two sources");
  const Model& model = sources.front().model();
  for (std::size_t i = 1; i < sources.size(); ++i) {
    if (!(sources[i].model() == model)) {
      throw FrameMismatch("source " + std::to_string(i) + " is defined on a different frame or model");
    }
  }
}

// Everything a combination rule needs to know about one focal tuple.
struct Tuple {
  double product;
  const Proposition& meet;  // reduce(X₁ ∧ … ∧ X_k)
  const Proposition& join;  // X₁ ∨ … ∨ X_k, reduced
  IndexSet u_support;       // singletons of u(X₁) ∪ … ∪ u(X_k)
  bool all_empty;           // every X_i empty under the model
};

// Depth-first walk over focal tuples in canonical order (source by source,
// focal elements in key order). Partial meets are reduced as they are built,
// which is sound because a term holding a constraint keeps it under ∪.
template <class Leaf>
void for_each_tuple(std::span<const Bba> sources, Leaf&& leaf) {
  const Model& model = sources.front().model();
  const Proposition top = total_ignorance(model.width());
  const Proposition bottom = Proposition::empty(model.width());

  auto walk = [&](auto&& self, std::size_t depth, double product, const Proposition& meet,
                  const Proposition& join, IndexSet u_support, bool all_empty) -> void {
    if (depth == sources.size()) {
      leaf(Tuple{product, meet, join, u_support, all_empty});
      return;
    }
    for (const auto& [focal, mass] : sources[depth].focal_elements()) {
      self(self, depth + 1, product * mass, model.reduce(conjoin(meet, focal)), disjoin(join, focal),
           u_support | focal.support(), all_empty && focal.is_empty());
    }
  };
  walk(walk, 0, 1.0, top, bottom, IndexSet{0}, true);
}

Proposition proposition_of_support(std::size_t width, IndexSet support) {
  std::vector<IndexSet> terms;
  for (IndexSet rest = support; rest != 0; rest &= rest - 1) terms.push_back(rest & (~rest + 1));
  return Proposition::canonicalize(width, terms);
}

}  // namespace

// Bba ----------------------------------------------------------------------

Bba::Bba(Model model, std::span<const Entry> masses) : Bba(std::move(model), masses, false) {}

Bba Bba::with_conflict(Model model, std::span<const Entry> masses) { return Bba(std::move(model), masses, true); }

Bba::Bba(Model model, std::span<const Entry> masses, bool allow_empty) : model_(std::move(model)) {
  Accumulator acc;
  for (const auto& [prop, mass] : masses) {
    if (!std::isfinite(mass) || mass < 0.0) {
      throw InputError("mass " + std::to_string(mass) + " is not a finite nonnegative number");
    }
    if (prop.width() != model_.width()) throw FrameMismatch("focal element over a different frame");
    Proposition key = model_.reduce(prop);
    if (key.is_empty() && mass > 0.0 && !allow_empty) {
      throw InputError("mass assigned to a proposition that is empty under the model");
    }
    acc[std::move(key)].add(mass);
  }
  detail::CompensatedSum total;
  for (auto& entry : drain(acc)) {
    if (entry.second > 0.0) {
      total.add(entry.second);
      focal_.push_back(std::move(entry));
    }
  }
  if (std::fabs(total.value() - 1.0) > kMassTolerance) {
    throw InputError("masses sum to " + std::to_string(total.value()) + ", expected 1");
  }
}

Bba Bba::vacuous(Model model) {
  const Entry entry{total_ignorance(model.width()), 1.0};
  return Bba(std::move(model), std::span<const Entry>(&entry, 1));
}

Bba Bba::categorical(Model model, const Proposition& focal) {
  const Entry entry{focal, 1.0};
  return Bba(std::move(model), std::span<const Entry>(&entry, 1));
}

double Bba::mass(const Proposition& a) const {
  require_query_width(*this, a);
  const Proposition key = model_.reduce(a);
  const auto it = std::lower_bound(focal_.begin(), focal_.end(), key,
                                   [](const Entry& e, const Proposition& k) { return e.first < k; });
  return it != focal_.end() && it->first == key ? it->second : 0.0;
}

double Bba::empty_mass() const { return mass(Proposition::empty(model_.width())); }

double Bba::total_mass() const {
  detail::CompensatedSum total;
  for (const auto& entry : focal_) total.add(entry.second);
  return total.value();
}

// Bel / Pl -----------------------------------------------------------------

double belief(const Bba& bba, const Proposition& a) {
  require_query_width(bba, a);
  detail::CompensatedSum sum;
  for (const auto& [focal, mass] : bba.focal_elements()) {
    if (leq(focal, a, bba.model())) sum.add(mass);
  }
  return sum.value();
}

double plausibility(const Bba& bba, const Proposition& a) {
  require_query_width(bba, a);
  detail::CompensatedSum sum;
  for (const auto& [focal, mass] : bba.focal_elements()) {
    if (!bba.model().is_empty(conjoin(focal, a))) sum.add(mass);
  }
  return sum.value();
}

// Combination rules --------------------------------------------------------

CombinationReport conjunctive_combine(std::span<const Bba> sources) {
  require_compatible(sources);
  Accumulator acc;
  for_each_tuple(sources, [&acc](const Tuple& t) { acc[t.meet].add(t.product); });
  const auto entries = drain(acc);
  Bba result = Bba::with_conflict(sources.front().model(), entries);
  const double conflict = result.empty_mass();
  return CombinationReport{std::move(result), conflict, std::nullopt};
}

CombinationReport dempster_combine(std::span<const Bba> sources) {
  require_compatible(sources);
  Accumulator acc;
  detail::CompensatedSum conflict;
  detail::CompensatedSum kept;
  for_each_tuple(sources, [&](const Tuple& t) {
    if (t.meet.is_empty()) {
      conflict.add(t.product);
    } else {
      acc[t.meet].add(t.product);
      kept.add(t.product);
    }
  });
  // K from the surviving mass directly: 1 - conflict loses precision exactly
  // when the conflict is close to 1.
  const double k = kept.value();
  if (k <= kTotalConflictThreshold) throw TotalConflict(conflict.value());
  auto entries = drain(acc);
  for (auto& entry : entries) entry.second /= k;
  return CombinationReport{Bba(sources.front().model(), entries), conflict.value(), k};
}

CombinationReport dsm_hybrid_combine(std::span<const Bba> sources) {
  require_compatible(sources);
  const Model& model = sources.front().model();
  const Proposition ignorance = total_ignorance(model.width());
  Accumulator acc;
  detail::CompensatedSum rerouted;
  for_each_tuple(sources, [&](const Tuple& t) {
    if (!t.meet.is_empty()) {
      acc[t.meet].add(t.product);
      return;
    }
    rerouted.add(t.product);
    if (t.all_empty) {
      const Proposition relative = model.reduce(proposition_of_support(model.width(), t.u_support));
      acc[relative.is_empty() ? ignorance : relative].add(t.product);
    } else {
      acc[t.join.is_empty() ? ignorance : t.join].add(t.product);
    }
  });
  const auto entries = drain(acc);
  return CombinationReport{Bba(model, entries), rerouted.value(), std::nullopt};
}

}  // namespace dsmfuse
