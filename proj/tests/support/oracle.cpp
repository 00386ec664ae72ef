#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace oracle {

RegionSet all_regions(std::size_t n) {
  RegionSet out = 0;
  for (IndexSet r = 1; r < (IndexSet{1} << n); ++r) out |= RegionSet{1} << r;
  return out;
}

RegionSet regions_of_terms(std::size_t n, std::span<const IndexSet> terms) {
  RegionSet out = 0;
  for (IndexSet r = 1; r < (IndexSet{1} << n); ++r) {
    for (IndexSet t : terms) {
      if ((t & r) == t) {
        out |= RegionSet{1} << r;
        break;
      }
    }
  }
  return out;
}

RegionSet regions_of(const dsmfuse::Proposition& p) { return regions_of_terms(p.width(), p.terms()); }

RegionSet allowed_regions(const dsmfuse::Model& model) {
  const std::size_t n = model.width();
  RegionSet out = 0;
  for (IndexSet r = 1; r < (IndexSet{1} << n); ++r) {
    bool ok = true;
    for (IndexSet c : model.constraints()) ok = ok && (c & r) != c;
    if (ok) out |= RegionSet{1} << r;
  }
  return out;
}

std::vector<RegionSet> lattice_closure(std::size_t n) {
  std::set<RegionSet> seen{0};
  std::vector<RegionSet> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    const IndexSet t = IndexSet{1} << i;
    const RegionSet s = regions_of_terms(n, std::span<const IndexSet>(&t, 1));
    if (seen.insert(s).second) frontier.push_back(s);
  }
  std::vector<RegionSet> all(frontier);
  while (!frontier.empty()) {
    std::vector<RegionSet> next;
    for (RegionSet a : frontier) {
      for (RegionSet b : std::vector<RegionSet>(all)) {
        for (RegionSet c : {a & b, a | b}) {
          if (seen.insert(c).second) {
            next.push_back(c);
            all.push_back(c);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

IndexSet composing_singletons(std::size_t n, RegionSet x) {
  IndexSet out = 0;
  for (IndexSet r = 1; r < (IndexSet{1} << n); ++r) {
    if (!((x >> r) & 1U)) continue;
    bool minimal = true;
    for (IndexSet s = (r - 1) & r; s != 0 && minimal; s = (s - 1) & r) minimal = !((x >> s) & 1U);
    if (minimal) out |= r;
  }
  return out;
}

RegionSet union_of_singletons(std::size_t n, IndexSet singletons) {
  RegionSet out = 0;
  for (IndexSet r = 1; r < (IndexSet{1} << n); ++r) {
    if (r & singletons) out |= RegionSet{1} << r;
  }
  return out;
}

MassMap masses_of(const dsmfuse::Bba& bba) {
  const RegionSet allowed = allowed_regions(bba.model());
  MassMap out;
  for (const auto& [p, m] : bba.focal_elements()) out[regions_of(p) & allowed] += m;
  return out;
}

namespace {

using Visit = std::function<void(double product, std::span<const RegionSet> raw)>;

// Raw (unreduced) region sets per focal element, so u() sees the original.
void for_each_tuple(std::span<const dsmfuse::Bba> sources, const Visit& visit) {
  std::vector<std::vector<std::pair<RegionSet, double>>> lists;
  for (const auto& s : sources) {
    auto& l = lists.emplace_back();
    for (const auto& [p, m] : s.focal_elements()) l.emplace_back(regions_of(p), m);
  }
  std::vector<std::size_t> idx(lists.size(), 0);
  std::vector<RegionSet> raw(lists.size());
  while (true) {
    double product = 1.0;
    for (std::size_t i = 0; i < lists.size(); ++i) {
      product *= lists[i][idx[i]].second;
      raw[i] = lists[i][idx[i]].first;
    }
    visit(product, raw);
    std::size_t k = lists.size();
    while (k > 0) {
      --k;
      if (++idx[k] < lists[k].size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

}  // namespace

Fused conjunctive(std::span<const dsmfuse::Bba> sources) {
  const RegionSet allowed = allowed_regions(sources.front().model());
  Fused out;
  for_each_tuple(sources, [&](double m, std::span<const RegionSet> raw) {
    RegionSet meet = ~RegionSet{0};
    for (RegionSet x : raw) meet &= x;
    meet &= allowed;
    out.masses[meet] += m;
    if (meet == 0) out.conflict += m;
  });
  return out;
}

Fused dempster(std::span<const dsmfuse::Bba> sources) {
  Fused c = conjunctive(sources);
  Fused out;
  out.conflict = c.conflict;
  const double k = 1.0 - c.conflict;
  for (const auto& [x, m] : c.masses) {
    if (x != 0) out.masses[x] = m / k;
  }
  return out;
}

Fused hybrid(std::span<const dsmfuse::Bba> sources) {
  const std::size_t n = sources.front().model().width();
  const RegionSet allowed = allowed_regions(sources.front().model());
  const RegionSet total = all_regions(n) & allowed;
  Fused out;
  for_each_tuple(sources, [&](double m, std::span<const RegionSet> raw) {
    RegionSet meet = ~RegionSet{0};
    RegionSet join = 0;
    bool all_empty = true;
    IndexSet u = 0;
    for (RegionSet x : raw) {
      meet &= x;
      join |= x;
      all_empty = all_empty && (x & allowed) == 0;
      u |= composing_singletons(n, x);
    }
    RegionSet target;
    if ((meet & allowed) != 0) {
      target = meet & allowed;
    } else {
      out.conflict += m;
      if (all_empty) {
        target = union_of_singletons(n, u) & allowed;
      } else {
        target = join & allowed;
      }
      if (target == 0) target = total;
    }
    out.masses[target] += m;
  });
  return out;
}

double belief(const dsmfuse::Bba& bba, RegionSet a) {
  const RegionSet allowed = allowed_regions(bba.model());
  a &= allowed;
  double out = 0.0;
  for (const auto& [p, m] : bba.focal_elements()) {
    const RegionSet x = regions_of(p) & allowed;
    if (x != 0 && (x & ~a) == 0) out += m;
  }
  return out;
}

double plausibility(const dsmfuse::Bba& bba, RegionSet a) {
  const RegionSet allowed = allowed_regions(bba.model());
  double out = 0.0;
  for (const auto& [p, m] : bba.focal_elements()) {
    if ((regions_of(p) & a & allowed) != 0) out += m;
  }
  return out;
}

double max_difference(const MassMap& a, const MassMap& b) {
  double worst = 0.0;
  for (const auto& [k, v] : a) {
    const auto it = b.find(k);
    worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [k, v] : b) {
    if (!a.count(k)) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace oracle
