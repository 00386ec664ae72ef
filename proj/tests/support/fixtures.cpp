#include "fixtures.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace dsmfuse;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Bba two_focal(const Model& model, const Proposition& strong, const Proposition& weak, double eps) {
  std::vector<Bba::Entry> masses;
  if (eps < 1.0) masses.emplace_back(strong, 1.0 - eps);
  if (eps > 0.0) masses.emplace_back(weak, eps);
  return Bba(model, masses);
}

Model atom_model() { return tp2_atoms().shafer_model(); }

Proposition atoms(std::string_view text) {
  const AtomFrame af = tp2_atoms();
  return atoms_to_proposition(refine_to_atoms(prop(tp2_model().frame(), text), af, tp2_literals()), af);
}

}  // namespace

Proposition prop(const Frame& frame, std::string_view text) {
  text = trim(text);
  if (text == "{}") return Proposition::empty(frame.size());
  std::vector<IndexSet> terms;
  while (true) {
    const auto bar = text.find('|');
    std::string_view term = trim(text.substr(0, bar));
    if (term.size() >= 2 && term.front() == '(' && term.back() == ')') term = term.substr(1, term.size() - 2);
    IndexSet t = 0;
    while (true) {
      const auto amp = term.find('&');
      t |= IndexSet{1} << frame.index_of(trim(term.substr(0, amp)));
      if (amp == std::string_view::npos) break;
      term.remove_prefix(amp + 1);
    }
    terms.push_back(t);
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  return Proposition::canonicalize(frame.size(), terms);
}

Model tp2_model() {
  const Frame frame({"p", "b", "f", "nf"});
  const IndexSet c = (IndexSet{1} << frame.index_of("f")) | (IndexSet{1} << frame.index_of("nf"));
  return Model(frame, std::span<const IndexSet>(&c, 1));
}

AtomFrame tp2_atoms() { return AtomFrame({{"f", "nf"}, {"b", "nb"}, {"p", "np"}}); }

LiteralMap tp2_literals() {
  const std::vector<std::pair<std::size_t, AxisValue>> entries{
      {0, AxisValue{2, 0}}, {1, AxisValue{1, 0}}, {2, AxisValue{0, 0}}, {3, AxisValue{0, 1}}};
  return LiteralMap(4, tp2_atoms(), entries);
}

Bba tp2_m1(double eps1) {
  const Model m = tp2_model();
  return two_focal(m, prop(m.frame(), "p&nf"), prop(m.frame(), "p"), eps1);
}

Bba tp2_m2(double eps2) {
  const Model m = tp2_model();
  return two_focal(m, prop(m.frame(), "b&f"), prop(m.frame(), "b"), eps2);
}

Bba tp2_m3(double eps3) {
  const Model m = tp2_model();
  return two_focal(m, prop(m.frame(), "p&b"), prop(m.frame(), "p"), eps3);
}

Bba tp2_atom_m1(double eps1) { return two_focal(atom_model(), atoms("p&nf"), atoms("p"), eps1); }
Bba tp2_atom_m2(double eps2) { return two_focal(atom_model(), atoms("b&f"), atoms("b"), eps2); }
Bba tp2_atom_m3(double eps3) { return two_focal(atom_model(), atoms("p&b"), atoms("p"), eps3); }

double k12(double eps1, double eps2) { return eps1 + eps2 - eps1 * eps2; }

}  // namespace fixtures
