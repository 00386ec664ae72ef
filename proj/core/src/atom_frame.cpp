#include "dsmfuse/atom_frame.hpp"

#include <set>

#include "dsmfuse/error.hpp"

namespace dsmfuse {

namespace {

std::size_t count_atoms(const std::vector<std::vector<std::string>>& axes) {
  if (axes.empty()) throw InputError("atom frame needs at least one axis");
  std::size_t count = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (axes[a].size() < 2) {
      throw InputError("axis " + std::to_string(a) + " needs at least two exclusive values");
    }
    std::set<std::string> seen(axes[a].begin(), axes[a].end());
    if (seen.size() != axes[a].size()) throw InputError("axis " + std::to_string(a) + " repeats a value");
    count *= axes[a].size();
    if (count > kMaxFrameSize) {
      throw InputError("atom frame would have more than " + std::to_string(kMaxFrameSize) + " atoms");
    }
  }
  return count;
}

std::string join_values(const std::vector<std::vector<std::string>>& axes, std::size_t atom) {
  std::string name;
  for (std::size_t a = axes.size(); a-- > 0;) {
    const std::size_t size = axes[a].size();
    const std::string& value = axes[a][atom % size];
    atom /= size;
    name = name.empty() ? value : value + "&" + name;
  }
  return name;
}

Frame atom_names(const std::vector<std::vector<std::string>>& axes, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(join_values(axes, i));
  return Frame(std::move(names));
}

}  // namespace

AtomFrame::AtomFrame(std::vector<std::vector<std::string>> axes)
    : axes_(std::move(axes)), atom_count_(count_atoms(axes_)), frame_(atom_names(axes_, atom_count_)) {}

std::vector<std::size_t> AtomFrame::atom_values(std::size_t atom) const {
  if (atom >= atom_count_) throw InputError("atom index out of range");
  std::vector<std::size_t> values(axes_.size());
  for (std::size_t a = axes_.size(); a-- > 0;) {
    values[a] = atom % axes_[a].size();
    atom /= axes_[a].size();
  }
  return values;
}

std::string AtomFrame::atom_name(std::size_t atom) const { return frame_.name(atom); }

AtomSet AtomFrame::all_atoms() const noexcept {
  return atom_count_ >= 64 ? ~AtomSet{0} : (AtomSet{1} << atom_count_) - 1;
}

LiteralMap::LiteralMap(std::size_t frame_width, const AtomFrame& atoms,
                       std::span<const std::pair<std::size_t, AxisValue>> entries)
    : values_(frame_width) {
  std::set<AxisValue> used;
  for (const auto& [singleton, target] : entries) {
    if (singleton >= frame_width) throw InputError("literal map names a singleton outside the frame");
    if (target.axis >= atoms.axes().size()) {
      throw InputError("literal map refers to axis " + std::to_string(target.axis) + " which does not exist");
    }
    if (target.value >= atoms.axes()[target.axis].size()) {
      throw InputError("literal map refers to value " + std::to_string(target.value) + " of axis " +
                       std::to_string(target.axis) + " which does not exist");
    }
    if (values_[singleton]) throw InputError("singleton mapped twice in literal map");
    if (!used.insert(target).second) {
      throw InputError("two singletons map to the same axis value (axis " + std::to_string(target.axis) +
                       ", value " + std::to_string(target.value) + ")");
    }
    values_[singleton] = target;
  }
}

std::optional<AxisValue> LiteralMap::lookup(std::size_t singleton) const {
  if (singleton >= values_.size()) return std::nullopt;
  return values_[singleton];
}

AtomSet refine_to_atoms(const Proposition& a, const AtomFrame& atoms, const LiteralMap& literals) {
  if (a.width() != literals.frame_width()) {
    throw FrameMismatch("proposition frame does not match the literal map");
  }
  const std::size_t axis_count = atoms.axes().size();
  AtomSet result = 0;
  for (IndexSet term : a.terms()) {
    // Required value per axis; npos means the axis is unconstrained.
    std::vector<std::size_t> required(axis_count, static_cast<std::size_t>(-1));
    bool contradictory = false;
    for (IndexSet rest = term; rest != 0; rest &= rest - 1) {
      const auto singleton = static_cast<std::size_t>(std::countr_zero(rest));
      const auto target = literals.lookup(singleton);
      if (!target) {
        throw InputError("singleton index " + std::to_string(singleton) + " has no axis value on the atom frame");
      }
      auto& slot = required[target->axis];
      if (slot != static_cast<std::size_t>(-1) && slot != target->value) contradictory = true;
      slot = target->value;
    }
    if (contradictory) continue;
    for (std::size_t atom = 0; atom < atoms.atom_count(); ++atom) {
      const auto values = atoms.atom_values(atom);
      bool matches = true;
      for (std::size_t ax = 0; ax < axis_count && matches; ++ax) {
        if (required[ax] != static_cast<std::size_t>(-1) && required[ax] != values[ax]) matches = false;
      }
      if (matches) result |= AtomSet{1} << atom;
    }
  }
  return result;
}

Proposition atoms_to_proposition(AtomSet set, const AtomFrame& atoms) {
  if ((set & ~atoms.all_atoms()) != 0) throw InputError("atom set names atoms outside the frame");
  std::vector<IndexSet> terms;
  for (AtomSet rest = set; rest != 0; rest &= rest - 1) terms.push_back(rest & (~rest + 1));
  return Proposition::canonicalize(atoms.atom_count(), terms);
}

}  // namespace dsmfuse
