#include "dsmfuse/lattice.hpp"

#include <algorithm>
#include <set>

#include "dsmfuse/error.hpp"

namespace dsmfuse {

namespace {

IndexSet width_mask(std::size_t width) {
  return width >= 64 ? ~IndexSet{0} : (IndexSet{1} << width) - 1;
}

void require_same_width(const Proposition& a, const Proposition& b) {
  if (a.width() != b.width()) {
    throw FrameMismatch("propositions over frames of size " + std::to_string(a.width()) +
                        " and " + std::to_string(b.width()));
  }
}

void require_width(const Proposition& a, const Model& model) {
  if (a.width() != model.width()) {
    throw FrameMismatch("proposition over a frame of size " + std::to_string(a.width()) +
                        " used with a model of size " + std::to_string(model.width()));
  }
}

// Sorts, deduplicates and absorbs in place. Terms must already be valid.
void normalize_terms(std::vector<IndexSet>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  // Any subset of a term is no larger, so it precedes the term in size order.
  std::size_t kept = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const IndexSet t = terms[i];
    const bool absorbed = std::any_of(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(kept),
                                      [t](IndexSet s) { return is_subset(s, t); });
    if (!absorbed) terms[kept++] = t;
  }
  terms.resize(kept);
}

}  // namespace

// Frame ------------------------------------------------------------------

Frame::Frame(std::vector<std::string> singletons) : names_(std::move(singletons)) {
  if (names_.empty()) throw InputError("frame must contain at least one singleton");
  if (names_.size() > kMaxFrameSize) {
    throw InputError("frame has " + std::to_string(names_.size()) + " singletons; at most " +
                     std::to_string(kMaxFrameSize) + " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InputError("frame singleton names must be nonempty");
    if (!seen.insert(name).second) throw InputError("duplicate frame singleton '" + name + "'");
  }
}

Frame Frame::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return Frame(std::move(names));
}

std::optional<std::size_t> Frame::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Frame::index_of(std::string_view name) const {
  if (auto index = find(name)) return *index;
  throw InputError("unknown singleton '" + std::string(name) + "'");
}

// Proposition ------------------------------------------------------------

Proposition Proposition::empty(std::size_t width) { return Proposition(width, {}); }

Proposition Proposition::singleton(std::size_t width, std::size_t index) {
  if (index >= width) {
    throw InputError("singleton index " + std::to_string(index) + " out of range for frame of size " +
                     std::to_string(width));
  }
  return Proposition(width, {IndexSet{1} << index});
}

Proposition Proposition::intersection(std::size_t width, IndexSet term) {
  const IndexSet one[] = {term};
  return canonicalize(width, one);
}

Proposition Proposition::canonicalize(std::size_t width, std::span<const IndexSet> terms) {
  if (width > kMaxFrameSize) throw InputError("frame too large");
  const IndexSet valid = width_mask(width);
  for (IndexSet t : terms) {
    if (t == 0) throw InputError("intersection term must name at least one singleton");
    if (!is_subset(t, valid)) {
      throw InputError("singleton index " + std::to_string(std::bit_width(t) - 1) +
                       " out of range for frame of size " + std::to_string(width));
    }
  }
  std::vector<IndexSet> out(terms.begin(), terms.end());
  normalize_terms(out);
  return Proposition(width, std::move(out));
}

IndexSet Proposition::support() const noexcept {
  IndexSet all = 0;
  for (IndexSet t : terms_) all |= t;
  return all;
}

std::strong_ordering operator<=>(const Proposition& a, const Proposition& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i] == b.terms_[i]) continue;
    return term_less(a.terms_[i], b.terms_[i]) ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  }
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
  return a.width_ <=> b.width_;
}

Proposition conjoin(const Proposition& a, const Proposition& b) {
  require_same_width(a, b);
  std::vector<IndexSet> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (IndexSet s : a.terms()) {
    for (IndexSet t : b.terms()) terms.push_back(s | t);
  }
  return Proposition::canonicalize(a.width(), terms);
}

Proposition disjoin(const Proposition& a, const Proposition& b) {
  require_same_width(a, b);
  std::vector<IndexSet> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Proposition::canonicalize(a.width(), terms);
}

Proposition u_of(const Proposition& a) {
  std::vector<IndexSet> terms;
  for (IndexSet rest = a.support(); rest != 0; rest &= rest - 1) terms.push_back(rest & (~rest + 1));
  return Proposition::canonicalize(a.width(), terms);
}

Proposition total_ignorance(std::size_t width) {
  if (width == 0) throw InputError("total ignorance needs a nonempty frame");
  std::vector<IndexSet> terms;
  for (std::size_t i = 0; i < width; ++i) terms.push_back(IndexSet{1} << i);
  return Proposition::canonicalize(width, terms);
}

// Model ------------------------------------------------------------------

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::free: return "free";
    case ModelKind::hybrid: return "hybrid";
    case ModelKind::shafer: return "shafer";
  }
  return "?";
}

Model::Model(Frame frame, std::span<const IndexSet> empty_intersections)
    : frame_(std::move(frame)) {
  const IndexSet valid = width_mask(frame_.size());
  for (IndexSet c : empty_intersections) {
    if (cardinality(c) < 2) {
      throw InputError("an empty-intersection constraint needs at least two singletons");
    }
    if (!is_subset(c, valid)) throw InputError("constraint names a singleton outside the frame");
  }
  constraints_.assign(empty_intersections.begin(), empty_intersections.end());
  normalize_terms(constraints_);

  if (constraints_.empty()) {
    kind_ = ModelKind::free;
  } else {
    const std::size_t n = frame_.size();
    const bool all_pairs = constraints_.size() == n * (n - 1) / 2 &&
                           std::all_of(constraints_.begin(), constraints_.end(),
                                       [](IndexSet c) { return cardinality(c) == 2; });
    kind_ = all_pairs ? ModelKind::shafer : ModelKind::hybrid;
  }
}

Model Model::free(Frame frame) { return Model(std::move(frame)); }

Model Model::shafer(Frame frame) {
  std::vector<IndexSet> pairs;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.size(); ++j) pairs.push_back((IndexSet{1} << i) | (IndexSet{1} << j));
  }
  return Model(std::move(frame), pairs);
}

bool Model::term_is_empty(IndexSet term) const noexcept {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [term](IndexSet c) { return is_subset(c, term); });
}

Proposition Model::reduce(const Proposition& a) const {
  require_width(a, *this);
  if (constraints_.empty()) return a;
  std::vector<IndexSet> kept;
  kept.reserve(a.terms_.size());
  for (IndexSet t : a.terms_) {
    if (!term_is_empty(t)) kept.push_back(t);
  }
  // A subset of an antichain is still an antichain in canonical order.
  return Proposition(a.width(), std::move(kept));
}

bool Model::is_empty(const Proposition& a) const {
  require_width(a, *this);
  return std::all_of(a.terms_.begin(), a.terms_.end(), [this](IndexSet t) { return term_is_empty(t); });
}

Proposition reduce_under_model(const Proposition& a, const Model& model) { return model.reduce(a); }

bool leq(const Proposition& a, const Proposition& b, const Model& model) {
  require_same_width(a, b);
  require_width(a, model);
  // Every surviving term of a must refine some term of b; this is equivalent
  // to reduce(a ∧ b) == reduce(a) because surviving terms are themselves
  // nonempty regions of the constrained lattice.
  for (IndexSet t : a.terms()) {
    if (model.term_is_empty(t)) continue;
    const bool covered = std::any_of(b.terms().begin(), b.terms().end(),
                                     [t](IndexSet s) { return is_subset(s, t); });
    if (!covered) return false;
  }
  return true;
}

}  // namespace dsmfuse
