#include "dsmfuse/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

#include "dsmfuse/error.hpp"

namespace dsmfuse {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr node = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  NodePtr implication() {
    NodePtr lhs = disjunction();
    if (consume("->")) return make(Formula::Kind::implication, lhs, implication());
    return lhs;
  }

  NodePtr disjunction() {
    NodePtr lhs = conjunction();
    while (consume("|")) lhs = make(Formula::Kind::disjunction, lhs, conjunction());
    return lhs;
  }

  NodePtr conjunction() {
    NodePtr lhs = unary();
    while (consume("&")) lhs = make(Formula::Kind::conjunction, lhs, unary());
    return lhs;
  }

  NodePtr unary() {
    if (consume("~")) return make(Formula::Kind::negation, unary(), nullptr);
    if (consume("(")) {
      NodePtr inner = implication();
      if (!consume(")")) fail("expected ')'");
      return inner;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail(pos_ < text_.size() ? "expected a variable" : "unexpected end of formula");
    auto node = std::make_shared<Formula::Node>();
    node->kind = Formula::Kind::variable;
    node->name = std::string(text_.substr(start, pos_ - start));
    return node;
  }

  static NodePtr make(Formula::Kind kind, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("formula column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect(const Formula::Node& node, std::set<std::string>& names) {
  if (node.kind == Formula::Kind::variable) {
    names.insert(node.name);
    return;
  }
  if (node.lhs) collect(*node.lhs, names);
  if (node.rhs) collect(*node.rhs, names);
}

bool eval(const Formula::Node& node, const std::map<std::string, bool, std::less<>>& env) {
  switch (node.kind) {
    case Formula::Kind::variable: return env.at(node.name);
    case Formula::Kind::negation: return !eval(*node.lhs, env);
    case Formula::Kind::conjunction: return eval(*node.lhs, env) && eval(*node.rhs, env);
    case Formula::Kind::disjunction: return eval(*node.lhs, env) || eval(*node.rhs, env);
    case Formula::Kind::implication: return !eval(*node.lhs, env) || eval(*node.rhs, env);
  }
  return false;
}

std::string render(const Formula::Node& node) {
  switch (node.kind) {
    case Formula::Kind::variable: return node.name;
    case Formula::Kind::negation: return "~" + render(*node.lhs);
    case Formula::Kind::conjunction: return "(" + render(*node.lhs) + " & " + render(*node.rhs) + ")";
    case Formula::Kind::disjunction: return "(" + render(*node.lhs) + " | " + render(*node.rhs) + ")";
    case Formula::Kind::implication: return "(" + render(*node.lhs) + " -> " + render(*node.rhs) + ")";
  }
  return {};
}

constexpr std::array<NamedPrinciple, 6> kPrinciples{{
    {"excluded middle", "a | ~a"},
    {"non-contradiction", "~(a & ~a)"},
    {"modus ponens", "(a & (a -> b)) -> b"},
    {"modus tollens", "(~b & (a -> b)) -> ~a"},
    {"modus barbara", "((a -> b) & (b -> c)) -> (a -> c)"},
    {"pairing of implications", "((a -> b) & (c -> d)) -> ((a & c) -> (b & d))"},
}};

}  // namespace

Formula Formula::parse(std::string_view text) { return Formula(Parser(text).parse_all()); }

Formula Formula::variable(std::string name) {
  if (name.empty()) throw InputError("variable name must be nonempty");
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<Node>(Node{Kind::negation, {}, std::move(operand.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Node{Kind::conjunction, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Node{Kind::disjunction, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Node{Kind::implication, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

std::vector<std::string> Formula::variables() const {
  std::set<std::string> names;
  collect(*node_, names);
  return {names.begin(), names.end()};
}

bool Formula::evaluate(std::span<const bool> values) const {
  const auto names = variables();
  if (values.size() != names.size()) throw InputError("one truth value per variable is required");
  std::map<std::string, bool, std::less<>> env;
  for (std::size_t i = 0; i < names.size(); ++i) env.emplace(names[i], values[i]);
  return eval(*node_, env);
}

std::string Formula::to_string() const { return render(*node_); }

bool tautology_check(const Formula& formula) {
  const auto names = formula.variables();
  if (names.size() > kMaxFormulaVariables) {
    throw InputError("formula has " + std::to_string(names.size()) + " variables; at most " +
                     std::to_string(kMaxFormulaVariables) + " are supported");
  }
  std::map<std::string, bool, std::less<>> env;
  for (std::uint32_t row = 0; row < (1U << names.size()); ++row) {
    for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = ((row >> i) & 1U) != 0;
    if (!eval(*formula.node_, env)) return false;
  }
  return true;
}

std::span<const NamedPrinciple> classical_principles() noexcept { return kPrinciples; }

}  // namespace dsmfuse
