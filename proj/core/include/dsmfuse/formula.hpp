#pragma once

// Propositional formulas and the truth-table tautology check.
//
// Grammar (loosest binding first):
//   implication := disjunction [ "->" implication ]      right associative
//   disjunction := conjunction { "|" conjunction }
//   conjunction := unary { "&" unary }
//   unary       := "~" unary | "(" implication ")" | identifier

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsmfuse {

class Formula {
 public:
  enum class Kind { variable, negation, conjunction, disjunction, implication };

  /// Throws InputError with the offending column on malformed text.
  static Formula parse(std::string_view text);

  static Formula variable(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  [[nodiscard]] Kind kind() const noexcept;
  /// Distinct variable names in sorted order.
  [[nodiscard]] std::vector<std::string> variables() const;
  /// `values` holds one truth value per entry of variables().
  [[nodiscard]] bool evaluate(std::span<const bool> values) const;
  [[nodiscard]] std::string to_string() const;

  struct Node;

 private:
  friend bool tautology_check(const Formula& formula);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline constexpr std::size_t kMaxFormulaVariables = 6;

/// True iff the formula holds under every assignment. Formulas over more than
/// six variables are rejected with InputError.
[[nodiscard]] bool tautology_check(const Formula& formula);

struct NamedPrinciple {
  std::string_view name;
  std::string_view text;
};

/// Excluded middle, non-contradiction, Modus Ponens, Modus Tollens, Modus
/// Barbara and the pairing property of implication.
[[nodiscard]] std::span<const NamedPrinciple> classical_principles() noexcept;

}  // namespace dsmfuse
