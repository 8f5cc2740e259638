#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "stonework/errors.hpp"

namespace stonework {

/// An immutable propositional formula. Copies share structure; equality of
/// formulas is syntactic (structurally_equal) and says nothing about logical
/// equivalence.
///
/// Surface syntax: identifiers, ~ & | -> <-> with unicode aliases
/// (negation, conjunction, disjunction, implication, biconditional), and
/// parentheses. Precedence ~ > & > | > -> > <->; & | <-> associate to the
/// left, -> to the right.
class Formula {
public:
  enum class Kind {
    Variable,
    Negation,
    Conjunction,
    Disjunction,
    Implication,
    Biconditional,
  };

  static Formula variable(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  const std::string& variable_name() const;  // Variable nodes only
  const Formula& child() const;              // Negation nodes only
  const Formula& left() const;               // binary nodes only
  const Formula& right() const;              // binary nodes only

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  std::shared_ptr<const Node> node_;
};

bool structurally_equal(const Formula& lhs, const Formula& rhs);

/// Distinct variable names occurring in the formula, sorted ascending.
std::vector<std::string> variables_of(const Formula& f);

/// Minimal-parenthesis ASCII rendering; parsing the result reproduces a
/// structurally equal tree.
std::string pretty_print(const Formula& f);

struct Token {
  enum class Type { Identifier, Not, And, Or, Implies, Iff, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t position;  // byte offset into the input
};

std::vector<Token> tokenize(std::string_view text);

Formula parse_formula(std::string_view text);

/// As above, but every variable must come from the declared universe.
Formula parse_formula(std::string_view text, const std::vector<std::string>& universe);

}  // namespace stonework
