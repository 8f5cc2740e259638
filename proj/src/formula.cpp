#include "stonework/formula.hpp"

#include <algorithm>
#include <set>

namespace stonework {

struct Formula::Node {
  Kind kind;
  std::string name;               // Variable
  std::vector<Formula> children;  // Negation: 1, binary: 2
};

Formula Formula::variable(std::string name) {
  if (name.empty()) throw ArgumentError("formula: variable name must not be empty");
  return Formula(std::make_shared<const Node>(Node{Kind::Variable, std::move(name), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Negation, {}, {std::move(f)}}));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{kind, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return binary(Kind::Conjunction, std::move(l), std::move(r));
}
Formula Formula::disjunction(Formula l, Formula r) {
  return binary(Kind::Disjunction, std::move(l), std::move(r));
}
Formula Formula::implication(Formula l, Formula r) {
  return binary(Kind::Implication, std::move(l), std::move(r));
}
Formula Formula::biconditional(Formula l, Formula r) {
  return binary(Kind::Biconditional, std::move(l), std::move(r));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::variable_name() const {
  if (node_->kind != Kind::Variable)
    throw ArgumentError("formula: variable_name() on a non-variable node");
  return node_->name;
}

const Formula& Formula::child() const {
  if (node_->kind != Kind::Negation)
    throw ArgumentError("formula: child() on a non-negation node");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (node_->children.size() != 2)
    throw ArgumentError("formula: left() on a non-binary node");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() != 2)
    throw ArgumentError("formula: right() on a non-binary node");
  return node_->children[1];
}

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Variable: return 6;
    case Formula::Kind::Negation: return 5;
    case Formula::Kind::Conjunction: return 4;
    case Formula::Kind::Disjunction: return 3;
    case Formula::Kind::Implication: return 2;
    case Formula::Kind::Biconditional: return 1;
  }
  return 0;
}

const char* connective_text(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Conjunction: return " & ";
    case Formula::Kind::Disjunction: return " | ";
    case Formula::Kind::Implication: return " -> ";
    case Formula::Kind::Biconditional: return " <-> ";
    default: return "";
  }
}

void print_into(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(f, out);
  if (parens) out += ')';
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Variable:
      out += f.variable_name();
      return;
    case Formula::Kind::Negation:
      out += '~';
      print_wrapped(f.child(), precedence(f.child().kind()) < precedence(Formula::Kind::Negation), out);
      return;
    case Formula::Kind::Implication: {
      // Right-associative: the left side needs parentheses at equal
      // precedence, the right side does not.
      const int p = precedence(f.kind());
      print_wrapped(f.left(), precedence(f.left().kind()) <= p, out);
      out += connective_text(f.kind());
      print_wrapped(f.right(), precedence(f.right().kind()) < p, out);
      return;
    }
    default: {
      const int p = precedence(f.kind());
      print_wrapped(f.left(), precedence(f.left().kind()) < p, out);
      out += connective_text(f.kind());
      print_wrapped(f.right(), precedence(f.right().kind()) <= p, out);
      return;
    }
  }
}

}  // namespace

bool structurally_equal(const Formula& lhs, const Formula& rhs) {
  if (lhs.kind() != rhs.kind()) return false;
  switch (lhs.kind()) {
    case Formula::Kind::Variable:
      return lhs.variable_name() == rhs.variable_name();
    case Formula::Kind::Negation:
      return structurally_equal(lhs.child(), rhs.child());
    default:
      return structurally_equal(lhs.left(), rhs.left()) &&
             structurally_equal(lhs.right(), rhs.right());
  }
}

namespace {
void collect_variables(const Formula& f, std::set<std::string>& names) {
  switch (f.kind()) {
    case Formula::Kind::Variable:
      names.insert(f.variable_name());
      return;
    case Formula::Kind::Negation:
      collect_variables(f.child(), names);
      return;
    default:
      collect_variables(f.left(), names);
      collect_variables(f.right(), names);
      return;
  }
}
}  // namespace

std::vector<std::string> variables_of(const Formula& f) {
  std::set<std::string> names;
  collect_variables(f, names);
  return {names.begin(), names.end()};
}

std::string pretty_print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

namespace {

bool is_identifier_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_identifier_char(char c) {
  return is_identifier_start(c) || (c >= '0' && c <= '9');
}

// Unicode aliases, matched by their UTF-8 byte sequences.
constexpr std::string_view kNotSign = "\xC2\xAC";      // negation sign
constexpr std::string_view kAndSign = "\xE2\x88\xA7";  // logical and
constexpr std::string_view kOrSign = "\xE2\x88\xA8";   // logical or
constexpr std::string_view kArrow = "\xE2\x86\x92";    // rightwards arrow
constexpr std::string_view kDoubleArrow = "\xE2\x86\x94";  // left right arrow

bool starts_with(std::string_view text, std::size_t at, std::string_view prefix) {
  return text.substr(at, prefix.size()) == prefix;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (is_identifier_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_identifier_char(text[j])) ++j;
      tokens.push_back({Token::Type::Identifier, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    switch (c) {
      case '~': tokens.push_back({Token::Type::Not, "~", i}); ++i; continue;
      case '&': tokens.push_back({Token::Type::And, "&", i}); ++i; continue;
      case '|': tokens.push_back({Token::Type::Or, "|", i}); ++i; continue;
      case '(': tokens.push_back({Token::Type::LParen, "(", i}); ++i; continue;
      case ')': tokens.push_back({Token::Type::RParen, ")", i}); ++i; continue;
      case '-':
        if (starts_with(text, i, "->")) {
          tokens.push_back({Token::Type::Implies, "->", i});
          i += 2;
          continue;
        }
        throw ParseError("lexical error at offset " + std::to_string(i) +
                         ": '-' must begin '->'", i);
      case '<':
        if (starts_with(text, i, "<->")) {
          tokens.push_back({Token::Type::Iff, "<->", i});
          i += 3;
          continue;
        }
        throw ParseError("lexical error at offset " + std::to_string(i) +
                         ": '<' must begin '<->'", i);
      default: break;
    }
    if (starts_with(text, i, kNotSign)) {
      tokens.push_back({Token::Type::Not, "~", i});
      i += kNotSign.size();
      continue;
    }
    if (starts_with(text, i, kAndSign)) {
      tokens.push_back({Token::Type::And, "&", i});
      i += kAndSign.size();
      continue;
    }
    if (starts_with(text, i, kOrSign)) {
      tokens.push_back({Token::Type::Or, "|", i});
      i += kOrSign.size();
      continue;
    }
    if (starts_with(text, i, kArrow)) {
      tokens.push_back({Token::Type::Implies, "->", i});
      i += kArrow.size();
      continue;
    }
    if (starts_with(text, i, kDoubleArrow)) {
      tokens.push_back({Token::Type::Iff, "<->", i});
      i += kDoubleArrow.size();
      continue;
    }
    throw ParseError("lexical error at offset " + std::to_string(i) +
                     ": unexpected character '" + std::string(1, c) + "'", i);
  }
  tokens.push_back({Token::Type::End, "", text.size()});
  return tokens;
}

namespace {

class Parser {
public:
  Parser(std::vector<Token> tokens, const std::vector<std::string>* universe)
      : tokens_(std::move(tokens)), universe_(universe) {}

  Formula parse() {
    Formula f = parse_iff();
    expect(Token::Type::End, "end of input");
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  Token advance() { return tokens_[pos_++]; }

  bool accept(Token::Type type) {
    if (peek().type != type) return false;
    ++pos_;
    return true;
  }

  void expect(Token::Type type, const char* what) {
    if (peek().type != type)
      throw ParseError("syntax error at offset " + std::to_string(peek().position) +
                       ": expected " + what +
                       (peek().type == Token::Type::End
                            ? std::string(", found end of input")
                            : ", found '" + peek().text + "'"),
                       peek().position);
    ++pos_;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept(Token::Type::Iff)) f = Formula::biconditional(f, parse_implies());
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Token::Type::Implies)) return Formula::implication(f, parse_implies());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Token::Type::Or)) f = Formula::disjunction(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Token::Type::And)) f = Formula::conjunction(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept(Token::Type::Not)) return Formula::negation(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    if (peek().type == Token::Type::Identifier) {
      Token tok = advance();
      if (universe_ &&
          std::find(universe_->begin(), universe_->end(), tok.text) == universe_->end())
        throw ParseError("unknown variable '" + tok.text + "' at offset " +
                         std::to_string(tok.position), tok.position);
      return Formula::variable(tok.text);
    }
    if (accept(Token::Type::LParen)) {
      Formula f = parse_iff();
      expect(Token::Type::RParen, "')'");
      return f;
    }
    throw ParseError("syntax error at offset " + std::to_string(peek().position) +
                     ": expected a formula" +
                     (peek().type == Token::Type::End
                          ? std::string(", found end of input")
                          : ", found '" + peek().text + "'"),
                     peek().position);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* universe_;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(tokenize(text), nullptr).parse();
}

Formula parse_formula(std::string_view text, const std::vector<std::string>& universe) {
  return Parser(tokenize(text), &universe).parse();
}

}  // namespace stonework
