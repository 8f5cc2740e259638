#include "stonework/semantics.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace stonework {

namespace {

void require_unique_names(const std::vector<std::string>& names, const char* what) {
  std::set<std::string_view> seen;
  for (const std::string& name : names) {
    if (name.empty())
      throw ArgumentError(std::string(what) + ": names must not be empty");
    if (!seen.insert(name).second)
      throw ArgumentError(std::string(what) + ": duplicate name '" + name + "'");
  }
}

void require_variable_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw SizeError("universe of " + std::to_string(count) +
                    " variables exceeds the cap " + std::to_string(cap));
}

}  // namespace

Assignment::Assignment(std::vector<std::string> variables, std::vector<bool> values)
    : variables_(std::move(variables)), values_(std::move(values)) {
  if (variables_.size() != values_.size())
    throw ArgumentError("assignment: " + std::to_string(variables_.size()) +
                        " variables but " + std::to_string(values_.size()) + " values");
  require_unique_names(variables_, "assignment");
}

bool Assignment::has(std::string_view name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

bool Assignment::value(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return values_[i];
  throw ArgumentError("assignment: variable '" + std::string(name) + "' is not assigned");
}

std::size_t Assignment::canonical_index() const {
  std::size_t index = 0;
  for (bool v : values_) index = (index << 1) | (v ? 1 : 0);
  return index;
}

Assignment assignment_from_index(const std::vector<std::string>& variables,
                                 std::size_t index) {
  const std::size_t n = variables.size();
  if (n < 64 && index >= (std::size_t{1} << n))
    throw ArgumentError("assignment index " + std::to_string(index) +
                        " out of range for " + std::to_string(n) + " variables");
  std::vector<bool> values(n);
  for (std::size_t i = 0; i < n; ++i)
    values[i] = (index >> (n - 1 - i)) & 1;  // first variable most significant
  return Assignment(variables, std::move(values));
}

Theory theory_from_formulas(std::vector<Formula> formulas) {
  std::set<std::string> names;
  for (const Formula& f : formulas)
    for (std::string& v : variables_of(f)) names.insert(std::move(v));
  return Theory{{names.begin(), names.end()}, std::move(formulas)};
}

void validate_theory(const Theory& theory) {
  require_unique_names(theory.universe, "theory universe");
  for (const Formula& f : theory.formulas) {
    for (const std::string& v : variables_of(f)) {
      if (std::find(theory.universe.begin(), theory.universe.end(), v) ==
          theory.universe.end())
        throw ArgumentError("theory: formula variable '" + v +
                            "' is not in the declared universe");
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Theory parse_theory(std::string_view text) {
  std::vector<std::string> declared;
  bool have_header = false;
  std::vector<std::string> formula_lines;

  std::size_t start = 0;
  bool seen_content = false;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (!seen_content && line.substr(0, 5) == "vars:") {
      have_header = true;
      seen_content = true;
      std::istringstream names(std::string(line.substr(5)));
      std::string name;
      while (names >> name) declared.push_back(name);
      require_unique_names(declared, "theory header");
      continue;
    }
    seen_content = true;
    formula_lines.emplace_back(line);
  }

  Theory theory;
  if (have_header) {
    theory.universe = declared;
    for (const std::string& line : formula_lines)
      theory.formulas.push_back(parse_formula(line, theory.universe));
  } else {
    std::vector<Formula> formulas;
    for (const std::string& line : formula_lines)
      formulas.push_back(parse_formula(line));
    theory = theory_from_formulas(std::move(formulas));
  }
  validate_theory(theory);
  return theory;
}

Theory load_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open theory file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_theory(buffer.str());
}

bool evaluate(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Variable:
      return assignment.value(f.variable_name());
    case Formula::Kind::Negation:
      return !evaluate(f.child(), assignment);
    case Formula::Kind::Conjunction:
      return evaluate(f.left(), assignment) && evaluate(f.right(), assignment);
    case Formula::Kind::Disjunction:
      return evaluate(f.left(), assignment) || evaluate(f.right(), assignment);
    case Formula::Kind::Implication:
      return !evaluate(f.left(), assignment) || evaluate(f.right(), assignment);
    case Formula::Kind::Biconditional:
      return evaluate(f.left(), assignment) == evaluate(f.right(), assignment);
  }
  throw InvariantError("evaluate: unreachable formula kind");
}

namespace {

void require_covering(const Formula& f, const std::vector<std::string>& variables) {
  for (const std::string& v : variables_of(f))
    if (std::find(variables.begin(), variables.end(), v) == variables.end())
      throw ArgumentError("variable '" + v + "' of the formula is not in the universe");
}

}  // namespace

std::vector<std::pair<Assignment, bool>> truth_table(
    const Formula& f, const std::vector<std::string>& variables,
    std::size_t variable_cap) {
  require_unique_names(variables, "truth_table");
  require_variable_cap(variables.size(), variable_cap);
  require_covering(f, variables);
  const std::size_t rows = std::size_t{1} << variables.size();
  std::vector<std::pair<Assignment, bool>> table;
  table.reserve(rows);
  for (std::size_t index = 0; index < rows; ++index) {
    Assignment h = assignment_from_index(variables, index);
    const bool value = evaluate(f, h);
    table.emplace_back(std::move(h), value);
  }
  return table;
}

bool is_tautology(const Formula& f, const std::vector<std::string>& variables,
                  std::size_t variable_cap) {
  require_unique_names(variables, "is_tautology");
  require_variable_cap(variables.size(), variable_cap);
  require_covering(f, variables);
  const std::size_t rows = std::size_t{1} << variables.size();
  for (std::size_t index = 0; index < rows; ++index)
    if (!evaluate(f, assignment_from_index(variables, index))) return false;
  return true;
}

bool semantically_equivalent(const Formula& f, const Formula& g, const Theory& theory,
                             std::size_t variable_cap) {
  validate_theory(theory);
  require_variable_cap(theory.universe.size(), variable_cap);
  require_covering(f, theory.universe);
  require_covering(g, theory.universe);
  const std::size_t rows = std::size_t{1} << theory.universe.size();
  for (std::size_t index = 0; index < rows; ++index) {
    const Assignment h = assignment_from_index(theory.universe, index);
    bool satisfies = true;
    for (const Formula& t : theory.formulas)
      if (!evaluate(t, h)) {
        satisfies = false;
        break;
      }
    if (satisfies && evaluate(f, h) != evaluate(g, h)) return false;
  }
  return true;
}

bool entails(const Theory& theory, const Formula& f, std::size_t variable_cap) {
  validate_theory(theory);
  require_variable_cap(theory.universe.size(), variable_cap);
  require_covering(f, theory.universe);
  for (std::size_t index : model_indices(theory, variable_cap))
    if (!evaluate(f, assignment_from_index(theory.universe, index))) return false;
  return true;
}

std::vector<std::size_t> model_indices(const Theory& theory, std::size_t variable_cap) {
  validate_theory(theory);
  require_variable_cap(theory.universe.size(), variable_cap);
  const std::size_t rows = std::size_t{1} << theory.universe.size();
  std::vector<std::size_t> models;
  for (std::size_t index = 0; index < rows; ++index) {
    const Assignment h = assignment_from_index(theory.universe, index);
    bool satisfies = true;
    for (const Formula& t : theory.formulas)
      if (!evaluate(t, h)) {
        satisfies = false;
        break;
      }
    if (satisfies) models.push_back(index);
  }
  return models;
}

std::optional<Assignment> sat_oracle(const Theory& theory, std::size_t variable_cap) {
  validate_theory(theory);
  require_variable_cap(theory.universe.size(), variable_cap);
  const std::size_t rows = std::size_t{1} << theory.universe.size();
  for (std::size_t index = 0; index < rows; ++index) {
    Assignment h = assignment_from_index(theory.universe, index);
    bool satisfies = true;
    for (const Formula& t : theory.formulas)
      if (!evaluate(t, h)) {
        satisfies = false;
        break;
      }
    if (satisfies) return h;
  }
  return std::nullopt;
}

}  // namespace stonework
