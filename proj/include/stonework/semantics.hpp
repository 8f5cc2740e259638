#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stonework/formula.hpp"

namespace stonework {

inline constexpr std::size_t kDefaultVariableCap = 20;

/// A total truth-value map over an ordered variable universe.
///
/// Assignments over a universe V are canonically ordered by counting in
/// binary with the FIRST variable most significant: index 0 sets every
/// variable false, the last index sets every variable true.
class Assignment {
public:
  Assignment(std::vector<std::string> variables, std::vector<bool> values);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<bool>& values() const noexcept { return values_; }
  bool has(std::string_view name) const;
  bool value(std::string_view name) const;

  std::size_t canonical_index() const;

  bool operator==(const Assignment& other) const = default;

private:
  std::vector<std::string> variables_;
  std::vector<bool> values_;
};

Assignment assignment_from_index(const std::vector<std::string>& variables,
                                 std::size_t index);

/// A finite list of formulas over an explicit, ordered, finite universe.
struct Theory {
  std::vector<std::string> universe;
  std::vector<Formula> formulas;
};

/// Builds a theory whose universe is the sorted list of occurring names.
Theory theory_from_formulas(std::vector<Formula> formulas);

/// Rejects duplicate or empty universe entries and formulas whose variables
/// fall outside the universe.
void validate_theory(const Theory& theory);

/// Theory file format: UTF-8 text, one formula per line, '#' starts a
/// comment line, and an optional first line "vars: P Q R" declares the
/// universe and its order. Without the header the universe is the sorted
/// list of occurring names.
Theory parse_theory(std::string_view text);
Theory load_theory_file(const std::string& path);

bool evaluate(const Formula& f, const Assignment& assignment);

std::vector<std::pair<Assignment, bool>> truth_table(
    const Formula& f, const std::vector<std::string>& variables,
    std::size_t variable_cap = kDefaultVariableCap);

bool is_tautology(const Formula& f, const std::vector<std::string>& variables,
                  std::size_t variable_cap = kDefaultVariableCap);

/// f and g agree under every assignment satisfying the theory. Both
/// formulas must live inside the theory's universe.
bool semantically_equivalent(const Formula& f, const Formula& g, const Theory& theory,
                             std::size_t variable_cap = kDefaultVariableCap);

/// f holds in every model of the theory.
bool entails(const Theory& theory, const Formula& f,
             std::size_t variable_cap = kDefaultVariableCap);

/// Canonical indices (ascending) of the assignments satisfying every
/// formula of the theory.
std::vector<std::size_t> model_indices(const Theory& theory,
                                       std::size_t variable_cap = kDefaultVariableCap);

/// Brute-force satisfiability: the canonically-first model, or absent when
/// the theory has none. This is the independent oracle the ultrafilter
/// pipeline is checked against.
std::optional<Assignment> sat_oracle(const Theory& theory,
                                     std::size_t variable_cap = kDefaultVariableCap);

}  // namespace stonework
