#include "stonework/corpus.hpp"

#include <set>

namespace stonework {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t pick(std::uint64_t& state, std::uint64_t bound) {
  return splitmix64(state) % bound;
}

}  // namespace

TheoryVerdict analyze_theory(const Theory& theory, const LTAlgebra& lt_empty,
                             std::size_t carrier_cap, std::size_t variable_cap) {
  validate_theory(theory);
  const LTAlgebra lt_theory = build_lt_algebra(theory, carrier_cap, variable_cap);

  TheoryVerdict verdict;
  for (const Formula& f : theory.formulas) verdict.formulas.push_back(pretty_print(f));

  std::optional<Assignment> model = find_model_via_ultrafilter(lt_empty, lt_theory);
  const std::optional<Assignment> oracle = sat_oracle(theory, variable_cap);

  verdict.consistent = model.has_value();
  verdict.oracle_agrees = model.has_value() == oracle.has_value();
  if (model) {
    verdict.model_verified = true;
    for (const Formula& f : theory.formulas)
      if (!evaluate(f, *model)) verdict.model_verified = false;
    const DiagramCheck diagram = soundness_check(lt_empty, lt_theory, *model);
    verdict.diagram_commutes = diagram.ok();
    verdict.model = std::move(model);
  }
  return verdict;
}

TheoryVerdict analyze_theory(const Theory& theory, std::size_t carrier_cap,
                             std::size_t variable_cap) {
  const LTAlgebra lt_empty =
      build_lt_algebra(Theory{theory.universe, {}}, carrier_cap, variable_cap);
  return analyze_theory(theory, lt_empty, carrier_cap, variable_cap);
}

std::vector<Formula> semantic_class_representatives(
    const std::vector<std::string>& variables, int max_depth) {
  if (variables.empty())
    throw ArgumentError("semantic classes: the universe must not be empty");
  if (variables.size() > 6)
    throw SizeError("semantic classes: more than 6 variables is unsupported");
  const std::size_t rows = std::size_t{1} << variables.size();

  std::vector<Formula> reps;
  std::set<std::uint64_t> seen;
  auto add = [&](Formula f) {
    std::uint64_t mask = 0;
    for (std::size_t index = 0; index < rows; ++index)
      if (evaluate(f, assignment_from_index(variables, index)))
        mask |= std::uint64_t{1} << index;
    if (seen.insert(mask).second) reps.push_back(std::move(f));
  };

  for (const std::string& v : variables) add(Formula::variable(v));

  for (int level = 1; level <= max_depth; ++level) {
    // Operands come from classes reachable one level down; anything added
    // during this level would overshoot the depth budget.
    const std::size_t frontier = reps.size();
    for (std::size_t i = 0; i < frontier; ++i) add(Formula::negation(reps[i]));
    for (std::size_t i = 0; i < frontier; ++i)
      for (std::size_t j = 0; j < frontier; ++j)
        add(Formula::conjunction(reps[i], reps[j]));
    for (std::size_t i = 0; i < frontier; ++i)
      for (std::size_t j = 0; j < frontier; ++j)
        add(Formula::disjunction(reps[i], reps[j]));
    for (std::size_t i = 0; i < frontier; ++i)
      for (std::size_t j = 0; j < frontier; ++j)
        add(Formula::implication(reps[i], reps[j]));
    for (std::size_t i = 0; i < frontier; ++i)
      for (std::size_t j = 0; j < frontier; ++j)
        add(Formula::biconditional(reps[i], reps[j]));
  }
  return reps;
}

Formula random_formula(std::uint64_t& state, const std::vector<std::string>& variables,
                       int depth) {
  if (variables.empty())
    throw ArgumentError("random_formula: the universe must not be empty");
  if (depth <= 0)
    return Formula::variable(variables[pick(state, variables.size())]);

  const std::uint64_t kind = pick(state, 5);
  if (kind == 0) return Formula::negation(random_formula(state, variables, depth - 1));

  Formula deep = random_formula(state, variables, depth - 1);
  Formula shallow =
      random_formula(state, variables, static_cast<int>(pick(state, depth)));
  const bool deep_on_left = pick(state, 2) == 0;
  Formula lhs = deep_on_left ? std::move(deep) : std::move(shallow);
  Formula rhs = deep_on_left ? std::move(shallow) : std::move(deep);
  switch (kind) {
    case 1: return Formula::conjunction(std::move(lhs), std::move(rhs));
    case 2: return Formula::disjunction(std::move(lhs), std::move(rhs));
    case 3: return Formula::implication(std::move(lhs), std::move(rhs));
    default: return Formula::biconditional(std::move(lhs), std::move(rhs));
  }
}

std::vector<Theory> corpus_theories(const CorpusConfig& config) {
  std::vector<Theory> theories;
  const std::vector<Formula> reps =
      semantic_class_representatives(config.variables, config.exhaustive_depth);

  const auto limited = [&]() {
    return config.exhaustive_limit != 0 && theories.size() >= config.exhaustive_limit;
  };

  theories.push_back(Theory{config.variables, {}});

  // All subsets of class representatives up to the configured size, in
  // lexicographic index order.
  for (std::size_t size = 1; size <= config.max_theory_size && !limited(); ++size) {
    if (size > reps.size()) break;
    std::vector<std::size_t> index(size);
    for (std::size_t i = 0; i < size; ++i) index[i] = i;
    while (!limited()) {
      Theory theory{config.variables, {}};
      for (std::size_t i : index) theory.formulas.push_back(reps[i]);
      theories.push_back(std::move(theory));

      // Advance to the next combination: bump the rightmost index that has
      // room, reset everything after it.
      int bump = static_cast<int>(size) - 1;
      while (bump >= 0 && index[bump] == reps.size() - size + bump) --bump;
      if (bump < 0) break;
      ++index[bump];
      for (std::size_t j = bump + 1; j < size; ++j) index[j] = index[j - 1] + 1;
    }
  }

  std::uint64_t state = config.seed;
  for (std::size_t t = 0; t < config.random_theories; ++t) {
    const std::size_t size = 1 + pick(state, config.random_max_size);
    Theory theory{config.variables, {}};
    for (std::size_t i = 0; i < size; ++i) {
      const int depth =
          config.random_min_depth +
          static_cast<int>(pick(state, static_cast<std::uint64_t>(
                                           config.random_max_depth -
                                           config.random_min_depth + 1)));
      theory.formulas.push_back(random_formula(state, config.variables, depth));
    }
    theories.push_back(std::move(theory));
  }
  return theories;
}

CorpusResult run_corpus(const CorpusConfig& config) {
  CorpusResult result;
  result.config = config;
  const LTAlgebra lt_empty = build_lt_algebra(Theory{config.variables, {}});
  for (const Theory& theory : corpus_theories(config)) {
    TheoryVerdict verdict = analyze_theory(theory, lt_empty);
    result.all_ok = result.all_ok && verdict.ok();
    if (verdict.consistent)
      ++result.consistent_count;
    else
      ++result.inconsistent_count;
    result.verdicts.push_back(std::move(verdict));
  }
  return result;
}

}  // namespace stonework
