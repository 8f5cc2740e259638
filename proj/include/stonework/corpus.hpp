#pragma once

#include <cstdint>
#include <optional>

#include "stonework/completeness.hpp"
#include "stonework/semantics.hpp"

namespace stonework {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// One theory pushed through both routes: the ultrafilter pipeline and the
/// brute-force oracle. The two may extract different models of a consistent
/// theory; only the verdicts and the validity of each returned model are
/// compared.
struct TheoryVerdict {
  std::vector<std::string> formulas;  // pretty-printed
  bool consistent = false;
  std::optional<Assignment> model;    // from the ultrafilter route
  bool model_verified = false;        // extracted model satisfies the theory
  bool oracle_agrees = false;         // same consistency verdict as sat_oracle
  std::optional<bool> diagram_commutes;  // present for consistent theories

  bool ok() const {
    if (!oracle_agrees) return false;
    if (!consistent) return true;
    return model_verified && diagram_commutes.value_or(false);
  }
};

struct CorpusConfig {
  std::vector<std::string> variables{"P", "Q", "R"};
  int exhaustive_depth = 3;        // semantic classes reachable by this AST depth
  std::size_t max_theory_size = 2; // exhaustive theories take subsets up to this size
  std::size_t exhaustive_limit = 0;  // 0 = no limit
  std::size_t random_theories = 500;
  int random_min_depth = 4;
  int random_max_depth = 6;
  std::size_t random_max_size = 4;
  std::uint64_t seed = kDefaultSeed;
};

struct CorpusResult {
  CorpusConfig config;
  std::vector<TheoryVerdict> verdicts;
  std::size_t consistent_count = 0;
  std::size_t inconsistent_count = 0;
  bool all_ok = true;
};

/// Runs one theory through the whole pipeline against a prebuilt
/// empty-theory quotient.
TheoryVerdict analyze_theory(const Theory& theory, const LTAlgebra& lt_empty,
                             std::size_t carrier_cap = kDefaultCarrierCap,
                             std::size_t variable_cap = kDefaultVariableCap);

TheoryVerdict analyze_theory(const Theory& theory,
                             std::size_t carrier_cap = kDefaultCarrierCap,
                             std::size_t variable_cap = kDefaultVariableCap);

/// One representative formula per semantic equivalence class reachable by
/// formulas of the given AST depth, in deterministic discovery order.
/// Classes are computed level by level: semantics is compositional, so
/// combining class representatives of depth d-1 covers every class of
/// depth d.
std::vector<Formula> semantic_class_representatives(
    const std::vector<std::string>& variables, int max_depth);

/// A pseudo-random formula over the variables with AST depth exactly
/// `depth`: one branch always carries the full budget, the rest are drawn
/// with smaller budgets. The generator state is a splitmix64 word, so
/// results depend only on the seed.
Formula random_formula(std::uint64_t& state, const std::vector<std::string>& variables,
                       int depth);

/// The acceptance corpus: the empty theory, every singleton and pair of
/// semantic-class representatives (up to the configured limit), plus the
/// configured number of seeded random deeper theories.
std::vector<Theory> corpus_theories(const CorpusConfig& config);

CorpusResult run_corpus(const CorpusConfig& config);

}  // namespace stonework
