// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. The CLI binary path is taken from argv[1]; the CLI-level checks are
// skipped (and fail the run) if it is missing.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "stonework/algebra_io.hpp"
#include "stonework/completeness.hpp"
#include "stonework/corpus.hpp"
#include "stonework/render.hpp"
#include "stonework/stone.hpp"

#include "test_support.hpp"

using namespace stonework;
using stonework::testing::make_permuted_copy;
using stonework::testing::powerset_of_size;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

// ---- shared test set -------------------------------------------------------

std::vector<FiniteAlgebra> power_set_algebras(std::size_t max_atoms) {
  std::vector<FiniteAlgebra> out;
  for (std::size_t atoms = 0; atoms <= max_atoms; ++atoms)
    out.push_back(powerset_of_size(atoms).materialize());
  return out;
}

std::vector<FiniteAlgebra> permuted_copies() {
  std::uint64_t state = 0xACCE97ull;
  std::vector<FiniteAlgebra> out;
  for (int i = 0; i < 20; ++i) {
    const std::size_t atoms = (i % 3) + 1;
    out.push_back(
        make_permuted_copy(powerset_of_size(atoms).materialize(), state).algebra);
  }
  return out;
}

// full set for criteria 4-6: power sets to 256 elements plus the copies
std::vector<const FiniteAlgebra*> full_test_set(
    const std::vector<FiniteAlgebra>& powers, const std::vector<FiniteAlgebra>& copies) {
  std::vector<const FiniteAlgebra*> out;
  for (const FiniteAlgebra& a : powers) out.push_back(&a);
  for (const FiniteAlgebra& a : copies) out.push_back(&a);
  return out;
}

// ---- criterion bodies ------------------------------------------------------

Outcome criterion_axioms(const std::vector<FiniteAlgebra>& powers) {
  Outcome result;
  for (std::size_t atoms = 0; atoms <= 4; ++atoms) {
    const AxiomReport report = verify_axioms(powers[atoms]);
    result.require(report.all_passed(),
                   "axioms fail on the power set of " + std::to_string(atoms) + " atoms");
  }
  return result;
}

Outcome criterion_proposition1(const std::vector<FiniteAlgebra>& powers,
                               const std::vector<FiniteAlgebra>& copies) {
  Outcome result;
  std::vector<const FiniteAlgebra*> set;
  for (std::size_t atoms = 0; atoms <= 3; ++atoms) set.push_back(&powers[atoms]);
  for (const FiniteAlgebra& a : copies) set.push_back(&a);
  for (const FiniteAlgebra* a : set) {
    result.require(verify_axioms(*a).all_passed(), "axiom precondition fails");
    result.require(check_complement_uniqueness(*a), "complement uniqueness fails");
    result.require(check_de_morgan(*a), "a de Morgan law fails");
  }
  return result;
}

Outcome criterion_lemma1(const std::vector<FiniteAlgebra>& powers,
                         const std::vector<FiniteAlgebra>& copies) {
  Outcome result;
  std::vector<const FiniteAlgebra*> set;
  for (const FiniteAlgebra& a : powers)
    if (a.size() <= 16) set.push_back(&a);
  for (const FiniteAlgebra& a : copies)
    if (a.size() <= 16) set.push_back(&a);

  for (const FiniteAlgebra* a : set) {
    // ultrafilters by definition-level subset scan
    std::set<std::vector<ElementId>> ultra;
    for (const Ultrafilter& u : enumerate_ultrafilters_bruteforce(*a))
      ultra.insert(u.members());

    // maximal proper filters by subset scan + pure containment
    std::vector<std::vector<ElementId>> proper;
    const std::uint32_t subsets = std::uint32_t{1} << a->size();
    for (std::uint32_t bits = 0; bits < subsets; ++bits) {
      std::vector<ElementId> members;
      for (ElementId x = 0; x < a->size(); ++x)
        if (bits >> x & 1) members.push_back(x);
      if (!is_filter(*a, members)) continue;
      bool contains_zero = false;
      for (ElementId x : members) contains_zero = contains_zero || x == a->zero();
      if (!contains_zero) proper.push_back(std::move(members));
    }
    std::set<std::vector<ElementId>> maximal;
    for (const auto& p : proper) {
      bool strictly_contained = false;
      for (const auto& q : proper)
        if (q.size() > p.size() &&
            std::includes(q.begin(), q.end(), p.begin(), p.end()))
          strictly_contained = true;
      if (!strictly_contained) maximal.insert(p);
    }

    result.require(ultra == maximal,
                   "ultrafilters and maximal proper filters differ on a carrier of " +
                       std::to_string(a->size()));
  }
  return result;
}

Outcome criterion_proposition2(const std::vector<const FiniteAlgebra*>& set) {
  Outcome result;
  for (const FiniteAlgebra* a : set) {
    for (ElementId x = 0; x < a->size(); ++x) {
      if (x == a->zero()) continue;
      const Ultrafilter u = extend_to_ultrafilter(*a, principal_filter(*a, x));
      result.require(u.contains(x), "extension does not contain its seed element");
      result.require(is_ultrafilter(*a, u.members()), "extension is not an ultrafilter");
    }
  }
  return result;
}

Outcome criterion_lemma2(const std::vector<const FiniteAlgebra*>& set) {
  Outcome result;
  for (const FiniteAlgebra* a : set)
    for (const Ultrafilter& u : enumerate_ultrafilters(*a))
      result.require(check_ultrafilter_prime(*a, u), "an enumerated ultrafilter is not prime");
  return result;
}

Outcome criterion_stone(const std::vector<const FiniteAlgebra*>& set) {
  Outcome result;
  for (const FiniteAlgebra* a : set) {
    const StoneReport report = verify_stone_embedding(*a);
    result.require(report.embedding_ok(), "embedding checks fail on a carrier of " +
                                              std::to_string(a->size()));
    result.require(report.routes_agree(), "injectivity routes disagree");
    result.require(report.carrier_is_power_of_ultrafilters,
                   "carrier size is not 2^|ultrafilters|");
    const StoneImage image = build_stone_representation(*a);
    result.require(image.isomorphic_to_image, "map is no isomorphism onto its image");
    result.require(image.onto_full_power_set, "image misses part of the power set");
  }
  return result;
}

std::vector<Theory> generated_consistent_theories(std::size_t count) {
  std::uint64_t state = 424242;
  const std::vector<std::string> vars{"P", "Q", "R"};
  std::vector<Theory> out;
  while (out.size() < count) {
    Theory theory{vars, {}};
    const std::size_t size = 1 + testing::pick(state, 3);
    for (std::size_t i = 0; i < size; ++i) {
      const int depth = static_cast<int>(testing::pick(state, 4));
      theory.formulas.push_back(random_formula(state, vars, depth));
    }
    if (sat_oracle(theory).has_value()) out.push_back(std::move(theory));
  }
  return out;
}

Outcome criterion_lindenbaum(std::vector<LTAlgebra>& built_out) {
  Outcome result;

  const std::vector<std::string> all{"P", "Q", "R"};
  const std::size_t expected[] = {2, 4, 16, 256};
  for (std::size_t n = 0; n <= 3; ++n) {
    const std::vector<std::string> universe(all.begin(), all.begin() + n);
    const LTAlgebra lt = build_lt_algebra(Theory{universe, {}});
    result.require(lt.algebra().size() == expected[n],
                   "empty-theory quotient over " + std::to_string(n) +
                       " variables has size " + std::to_string(lt.algebra().size()));
  }

  Theory contradiction{{"P"}, {parse_formula("P"), parse_formula("~P")}};
  const LTAlgebra trivial = build_lt_algebra(contradiction);
  result.require(trivial.algebra().size() == 1, "contradictory theory is not trivial");

  // The generated set plus two full-width cases whose quotients reach the
  // 256-element carrier (8 models over 3 variables).
  std::vector<Theory> theories = generated_consistent_theories(50);
  theories.push_back(Theory{{"P", "Q", "R"}, {}});
  theories.push_back(Theory{{"P", "Q", "R"}, {parse_formula("P | ~P")}});

  for (const Theory& theory : theories) {
    LTAlgebra lt = build_lt_algebra(theory);
    result.require(verify_axioms(lt.algebra()).all_passed(),
                   "a quotient algebra fails the axioms");
    result.require(lt.consistent(), "a satisfiable theory yields a trivial quotient");
    built_out.push_back(std::move(lt));
  }
  result.require(built_out.back().algebra().size() == 256,
                 "the full-width quotient should reach 256 elements");
  return result;
}

Outcome criterion_lemma3(const std::vector<LTAlgebra>& built) {
  Outcome result;
  for (const LTAlgebra& lt : built) {
    for (const Ultrafilter& u : enumerate_ultrafilters(lt.algebra())) {
      const Homomorphism chi = characteristic_hom(lt.algebra(), u);
      result.require(check_homomorphism(chi, lt.algebra(), two_element_algebra()),
                     "a characteristic map is not a homomorphism");
    }
  }
  return result;
}

Outcome criterion_completeness() {
  Outcome result;
  const CorpusResult corpus = run_corpus(CorpusConfig{});
  result.require(corpus.verdicts.size() >= 500, "corpus unexpectedly small");
  std::size_t index = 0;
  for (const TheoryVerdict& verdict : corpus.verdicts) {
    result.require(verdict.oracle_agrees,
                   "consistency verdict disagrees with the oracle at theory " +
                       std::to_string(index));
    if (verdict.consistent) {
      result.require(verdict.model_verified,
                     "extracted model fails its theory at " + std::to_string(index));
      result.require(verdict.diagram_commutes.value_or(false),
                     "diagram does not commute at " + std::to_string(index));
    }
    ++index;
  }
  return result;
}

Outcome criterion_parser() {
  Outcome result;
  std::uint64_t state = 10101;
  const std::vector<std::string> vars{"P", "Q", "R"};

  std::function<Formula(int)> gen = [&](int depth) -> Formula {
    if (depth == 0 || testing::pick(state, 4) == 0)
      return Formula::variable(vars[testing::pick(state, 3)]);
    switch (testing::pick(state, 5)) {
      case 0: return Formula::negation(gen(depth - 1));
      case 1: return Formula::conjunction(gen(depth - 1), gen(depth - 1));
      case 2: return Formula::disjunction(gen(depth - 1), gen(depth - 1));
      case 3: return Formula::implication(gen(depth - 1), gen(depth - 1));
      default: return Formula::biconditional(gen(depth - 1), gen(depth - 1));
    }
  };

  for (int round = 0; round < 10000; ++round) {
    const Formula f = gen(6);
    result.require(structurally_equal(f, parse_formula(pretty_print(f))),
                   "round trip broke at " + pretty_print(f));
    if (!result.ok) break;
  }

  const Formula p = Formula::variable("P"), q = Formula::variable("Q"),
                r = Formula::variable("R");
  result.require(structurally_equal(parse_formula("~(P | Q)"),
                                    Formula::negation(Formula::disjunction(p, q))),
                 "negation example mismatch");
  result.require(structurally_equal(parse_formula("P & Q | R"),
                                    Formula::disjunction(Formula::conjunction(p, q), r)),
                 "precedence example mismatch");
  result.require(structurally_equal(parse_formula("P -> Q -> R"),
                                    Formula::implication(p, Formula::implication(q, r))),
                 "associativity example mismatch");
  return result;
}

// ---- CLI-level checks ------------------------------------------------------

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

Outcome criterion_determinism(const std::string& cli) {
  Outcome result;
  if (cli.empty()) {
    result.require(false, "no CLI binary path given");
    return result;
  }
  const std::string command =
      cli + " --format structured corpus --seed 99 --limit 300 --random 50";
  const CommandResult first = run_command(command);
  const CommandResult second = run_command(command);
  result.require(first.exit_code == 0, "corpus run failed");
  result.require(second.exit_code == 0, "second corpus run failed");
  result.require(!first.output.empty(), "corpus run produced no output");
  result.require(first.output == second.output,
                 "two corpus runs with one seed differ");
  return result;
}

Outcome cli_examples(const std::string& cli) {
  Outcome result;
  if (cli.empty()) {
    result.require(false, "no CLI binary path given");
    return result;
  }

  write_file("acceptance_p2.json", R"({"type":"powerset","ground":["a","b"]})");
  write_file("acceptance_p3.json", R"({"type":"powerset","ground":["a","b","c"]})");
  write_file("acceptance_trivial.json", R"({"type":"powerset","ground":[]})");
  write_file("acceptance_bad.json", R"({
    "type": "table", "elements": ["e0", "e1"], "zero": "e0", "one": "e1",
    "join": [["e0", "e1"], ["e1", "e1"]],
    "meet": [["e0", "e0"], ["e0", "e1"]],
    "not": ["e0", "e1"]
  })");
  write_file("acceptance_inconsistent.theory", "vars: P\nP\n~P\n");

  const CommandResult pass = run_command(cli + " check-axioms acceptance_p2.json");
  result.require(pass.exit_code == 0, "check-axioms should accept a power set");
  result.require(pass.output.find("all axioms hold") != std::string::npos,
                 "missing pass summary");

  const CommandResult trivial = run_command(cli + " check-axioms acceptance_trivial.json");
  result.require(trivial.exit_code == 0, "the trivial algebra should pass");

  const CommandResult fail = run_command(cli + " check-axioms acceptance_bad.json");
  result.require(fail.exit_code == 1, "a violated axiom should exit 1");
  result.require(fail.output.find("B5") != std::string::npos &&
                     fail.output.find("FAIL") != std::string::npos,
                 "missing B5 failure");
  result.require(fail.output.find("x=e0") != std::string::npos, "missing witness");

  const CommandResult ultra = run_command(cli + " ultrafilters acceptance_p3.json");
  result.require(ultra.exit_code == 0, "ultrafilters command failed");
  result.require(ultra.output.find("ultrafilters: 3") != std::string::npos,
                 "expected 3 ultrafilters");

  const CommandResult stone = run_command(cli + " stone acceptance_p2.json");
  result.require(stone.exit_code == 0, "stone command failed");
  result.require(stone.output.find("ultrafilters: 2") != std::string::npos,
                 "expected |UltA| = 2");
  result.require(stone.output.find("embedding: verified") != std::string::npos,
                 "expected a verified embedding");

  const CommandResult model = run_command(cli + " find-model acceptance_inconsistent.theory");
  result.require(model.exit_code == 0, "find-model on an inconsistent theory exits 0");
  result.require(model.output.rfind("inconsistent\n", 0) == 0,
                 "expected the line 'inconsistent'");

  const CommandResult refused =
      run_command(cli + " --carrier-cap 4 check-axioms acceptance_p3.json");
  result.require(refused.exit_code == 2, "size-cap refusal should exit 2");

  const CommandResult missing = run_command(cli + " check-axioms no_such_file.json");
  result.require(missing.exit_code == 1, "missing input should exit 1");

  // thin-adapter check: CLI bytes equal library rendering
  const FiniteAlgebra p3 = PowerSetAlgebra({"a", "b", "c"}).materialize();
  const std::string expected_ultra =
      render_ultrafilters(p3, enumerate_ultrafilters(p3), OutputFormat::Text);
  result.require(ultra.output == expected_ultra,
                 "ultrafilters output differs from the library rendering");

  const CommandResult axioms_json =
      run_command(cli + " --format structured check-axioms acceptance_p2.json");
  const FiniteAlgebra p2 = PowerSetAlgebra({"a", "b"}).materialize();
  const std::string expected_axioms =
      render_axiom_report(p2, verify_axioms(p2), OutputFormat::Structured);
  result.require(axioms_json.output == expected_axioms,
                 "check-axioms structured output differs from the library rendering");

  const CommandResult table =
      run_command(cli + " truth-table \"P -> Q\" --vars \"P Q\"");
  result.require(table.exit_code == 0, "truth-table command failed");
  const Formula imp = parse_formula("P -> Q");
  result.require(table.output ==
                     render_truth_table(imp, truth_table(imp, {"P", "Q"}),
                                        OutputFormat::Text),
                 "truth-table output differs from the library rendering");

  write_file("acceptance_mp.theory", "vars: P Q\nP -> Q\nP\n");
  const Theory mp = load_theory_file("acceptance_mp.theory");

  const CommandResult lt_out = run_command(cli + " lt acceptance_mp.theory");
  result.require(lt_out.exit_code == 0, "lt command failed");
  result.require(lt_out.output ==
                     render_lt_summary(build_lt_algebra(mp), OutputFormat::Text),
                 "lt output differs from the library rendering");

  const CommandResult fm_out =
      run_command(cli + " --format structured find-model acceptance_mp.theory");
  result.require(fm_out.exit_code == 0, "find-model command failed");
  result.require(fm_out.output ==
                     render_theory_verdict(analyze_theory(mp), OutputFormat::Structured),
                 "find-model output differs from the library rendering");

  // global flags are accepted after the subcommand as well
  const CommandResult postfix =
      run_command(cli + " check-axioms acceptance_p2.json --format structured");
  result.require(postfix.exit_code == 0 && postfix.output == expected_axioms,
                 "trailing --format should be accepted");

  for (const char* path :
       {"acceptance_p2.json", "acceptance_p3.json", "acceptance_trivial.json",
        "acceptance_bad.json", "acceptance_inconsistent.theory",
        "acceptance_mp.theory"})
    std::remove(path);
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  const std::vector<FiniteAlgebra> powers = power_set_algebras(8);
  const std::vector<FiniteAlgebra> copies = permuted_copies();
  const std::vector<const FiniteAlgebra*> everything = full_test_set(powers, copies);

  std::vector<LTAlgebra> lt_built;

  struct Criterion {
    std::string name;
    double limit_seconds;  // 0 = no stated limit
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria = {
      {"axiom suite over power sets |X| <= 4", 30, [&] { return criterion_axioms(powers); }},
      {"complement uniqueness and de Morgan", 5,
       [&] { return criterion_proposition1(powers, copies); }},
      {"ultrafilters = maximal proper filters (carriers <= 16)", 60,
       [&] { return criterion_lemma1(powers, copies); }},
      {"every nonzero element extends to an ultrafilter", 30,
       [&] { return criterion_proposition2(everything); }},
      {"all enumerated ultrafilters are prime", 10,
       [&] { return criterion_lemma2(everything); }},
      {"Stone embedding with finite strengthening", 30,
       [&] { return criterion_stone(everything); }},
      {"quotient construction sizes and laws", 60,
       [&] { return criterion_lindenbaum(lt_built); }},
      {"characteristic maps are homomorphisms", 10,
       [&] { return criterion_lemma3(lt_built); }},
      {"completeness corpus: both routes agree everywhere", 300,
       [] { return criterion_completeness(); }},
      {"parser round trip and precedence", 0, [] { return criterion_parser(); }},
      {"corpus CLI runs are byte-identical", 0,
       [&] { return criterion_determinism(cli); }},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = criteria[i].run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0 && seconds >= criteria[i].limit_seconds)
      outcome.require(false, "runtime " + std::to_string(seconds) + "s over the limit");

    std::ostringstream line;
    line << "criterion " << (i + 1 < 10 ? " " : "") << i + 1 << " ["
         << (outcome.ok ? "PASS" : "FAIL") << "] " << criteria[i].name << " ("
         << std::fixed;
    line.precision(2);
    line << seconds << "s)";
    if (!outcome.ok) line << " -- " << outcome.detail;
    std::cout << line.str() << "\n";
    all_ok = all_ok && outcome.ok;
  }

  const Outcome cli_outcome = cli_examples(cli);
  std::cout << "cli checks   [" << (cli_outcome.ok ? "PASS" : "FAIL") << "]";
  if (!cli_outcome.ok) std::cout << " -- " << cli_outcome.detail;
  std::cout << "\n";
  all_ok = all_ok && cli_outcome.ok;

  std::cout << (all_ok ? "acceptance: all criteria satisfied"
                       : "acceptance: FAILURES PRESENT")
            << "\n";
  return all_ok ? 0 : 1;
}
