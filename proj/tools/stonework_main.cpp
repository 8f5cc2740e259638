// Command-line front end. Every subcommand is a thin adapter: load inputs,
// call one library operation, print one rendered report.
//
// Exit codes: 0 success (including "inconsistent" answers and trivially
// passing reports), 1 input errors or failed axiom checks, 2 size-cap
// refusals.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "stonework/algebra_io.hpp"
#include "stonework/corpus.hpp"
#include "stonework/render.hpp"

namespace {

using namespace stonework;

struct GlobalOptions {
  std::string format = "text";
  std::size_t carrier_cap = kDefaultCarrierCap;
  std::size_t var_cap = kDefaultVariableCap;
};

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty()) names.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(std::move(current));
  return names;
}

int cmd_check_axioms(const GlobalOptions& opts, const std::string& path) {
  const FiniteAlgebra algebra = load_algebra_file(path, opts.carrier_cap);
  const AxiomReport report = verify_axioms(algebra, opts.carrier_cap);
  std::cout << render_axiom_report(algebra, report, parse_output_format(opts.format));
  return report.all_passed() ? 0 : 1;
}

int cmd_ultrafilters(const GlobalOptions& opts, const std::string& path) {
  const FiniteAlgebra algebra = load_algebra_file(path, opts.carrier_cap);
  const std::vector<Ultrafilter> ufs = enumerate_ultrafilters(algebra, opts.carrier_cap);
  std::cout << render_ultrafilters(algebra, ufs, parse_output_format(opts.format));
  return 0;
}

int cmd_stone(const GlobalOptions& opts, const std::string& path) {
  const FiniteAlgebra algebra = load_algebra_file(path, opts.carrier_cap);
  const StoneReport report = verify_stone_embedding(algebra, opts.carrier_cap);
  const StoneImage image = build_stone_representation(algebra, opts.carrier_cap);
  std::cout << render_stone_report(algebra, report, image.onto_full_power_set,
                                   image.isomorphic_to_image,
                                   parse_output_format(opts.format));
  return 0;
}

int cmd_lt(const GlobalOptions& opts, const std::string& path) {
  const Theory theory = load_theory_file(path);
  const LTAlgebra lt = build_lt_algebra(theory, opts.carrier_cap, opts.var_cap);
  std::cout << render_lt_summary(lt, parse_output_format(opts.format));
  return 0;
}

int cmd_find_model(const GlobalOptions& opts, const std::string& path) {
  const Theory theory = load_theory_file(path);
  const TheoryVerdict verdict = analyze_theory(theory, opts.carrier_cap, opts.var_cap);
  std::cout << render_theory_verdict(verdict, parse_output_format(opts.format));
  return 0;
}

int cmd_truth_table(const GlobalOptions& opts, const std::string& formula_text,
                    const std::string& vars_text) {
  std::vector<std::string> variables = split_names(vars_text);
  const Formula formula = vars_text.empty() ? parse_formula(formula_text)
                                            : parse_formula(formula_text, variables);
  if (vars_text.empty()) variables = variables_of(formula);
  const auto rows = truth_table(formula, variables, opts.var_cap);
  std::cout << render_truth_table(formula, rows, parse_output_format(opts.format));
  return 0;
}

int cmd_corpus(const GlobalOptions& opts, const CorpusConfig& config) {
  const CorpusResult result = run_corpus(config);
  std::cout << render_corpus_result(result, parse_output_format(opts.format));
  return result.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Boolean algebras, ultrafilters, Stone representation, "
               "and propositional completeness"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--carrier-cap", opts.carrier_cap, "carrier size cap for table algebras");
  app.add_option("--var-cap", opts.var_cap, "variable count cap for truth tables");

  std::string algebra_path, theory_path, formula_text, vars_text;

  CLI::App* check = app.add_subcommand("check-axioms", "verify the algebra axioms of a file");
  check->add_option("algebra-file", algebra_path, "algebra document")->required();

  CLI::App* ultra = app.add_subcommand("ultrafilters", "list all ultrafilters");
  ultra->add_option("algebra-file", algebra_path, "algebra document")->required();

  CLI::App* stone = app.add_subcommand("stone", "verify the Stone embedding");
  stone->add_option("algebra-file", algebra_path, "algebra document")->required();

  CLI::App* lt = app.add_subcommand("lt", "build the quotient algebra of a theory");
  lt->add_option("theory-file", theory_path, "theory file")->required();

  CLI::App* find = app.add_subcommand("find-model",
                                      "extract a model through the ultrafilter route");
  find->add_option("theory-file", theory_path, "theory file")->required();

  CLI::App* table = app.add_subcommand("truth-table", "print a truth table");
  table->add_option("formula", formula_text, "formula text")->required();
  table->add_option("--vars", vars_text,
                    "variable universe, comma or space separated (default: occurring "
                    "names, sorted)");

  CorpusConfig corpus_config;
  CLI::App* corpus = app.add_subcommand("corpus", "run the theory corpus through both "
                                                  "the ultrafilter route and the oracle");
  corpus->add_option("--seed", corpus_config.seed, "seed for the random theories")
      ->envname("STONEWORK_SEED");
  corpus->add_option("--depth", corpus_config.exhaustive_depth,
                     "semantic-class depth of the exhaustive part");
  corpus->add_option("--max-size", corpus_config.max_theory_size,
                     "largest exhaustive theory");
  corpus->add_option("--limit", corpus_config.exhaustive_limit,
                     "cap on exhaustive theories (0 = all)");
  corpus->add_option("--random", corpus_config.random_theories,
                     "number of random deeper theories");
  std::string corpus_vars;
  corpus->add_option("--vars", corpus_vars, "corpus universe (default: P Q R)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return cmd_check_axioms(opts, algebra_path);
    if (ultra->parsed()) return cmd_ultrafilters(opts, algebra_path);
    if (stone->parsed()) return cmd_stone(opts, algebra_path);
    if (lt->parsed()) return cmd_lt(opts, theory_path);
    if (find->parsed()) return cmd_find_model(opts, theory_path);
    if (table->parsed()) return cmd_truth_table(opts, formula_text, vars_text);
    if (corpus->parsed()) {
      if (!corpus_vars.empty()) corpus_config.variables = split_names(corpus_vars);
      return cmd_corpus(opts, corpus_config);
    }
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
