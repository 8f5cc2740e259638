#include "doctest.h"

#include <set>

#include "stonework/corpus.hpp"
#include "stonework/render.hpp"

using namespace stonework;

TEST_CASE("semantic class representatives are distinct and grow with depth") {
  const std::vector<std::string> vars{"P", "Q"};
  const std::vector<Formula> depth0 = semantic_class_representatives(vars, 0);
  CHECK(depth0.size() == 2);  // P and Q

  const std::vector<Formula> depth2 = semantic_class_representatives(vars, 2);
  CHECK(depth2.size() <= 16);
  CHECK(depth2.size() > depth0.size());

  // distinct truth masks
  std::set<std::uint64_t> masks;
  for (const Formula& f : depth2) {
    std::uint64_t mask = 0;
    for (std::size_t index = 0; index < 4; ++index)
      if (evaluate(f, assignment_from_index(vars, index))) mask |= 1ull << index;
    CHECK(masks.insert(mask).second);
  }

  // all sixteen truth functions of two variables appear by depth 3
  CHECK(semantic_class_representatives(vars, 3).size() == 16);
}

TEST_CASE("random formulas reach their requested depth") {
  std::uint64_t state = 41;
  const std::vector<std::string> vars{"P", "Q", "R"};
  auto depth_of = [](const Formula& f, auto&& self) -> int {
    switch (f.kind()) {
      case Formula::Kind::Variable: return 0;
      case Formula::Kind::Negation: return 1 + self(f.child(), self);
      default:
        return 1 + std::max(self(f.left(), self), self(f.right(), self));
    }
  };
  for (int round = 0; round < 50; ++round) {
    const Formula f = random_formula(state, vars, 5);
    CHECK(depth_of(f, depth_of) == 5);
  }
}

TEST_CASE("corpus theories are deterministic in the seed") {
  CorpusConfig config;
  config.exhaustive_depth = 1;
  config.random_theories = 10;
  config.seed = 7;

  const std::vector<Theory> first = corpus_theories(config);
  const std::vector<Theory> second = corpus_theories(config);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    REQUIRE(first[i].formulas.size() == second[i].formulas.size());
    for (std::size_t j = 0; j < first[i].formulas.size(); ++j)
      CHECK(structurally_equal(first[i].formulas[j], second[i].formulas[j]));
  }

  config.seed = 8;
  const std::vector<Theory> reseeded = corpus_theories(config);
  bool any_difference = false;
  for (std::size_t i = 0; i < first.size() && !any_difference; ++i) {
    if (first[i].formulas.size() != reseeded[i].formulas.size()) any_difference = true;
    else
      for (std::size_t j = 0; j < first[i].formulas.size(); ++j)
        if (!structurally_equal(first[i].formulas[j], reseeded[i].formulas[j]))
          any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("the exhaustive limit caps theory generation") {
  CorpusConfig config;
  config.exhaustive_depth = 2;
  config.exhaustive_limit = 25;
  config.random_theories = 5;
  CHECK(corpus_theories(config).size() == 25 + 5);
}

TEST_CASE("a small corpus run agrees everywhere") {
  CorpusConfig config;
  config.exhaustive_depth = 1;
  config.max_theory_size = 2;
  config.random_theories = 25;
  const CorpusResult result = run_corpus(config);
  CHECK(result.all_ok);
  CHECK(result.consistent_count + result.inconsistent_count == result.verdicts.size());
  CHECK(result.consistent_count > 0);
  CHECK(result.inconsistent_count > 0);
  for (const TheoryVerdict& v : result.verdicts) {
    CHECK(v.oracle_agrees);
    if (v.consistent) {
      CHECK(v.model.has_value());
      CHECK(v.model_verified);
      CHECK(v.diagram_commutes.value_or(false));
    }
  }
}

TEST_CASE("analyze_theory produces a renderable verdict") {
  Theory t{{"P"}, {parse_formula("P"), parse_formula("~P")}};
  const TheoryVerdict verdict = analyze_theory(t);
  CHECK_FALSE(verdict.consistent);
  CHECK(verdict.oracle_agrees);
  CHECK(render_theory_verdict(verdict, OutputFormat::Text) ==
        "inconsistent\noracle: agrees\n");

  const std::string structured =
      render_theory_verdict(verdict, OutputFormat::Structured);
  CHECK(structured.find("\"consistent\": false") != std::string::npos);
}

TEST_CASE("library-level corpus runs are reproducible") {
  CorpusConfig config;
  config.exhaustive_depth = 1;
  config.random_theories = 15;
  const std::string once = render_corpus_result(run_corpus(config), OutputFormat::Structured);
  const std::string twice = render_corpus_result(run_corpus(config), OutputFormat::Structured);
  CHECK(once == twice);
}
