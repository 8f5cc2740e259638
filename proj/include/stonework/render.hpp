#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stonework/algebra.hpp"
#include "stonework/corpus.hpp"
#include "stonework/filters.hpp"
#include "stonework/lindenbaum.hpp"
#include "stonework/stone.hpp"

namespace stonework {

enum class OutputFormat { Text, Structured };

OutputFormat parse_output_format(const std::string& name);

// Every renderer is a pure function of its inputs, so repeated runs over
// identical data produce byte-identical output.

std::string render_axiom_report(const FiniteAlgebra& algebra, const AxiomReport& report,
                                OutputFormat format);

std::string render_ultrafilters(const FiniteAlgebra& algebra,
                                const std::vector<Ultrafilter>& ultrafilters,
                                OutputFormat format);

std::string render_stone_report(const FiniteAlgebra& algebra, const StoneReport& report,
                                bool onto_full_power_set, bool isomorphic,
                                OutputFormat format);

std::string render_lt_summary(const LTAlgebra& lt, OutputFormat format);

std::string render_theory_verdict(const TheoryVerdict& verdict, OutputFormat format);

std::string render_truth_table(const Formula& formula,
                               const std::vector<std::pair<Assignment, bool>>& rows,
                               OutputFormat format);

std::string render_corpus_result(const CorpusResult& result, OutputFormat format);

}  // namespace stonework
