#include "stonework/lindenbaum.hpp"

#include <algorithm>

namespace stonework {

namespace {

std::string model_set_name(std::uint32_t mask, std::size_t model_count) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < model_count; ++p) {
    if (!(mask >> p & 1)) continue;
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace

LTAlgebra build_lt_algebra(const Theory& theory, std::size_t carrier_cap,
                           std::size_t variable_cap) {
  validate_theory(theory);
  std::vector<std::size_t> models = model_indices(theory, variable_cap);
  const std::size_t m = models.size();
  if (m >= 16 || (std::size_t{1} << m) > carrier_cap)
    throw SizeError("lindenbaum: quotient carrier of 2^" + std::to_string(m) +
                    " elements exceeds the cap " + std::to_string(carrier_cap));

  const std::size_t n = std::size_t{1} << m;
  const std::uint32_t full = static_cast<std::uint32_t>(n - 1);
  std::vector<std::string> names(n);
  std::vector<ElementId> join(n * n), meet(n * n), comp(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    names[x] = model_set_name(x, m);
    comp[x] = static_cast<ElementId>(full & ~x);
    for (std::uint32_t y = 0; y < n; ++y) {
      join[x * n + y] = static_cast<ElementId>(x | y);
      meet[x * n + y] = static_cast<ElementId>(x & y);
    }
  }
  FiniteAlgebra algebra(std::move(names), std::move(join), std::move(meet),
                        std::move(comp), 0, static_cast<ElementId>(full));
  return LTAlgebra(theory, std::move(models), std::move(algebra));
}

Assignment LTAlgebra::model(std::size_t position) const {
  if (position >= model_indices_.size())
    throw ArgumentError("lindenbaum: model position " + std::to_string(position) +
                        " out of range (" + std::to_string(model_indices_.size()) +
                        " models)");
  return assignment_from_index(theory_.universe, model_indices_[position]);
}

EquivClass LTAlgebra::class_of(const Formula& f) const {
  for (const std::string& v : variables_of(f)) {
    if (std::find(theory_.universe.begin(), theory_.universe.end(), v) ==
        theory_.universe.end())
      throw ArgumentError("lindenbaum: formula variable '" + v +
                          "' is not in the theory universe");
  }
  std::uint32_t mask = 0;
  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < model_indices_.size(); ++p) {
    if (evaluate(f, model(p))) {
      mask |= std::uint32_t{1} << p;
      positions.push_back(p);
    }
  }
  return EquivClass{static_cast<ElementId>(mask), std::move(positions), f};
}

Formula LTAlgebra::representative_formula(ElementId element) const {
  if (element >= algebra_.size())
    throw ArgumentError("lindenbaum: element " + std::to_string(element) +
                        " out of carrier");
  if (theory_.universe.empty())
    throw ArgumentError("lindenbaum: no formulas exist over an empty universe");

  const Formula v0 = Formula::variable(theory_.universe.front());
  if (element == algebra_.zero())
    return Formula::conjunction(v0, Formula::negation(v0));
  if (element == algebra_.one())
    return Formula::disjunction(v0, Formula::negation(v0));

  // Disjunctive normal form over the member models, variables in universe
  // order, models in canonical order.
  std::optional<Formula> dnf;
  for (std::size_t p = 0; p < model_indices_.size(); ++p) {
    if (!(element >> p & 1)) continue;
    const Assignment h = model(p);
    std::optional<Formula> term;
    for (std::size_t i = 0; i < theory_.universe.size(); ++i) {
      Formula literal = Formula::variable(theory_.universe[i]);
      if (!h.values()[i]) literal = Formula::negation(std::move(literal));
      term = term ? Formula::conjunction(std::move(*term), std::move(literal))
                  : std::move(literal);
    }
    dnf = dnf ? Formula::disjunction(std::move(*dnf), std::move(*term))
              : std::move(*term);
  }
  return *dnf;
}

EquivClass LTAlgebra::class_info(ElementId element) const {
  if (element >= algebra_.size())
    throw ArgumentError("lindenbaum: element " + std::to_string(element) +
                        " out of carrier");
  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < model_indices_.size(); ++p)
    if (element >> p & 1) positions.push_back(p);
  std::optional<Formula> rep;
  if (!theory_.universe.empty()) rep = representative_formula(element);
  return EquivClass{element, std::move(positions), std::move(rep)};
}

std::vector<ElementId> projection(const LTAlgebra& from_empty, const LTAlgebra& to_theory) {
  if (from_empty.theory().universe != to_theory.theory().universe)
    throw ArgumentError("projection: the two algebras must share one universe");
  if (!from_empty.theory().formulas.empty())
    throw ArgumentError("projection: the source must be the empty-theory quotient");

  // Over the empty theory every assignment is a model, in canonical order,
  // so model position and assignment index coincide.
  const std::size_t source_size = from_empty.algebra().size();
  const std::vector<std::size_t>& target_models = to_theory.model_indices();
  std::vector<ElementId> map(source_size);
  for (std::size_t element = 0; element < source_size; ++element) {
    std::uint32_t image = 0;
    for (std::size_t p = 0; p < target_models.size(); ++p)
      if (element >> target_models[p] & 1) image |= std::uint32_t{1} << p;
    map[element] = static_cast<ElementId>(image);
  }
  return map;
}

}  // namespace stonework
