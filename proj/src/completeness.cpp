#include "stonework/completeness.hpp"

#include <algorithm>

namespace stonework {

namespace {

void require_empty_quotient(const LTAlgebra& lt_empty, const char* op) {
  if (!lt_empty.theory().formulas.empty())
    throw ArgumentError(std::string(op) + ": expected the empty-theory quotient");
}

bool satisfies_all(const Theory& theory, const Assignment& h) {
  for (const Formula& f : theory.formulas)
    if (!evaluate(f, h)) return false;
  return true;
}

}  // namespace

Homomorphism characteristic_hom(const FiniteAlgebra& a, const Filter& filter) {
  if (&filter.algebra() != &a)
    throw PreconditionError("characteristic_hom: filter belongs to a different algebra");
  if (!is_ultrafilter(a, filter.members()))
    throw PreconditionError("characteristic_hom: the filter is not an ultrafilter");
  Homomorphism chi(a.size());
  for (ElementId x = 0; x < a.size(); ++x)
    chi[x] = filter.contains(x) ? two_element_algebra().one() : two_element_algebra().zero();
  return chi;
}

Homomorphism assignment_to_hom(const Assignment& h, const LTAlgebra& lt_empty) {
  require_empty_quotient(lt_empty, "assignment_to_hom");
  if (h.variables() != lt_empty.theory().universe)
    throw ArgumentError("assignment_to_hom: assignment universe mismatch");
  const std::size_t index = h.canonical_index();
  Homomorphism g(lt_empty.algebra().size());
  for (std::size_t element = 0; element < g.size(); ++element)
    g[element] = (element >> index & 1) ? 1 : 0;
  return g;
}

Assignment hom_to_assignment(const Homomorphism& g, const LTAlgebra& lt_empty) {
  require_empty_quotient(lt_empty, "hom_to_assignment");
  if (!check_homomorphism(g, lt_empty.algebra(), two_element_algebra()))
    throw PreconditionError("hom_to_assignment: the map is not a homomorphism into 2");
  const std::vector<std::string>& universe = lt_empty.theory().universe;
  std::vector<bool> values(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const EquivClass cls = lt_empty.class_of(Formula::variable(universe[i]));
    values[i] = g[cls.element] == two_element_algebra().one();
  }
  return Assignment(universe, std::move(values));
}

DiagramCheck soundness_check(const LTAlgebra& lt_empty, const LTAlgebra& lt_theory,
                             const Assignment& h) {
  require_empty_quotient(lt_empty, "soundness_check");
  if (lt_empty.theory().universe != lt_theory.theory().universe)
    throw ArgumentError("soundness_check: the two quotients must share one universe");
  if (!satisfies_all(lt_theory.theory(), h))
    throw PreconditionError("soundness_check: the assignment is not a model of the theory");

  DiagramCheck check;
  check.h = assignment_to_hom(h, lt_empty);
  check.pi = projection(lt_empty, lt_theory);

  // h is a model, so its assignment index appears in the model list.
  const std::vector<std::size_t>& models = lt_theory.model_indices();
  const auto it = std::find(models.begin(), models.end(), h.canonical_index());
  if (it == models.end())
    throw InvariantError("soundness_check: model index missing from the model list");
  const std::size_t position = static_cast<std::size_t>(it - models.begin());

  Homomorphism h_tilde(lt_theory.algebra().size());
  for (std::size_t element = 0; element < h_tilde.size(); ++element)
    h_tilde[element] = (element >> position & 1) ? 1 : 0;

  check.h_tilde_is_homomorphism =
      check_homomorphism(h_tilde, lt_theory.algebra(), two_element_algebra());
  check.commutes = true;
  for (std::size_t element = 0; element < check.h.size(); ++element) {
    if (check.h[element] != h_tilde[check.pi[element]]) {
      check.commutes = false;
      break;
    }
  }
  check.h_tilde = std::move(h_tilde);
  check.quotient_nontrivial = lt_theory.algebra().size() >= 2;
  return check;
}

DiagramCheck soundness_check(const Theory& theory, const Assignment& h,
                             std::size_t carrier_cap, std::size_t variable_cap) {
  const LTAlgebra lt_empty =
      build_lt_algebra(Theory{theory.universe, {}}, carrier_cap, variable_cap);
  const LTAlgebra lt_theory = build_lt_algebra(theory, carrier_cap, variable_cap);
  return soundness_check(lt_empty, lt_theory, h);
}

std::optional<Assignment> find_model_via_ultrafilter(const LTAlgebra& lt_empty,
                                                     const LTAlgebra& lt_theory) {
  require_empty_quotient(lt_empty, "find_model_via_ultrafilter");
  if (lt_empty.theory().universe != lt_theory.theory().universe)
    throw ArgumentError("find_model_via_ultrafilter: universe mismatch");
  if (!lt_theory.consistent()) return std::nullopt;

  const FiniteAlgebra& quotient = lt_theory.algebra();
  const Filter unit = principal_filter(quotient, quotient.one());
  const Ultrafilter p = extend_to_ultrafilter(quotient, unit);
  const Homomorphism chi = characteristic_hom(quotient, p);
  const std::vector<ElementId> pi = projection(lt_empty, lt_theory);

  Homomorphism h(lt_empty.algebra().size());
  for (std::size_t element = 0; element < h.size(); ++element)
    h[element] = chi[pi[element]];

  Assignment model = hom_to_assignment(h, lt_empty);
  if (!satisfies_all(lt_theory.theory(), model))
    throw InvariantError(
        "find_model_via_ultrafilter: extracted assignment fails the theory");
  return model;
}

std::optional<Assignment> find_model_via_ultrafilter(const Theory& theory,
                                                     std::size_t carrier_cap,
                                                     std::size_t variable_cap) {
  const LTAlgebra lt_empty =
      build_lt_algebra(Theory{theory.universe, {}}, carrier_cap, variable_cap);
  const LTAlgebra lt_theory = build_lt_algebra(theory, carrier_cap, variable_cap);
  return find_model_via_ultrafilter(lt_empty, lt_theory);
}

}  // namespace stonework
