#pragma once

#include <optional>

#include "stonework/filters.hpp"
#include "stonework/lindenbaum.hpp"

namespace stonework {

/// Element-wise maps into the two-element algebra (or between arbitrary
/// algebras); entry x holds the image of carrier element x.
using Homomorphism = std::vector<ElementId>;

/// The membership indicator of an ultrafilter, as a map into the
/// two-element algebra. The input must be an ultrafilter of the given
/// algebra; passing a filter that is not one is a precondition error.
Homomorphism characteristic_hom(const FiniteAlgebra& algebra, const Filter& filter);

/// The homomorphism from the empty-theory quotient into 2 induced by an
/// assignment: a class maps to 1 exactly when the assignment is one of its
/// models. Restricted to variable classes it reproduces the assignment.
Homomorphism assignment_to_hom(const Assignment& assignment, const LTAlgebra& lt_empty);

/// Inverse direction: reads off each variable's value from the image of its
/// class. The input must pass check_homomorphism into 2; the two directions
/// compose to the identity on either side.
Assignment hom_to_assignment(const Homomorphism& hom, const LTAlgebra& lt_empty);

/// The commuting-triangle verdict for one assignment: h (empty quotient
/// into 2), the projection pi, and the factor map h_tilde (theory quotient
/// into 2) with h = h_tilde o pi.
struct DiagramCheck {
  Homomorphism h;
  std::vector<ElementId> pi;
  std::optional<Homomorphism> h_tilde;
  bool h_tilde_is_homomorphism = false;
  bool commutes = false;
  bool quotient_nontrivial = false;

  bool ok() const { return h_tilde_is_homomorphism && commutes && quotient_nontrivial; }
};

/// Checks the triangle for a model of the theory: builds h_tilde from the
/// assignment, verifies it is a homomorphism and that the diagram commutes
/// pointwise over the whole empty-theory carrier, and confirms the theory
/// quotient is nontrivial. The assignment must satisfy every formula of the
/// theory.
DiagramCheck soundness_check(const LTAlgebra& lt_empty, const LTAlgebra& lt_theory,
                             const Assignment& assignment);

DiagramCheck soundness_check(const Theory& theory, const Assignment& assignment,
                             std::size_t carrier_cap = kDefaultCarrierCap,
                             std::size_t variable_cap = kDefaultVariableCap);

/// The ultrafilter route to a model: build the theory quotient; if trivial
/// report inconsistency; otherwise extend the unit filter to an ultrafilter
/// p, compose its characteristic map with the projection, read the
/// resulting homomorphism back as an assignment, and verify it satisfies
/// the theory before returning it. Verification failure raises an invariant
/// error and indicates a bug.
std::optional<Assignment> find_model_via_ultrafilter(
    const LTAlgebra& lt_empty, const LTAlgebra& lt_theory);

std::optional<Assignment> find_model_via_ultrafilter(
    const Theory& theory, std::size_t carrier_cap = kDefaultCarrierCap,
    std::size_t variable_cap = kDefaultVariableCap);

}  // namespace stonework
