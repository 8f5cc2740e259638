#pragma once

#include <optional>

#include "stonework/algebra.hpp"
#include "stonework/semantics.hpp"

namespace stonework {

/// An equivalence class of formulas over a theory, canonically represented
/// by its set of theory models. Two formulas land in the same class exactly
/// when they agree on every model of the theory.
struct EquivClass {
  ElementId element;                   // carrier index in the quotient algebra
  std::vector<std::size_t> model_set;  // positions into the model list, ascending
  std::optional<Formula> representative;
};

/// The quotient algebra of formulas over a theory T: the carrier is the set
/// of all subsets of the (canonically ordered) model list of T, join is
/// union, meet is intersection, complement is relative complement. The
/// element index of a class IS its model-set bit mask, so the carrier has
/// 2^|models| elements; an inconsistent theory yields the one-element
/// algebra with 0 = 1.
class LTAlgebra {
public:
  const Theory& theory() const noexcept { return theory_; }
  const FiniteAlgebra& algebra() const noexcept { return algebra_; }

  std::size_t model_count() const noexcept { return model_indices_.size(); }
  const std::vector<std::size_t>& model_indices() const noexcept { return model_indices_; }
  Assignment model(std::size_t position) const;

  /// Nontrivial quotient, i.e. the theory has at least one model.
  bool consistent() const noexcept { return model_indices_.size() >= 1; }

  /// The class of a formula: the set of theory models satisfying it. The
  /// formula itself is kept as the class representative.
  EquivClass class_of(const Formula& f) const;

  /// A formula whose class is the given carrier element: the zero class
  /// maps to "v & ~v", the one class to "v | ~v" (v the first universe
  /// variable), anything else to a disjunction over its models of full
  /// conjunctions of literals. Requires a nonempty universe.
  Formula representative_formula(ElementId element) const;

  EquivClass class_info(ElementId element) const;

private:
  friend LTAlgebra build_lt_algebra(const Theory&, std::size_t, std::size_t);
  LTAlgebra(Theory theory, std::vector<std::size_t> model_indices, FiniteAlgebra algebra)
      : theory_(std::move(theory)),
        model_indices_(std::move(model_indices)),
        algebra_(std::move(algebra)) {}

  Theory theory_;
  std::vector<std::size_t> model_indices_;
  FiniteAlgebra algebra_;
};

LTAlgebra build_lt_algebra(const Theory& theory,
                           std::size_t carrier_cap = kDefaultCarrierCap,
                           std::size_t variable_cap = kDefaultVariableCap);

/// The projection homomorphism from the quotient over the empty theory onto
/// the quotient over T (same universe): a class with model set M goes to
/// the class with model set M restricted to the models of T. Returned as an
/// explicit element map.
std::vector<ElementId> projection(const LTAlgebra& from_empty, const LTAlgebra& to_theory);

}  // namespace stonework
