#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stonework/errors.hpp"

namespace stonework {

// Elements are identified by their index into the carrier. Ascending index
// is the canonical order of an algebra, fixed at construction; every
// deterministic choice downstream (greedy ultrafilter extension, enumeration
// order) follows it.
using ElementId = std::uint16_t;

inline constexpr std::size_t kDefaultCarrierCap = std::size_t{1} << 12;
inline constexpr std::size_t kMaxCarrierSize = 65535;

/// A finite algebra candidate (B, +, ., -, 0, 1): a carrier of named
/// elements plus explicit operation tables. Construction validates shape and
/// in-carrier closure only; whether the tables actually satisfy the algebra
/// laws is the job of verify_axioms. Values are immutable after construction
/// and safe to share between threads.
class FiniteAlgebra {
public:
  /// Tables are row-major: entry (x, y) sits at index x*size + y.
  FiniteAlgebra(std::vector<std::string> names,
                std::vector<ElementId> join_table,
                std::vector<ElementId> meet_table,
                std::vector<ElementId> complement_table,
                ElementId zero, ElementId one);

  std::size_t size() const noexcept { return names_.size(); }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }

  const std::string& name_of(ElementId x) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> index_of(const std::string& name) const;

  ElementId join(ElementId x, ElementId y) const;
  ElementId meet(ElementId x, ElementId y) const;
  ElementId complement(ElementId x) const;

  /// x <= y in the induced order, defined as x.y = x. Not part of the
  /// algebra signature; it is the implementer's convention needed for atoms
  /// and principal filters.
  bool leq(ElementId x, ElementId y) const;

  // Unchecked table access for exhaustive scans. Arguments must be in
  // carrier.
  ElementId join_raw(ElementId x, ElementId y) const noexcept {
    return join_[static_cast<std::size_t>(x) * names_.size() + y];
  }
  ElementId meet_raw(ElementId x, ElementId y) const noexcept {
    return meet_[static_cast<std::size_t>(x) * names_.size() + y];
  }
  ElementId complement_raw(ElementId x) const noexcept { return complement_[x]; }

  bool operator==(const FiniteAlgebra& other) const = default;

private:
  void require_in_carrier(ElementId x, const char* op) const;

  std::vector<std::string> names_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> complement_;
  ElementId zero_;
  ElementId one_;
};

/// The power-set algebra of a finite ground set X. Elements are the subsets
/// of X, encoded as characteristic bit-vectors: ground atom i contributes
/// bit i, and subsets are ordered by ascending numeric encoding. zero is the
/// empty set, one is X itself. An empty ground set yields the one-element
/// algebra with 0 = 1.
class PowerSetAlgebra {
public:
  explicit PowerSetAlgebra(std::vector<std::string> ground);

  const std::vector<std::string>& ground() const noexcept { return ground_; }
  std::size_t ground_size() const noexcept { return ground_.size(); }
  std::uint64_t carrier_size() const noexcept { return std::uint64_t{1} << ground_.size(); }

  /// Subset name in ground order, e.g. "{a,c}"; the empty set prints "{}".
  std::string element_name(std::uint64_t mask) const;

  /// Expand to explicit operation tables. Refuses carriers above the cap.
  FiniteAlgebra materialize(std::size_t carrier_cap = kDefaultCarrierCap) const;

private:
  std::vector<std::string> ground_;
};

struct AxiomViolation {
  std::string identity;  // e.g. "x+(y+z) = (x+y)+z"
  int arity = 0;         // how many of x, y, z are meaningful
  ElementId x = 0;
  ElementId y = 0;
  ElementId z = 0;
  ElementId lhs = 0;
  ElementId rhs = 0;
};

struct AxiomResult {
  std::string axiom;  // "B1".."B5"
  std::string name;   // "associativity", ...
  bool passed = true;
  std::optional<AxiomViolation> violation;
};

struct AxiomReport {
  std::vector<AxiomResult> axioms;
  bool all_passed() const;
};

/// Checks B1 (associativity), B2 (commutativity), B3 (absorption),
/// B4 (distributivity) and B5 (complementation) over every instantiation of
/// x, y, z, reporting the first counterexample per axiom. O(n^3); refuses
/// carriers above the cap.
AxiomReport verify_axioms(const FiniteAlgebra& algebra,
                          std::size_t carrier_cap = kDefaultCarrierCap);

/// True iff for every x the only y with x+y = 1 and x.y = 0 is -x.
/// Precondition: the algebra passes verify_axioms.
bool check_complement_uniqueness(const FiniteAlgebra& algebra);

/// True iff -(x+y) = -x.-y and -(x.y) = -x+-y for all pairs.
/// Precondition: the algebra passes verify_axioms.
bool check_de_morgan(const FiniteAlgebra& algebra);

/// Minimal nonzero elements in ascending canonical order.
/// Precondition: the algebra passes verify_axioms.
std::vector<ElementId> atoms(const FiniteAlgebra& algebra);

/// True iff f preserves 0, 1, +, . and -. The map is given element-wise on
/// the domain carrier; a map that is not total, or lands outside the
/// codomain carrier, is an argument error.
bool check_homomorphism(const std::vector<ElementId>& map,
                        const FiniteAlgebra& domain,
                        const FiniteAlgebra& codomain);

/// A bijective homomorphism.
bool is_isomorphism(const std::vector<ElementId>& map,
                    const FiniteAlgebra& domain,
                    const FiniteAlgebra& codomain);

/// The two-element algebra 2 = {0,1} with the usual operations. Shared
/// immutable instance.
const FiniteAlgebra& two_element_algebra();

}  // namespace stonework
