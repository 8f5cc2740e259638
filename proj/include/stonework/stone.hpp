#pragma once

#include <cstdint>
#include <optional>

#include "stonework/filters.hpp"

namespace stonework {

/// Outcome of checking that the map x -> {ultrafilters containing x} is an
/// embedding into the power set of the ultrafilter list. Injectivity is
/// checked twice: directly on images, and by hunting a separating
/// ultrafilter through x.-y (or y.-x) for every distinct pair; the two
/// routes must agree.
struct StoneReport {
  std::size_t carrier_size = 0;
  std::size_t ultrafilter_count = 0;

  bool zero_to_empty = false;   // image of 0 is the empty set
  bool one_to_full = false;     // image of 1 is the whole ultrafilter list
  bool join_preserved = false;
  bool meet_preserved = false;
  bool complement_preserved = false;
  bool injective_direct = false;
  bool injective_separating = false;

  // Beyond the embedding statement: on a finite carrier the map is onto the
  // full power set, so the carrier size is exactly 2^|ultrafilters|.
  // Reported as a finite strengthening, separate from the embedding checks.
  bool carrier_is_power_of_ultrafilters = false;

  /// Witness table: per element, the ascending indices of the ultrafilters
  /// containing it.
  std::vector<std::vector<std::size_t>> element_images;

  struct Failure {
    std::string equation;
    ElementId x = 0;
    ElementId y = 0;
  };
  std::vector<Failure> failures;  // first witness per failed check

  bool routes_agree() const { return injective_direct == injective_separating; }
  bool embedding_ok() const {
    return zero_to_empty && one_to_full && join_preserved && meet_preserved &&
           complement_preserved && injective_direct && injective_separating;
  }
};

/// The full representation: the ultrafilter list, the per-element image
/// sets, the concrete algebra of sets those images generate, and the
/// isomorphism verdicts.
struct StoneImage {
  std::vector<Ultrafilter> ultrafilters;
  std::vector<std::uint64_t> element_masks;  // x -> bit set over ultrafilters
  FiniteAlgebra image_algebra;               // algebra of sets over the ultrafilter list
  std::vector<ElementId> iso_map;            // x -> index into image_algebra
  bool isomorphic_to_image = false;
  bool onto_full_power_set = false;          // finite strengthening
};

/// Indices (ascending) of the ultrafilters containing x, given an
/// enumerated ultrafilter list.
std::vector<std::size_t> stone_map(const FiniteAlgebra& algebra,
                                   const std::vector<Ultrafilter>& ultrafilters,
                                   ElementId x);

/// Convenience overload that enumerates the ultrafilters itself.
std::vector<std::size_t> stone_map(const FiniteAlgebra& algebra, ElementId x,
                                   std::size_t enumeration_cap = kDefaultCarrierCap);

/// For distinct x, y, an ultrafilter around x.-y (or, failing that, y.-x);
/// such an ultrafilter contains one of the two elements and misses the
/// other. Absent only if both differences are zero, which cannot happen for
/// distinct elements of an algebra satisfying the axioms.
std::optional<std::size_t> separating_ultrafilter(
    const FiniteAlgebra& algebra, const std::vector<Ultrafilter>& ultrafilters,
    ElementId x, ElementId y);

StoneReport verify_stone_embedding(const FiniteAlgebra& algebra,
                                   std::size_t enumeration_cap = kDefaultCarrierCap);

StoneImage build_stone_representation(const FiniteAlgebra& algebra,
                                      std::size_t enumeration_cap = kDefaultCarrierCap);

}  // namespace stonework
