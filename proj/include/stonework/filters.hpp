#pragma once

#include <vector>

#include "stonework/algebra.hpp"

namespace stonework {

// Subset brute force over candidate filters is 2^n; keep it to small carriers.
inline constexpr std::size_t kBruteForceCarrierLimit = 16;

/// A validated filter: 1 is a member and, for all carrier elements x, y,
/// x.y is a member iff both x and y are. Immutable once built; holds a
/// non-owning reference to its algebra, which must outlive it.
class Filter {
public:
  /// Validates the filter conditions; rejects out-of-carrier members.
  static Filter create(const FiniteAlgebra& algebra, const std::vector<ElementId>& members);

  const FiniteAlgebra& algebra() const noexcept { return *algebra_; }
  bool contains(ElementId x) const;
  std::size_t member_count() const noexcept { return count_; }
  std::vector<ElementId> members() const;  // ascending canonical order

  /// 0 is not a member. The only improper filter is the whole carrier.
  bool proper() const { return !mask_[algebra_->zero()]; }

  /// Meet of all members; the filter equals the principal filter at this
  /// element. (Every filter on a finite carrier is principal.)
  ElementId generator() const;

  bool same_members(const Filter& other) const {
    return algebra_ == other.algebra_ && mask_ == other.mask_;
  }

protected:
  Filter(const FiniteAlgebra* algebra, std::vector<bool> mask);

  const FiniteAlgebra* algebra_;
  std::vector<bool> mask_;
  std::size_t count_ = 0;

  friend Filter principal_filter(const FiniteAlgebra&, ElementId);
  friend Filter filter_generated_by(const FiniteAlgebra&, const std::vector<ElementId>&);
};

/// A filter containing, for each x, exactly one of x and -x. Necessarily
/// proper.
class Ultrafilter : public Filter {
public:
  static Ultrafilter create(const FiniteAlgebra& algebra,
                            const std::vector<ElementId>& members);

private:
  using Filter::Filter;
  friend Ultrafilter extend_to_ultrafilter(const FiniteAlgebra&, const Filter&);
  friend std::vector<Ultrafilter> enumerate_ultrafilters(const FiniteAlgebra&, std::size_t);
  friend std::vector<Ultrafilter> enumerate_ultrafilters_bruteforce(const FiniteAlgebra&);
};

/// Checks both filter conditions over all pairs. Out-of-carrier members are
/// an argument error; duplicates are tolerated (the input is read as a set).
bool is_filter(const FiniteAlgebra& algebra, const std::vector<ElementId>& members);

/// {x : x.a = a}, all elements above a.
Filter principal_filter(const FiniteAlgebra& algebra, ElementId a);

/// The smallest filter containing the given elements: the principal filter
/// at their meet (the empty meet is 1).
Filter filter_generated_by(const FiniteAlgebra& algebra,
                           const std::vector<ElementId>& members);

bool is_ultrafilter(const FiniteAlgebra& algebra, const std::vector<ElementId>& members);

/// A proper filter no proper filter strictly contains. Decided by testing,
/// for each x outside the set, whether adjoining x keeps the generated
/// filter proper.
bool is_maximal(const FiniteAlgebra& algebra, const std::vector<ElementId>& members);

/// Deterministic replacement for the maximal-filter existence argument on
/// finite carriers: walk the carrier in canonical order and adjoin every
/// element that keeps the filter proper. The result is an ultrafilter
/// containing the input. The input must be proper.
Ultrafilter extend_to_ultrafilter(const FiniteAlgebra& algebra, const Filter& filter);

/// All ultrafilters, ordered by ascending generator index. Uses the
/// principal-filter-at-atom construction, valid on any finite carrier.
std::vector<Ultrafilter> enumerate_ultrafilters(const FiniteAlgebra& algebra,
                                                std::size_t enumeration_cap = kDefaultCarrierCap);

/// Definition-level oracle: scans all 2^n candidate subsets. Same ordering
/// as enumerate_ultrafilters; restricted to carriers of at most
/// kBruteForceCarrierLimit elements.
std::vector<Ultrafilter> enumerate_ultrafilters_bruteforce(const FiniteAlgebra& algebra);

/// True iff membership of a join implies membership of a term, and
/// membership of a meet implies membership of both terms, over all pairs.
bool check_ultrafilter_prime(const FiniteAlgebra& algebra, const Ultrafilter& ultrafilter);

}  // namespace stonework
