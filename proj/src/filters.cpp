#include "stonework/filters.hpp"

#include <algorithm>

namespace stonework {

namespace {

std::vector<bool> mask_from_members(const FiniteAlgebra& a,
                                    const std::vector<ElementId>& members,
                                    const char* op) {
  std::vector<bool> mask(a.size(), false);
  for (ElementId x : members) {
    if (x >= a.size())
      throw ArgumentError(std::string(op) + ": member " + std::to_string(x) +
                          " out of carrier (size " + std::to_string(a.size()) + ")");
    mask[x] = true;
  }
  return mask;
}

bool mask_is_filter(const FiniteAlgebra& a, const std::vector<bool>& mask) {
  if (!mask[a.one()]) return false;
  const std::size_t n = a.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const bool meet_in = mask[a.meet_raw(x, y)];
      if (meet_in != (mask[x] && mask[y])) return false;
    }
  }
  return true;
}

bool mask_is_ultrafilter(const FiniteAlgebra& a, const std::vector<bool>& mask) {
  const std::size_t n = a.size();
  for (ElementId x = 0; x < n; ++x)
    if (mask[x] == mask[a.complement_raw(x)]) return false;
  return mask_is_filter(a, mask);
}

ElementId mask_generator(const FiniteAlgebra& a, const std::vector<bool>& mask) {
  ElementId g = a.one();
  for (ElementId x = 0; x < a.size(); ++x)
    if (mask[x]) g = a.meet_raw(g, x);
  return g;
}

std::vector<bool> principal_mask(const FiniteAlgebra& a, ElementId gen) {
  std::vector<bool> mask(a.size(), false);
  for (ElementId x = 0; x < a.size(); ++x)
    if (a.meet_raw(x, gen) == gen) mask[x] = true;
  return mask;
}

}  // namespace

Filter::Filter(const FiniteAlgebra* algebra, std::vector<bool> mask)
    : algebra_(algebra), mask_(std::move(mask)) {
  count_ = static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

Filter Filter::create(const FiniteAlgebra& a, const std::vector<ElementId>& members) {
  std::vector<bool> mask = mask_from_members(a, members, "filter");
  if (!mask_is_filter(a, mask))
    throw ArgumentError("filter: the given set violates the filter conditions");
  return Filter(&a, std::move(mask));
}

bool Filter::contains(ElementId x) const {
  if (x >= algebra_->size())
    throw ArgumentError("filter: element " + std::to_string(x) + " out of carrier");
  return mask_[x];
}

std::vector<ElementId> Filter::members() const {
  std::vector<ElementId> out;
  out.reserve(count_);
  for (ElementId x = 0; x < mask_.size(); ++x)
    if (mask_[x]) out.push_back(x);
  return out;
}

ElementId Filter::generator() const { return mask_generator(*algebra_, mask_); }

Ultrafilter Ultrafilter::create(const FiniteAlgebra& a,
                                const std::vector<ElementId>& members) {
  std::vector<bool> mask = mask_from_members(a, members, "ultrafilter");
  if (!mask_is_ultrafilter(a, mask))
    throw ArgumentError("ultrafilter: the given set violates the ultrafilter conditions");
  return Ultrafilter(&a, std::move(mask));
}

bool is_filter(const FiniteAlgebra& a, const std::vector<ElementId>& members) {
  return mask_is_filter(a, mask_from_members(a, members, "is_filter"));
}

Filter principal_filter(const FiniteAlgebra& a, ElementId gen) {
  if (gen >= a.size())
    throw ArgumentError("principal_filter: element " + std::to_string(gen) +
                        " out of carrier");
  return Filter(&a, principal_mask(a, gen));
}

Filter filter_generated_by(const FiniteAlgebra& a, const std::vector<ElementId>& members) {
  ElementId gen = a.one();
  for (ElementId x : members) {
    if (x >= a.size())
      throw ArgumentError("filter_generated_by: member " + std::to_string(x) +
                          " out of carrier");
    gen = a.meet_raw(gen, x);
  }
  return Filter(&a, principal_mask(a, gen));
}

bool is_ultrafilter(const FiniteAlgebra& a, const std::vector<ElementId>& members) {
  return mask_is_ultrafilter(a, mask_from_members(a, members, "is_ultrafilter"));
}

bool is_maximal(const FiniteAlgebra& a, const std::vector<ElementId>& members) {
  std::vector<bool> mask = mask_from_members(a, members, "is_maximal");
  if (!mask_is_filter(a, mask)) return false;
  if (mask[a.zero()]) return false;  // improper
  const ElementId gen = mask_generator(a, mask);
  for (ElementId x = 0; x < a.size(); ++x) {
    if (mask[x]) continue;
    // Adjoining x keeps the filter proper iff gen.x is nonzero.
    if (a.meet_raw(gen, x) != a.zero()) return false;
  }
  return true;
}

Ultrafilter extend_to_ultrafilter(const FiniteAlgebra& a, const Filter& filter) {
  if (&filter.algebra() != &a)
    throw ArgumentError("extend_to_ultrafilter: filter belongs to a different algebra");
  if (!filter.proper())
    throw PreconditionError("extend_to_ultrafilter: input filter is improper");

  ElementId gen = filter.generator();
  for (ElementId x = 0; x < a.size(); ++x) {
    if (a.meet_raw(x, gen) == gen) continue;  // already a member
    const ElementId candidate = a.meet_raw(gen, x);
    if (candidate != a.zero()) gen = candidate;
  }

  std::vector<bool> mask = principal_mask(a, gen);
  if (!mask_is_ultrafilter(a, mask))
    throw InvariantError("extend_to_ultrafilter: greedy extension did not reach an ultrafilter");
  for (ElementId x = 0; x < a.size(); ++x)
    if (filter.contains(x) && !mask[x])
      throw InvariantError("extend_to_ultrafilter: result does not contain the input filter");
  return Ultrafilter(&a, std::move(mask));
}

std::vector<Ultrafilter> enumerate_ultrafilters(const FiniteAlgebra& a,
                                                std::size_t enumeration_cap) {
  if (a.size() > enumeration_cap)
    throw SizeError("enumerate_ultrafilters: carrier size " + std::to_string(a.size()) +
                    " exceeds the cap " + std::to_string(enumeration_cap));
  std::vector<Ultrafilter> out;
  for (ElementId atom : atoms(a)) {
    std::vector<bool> mask = principal_mask(a, atom);
    if (!mask_is_ultrafilter(a, mask))
      throw ArgumentError("enumerate_ultrafilters: the principal filter at '" +
                          a.name_of(atom) +
                          "' is not an ultrafilter; the algebra violates the axioms");
    out.emplace_back(Ultrafilter(&a, std::move(mask)));
  }
  // atoms() already walks elements in canonical order, so the list is sorted
  // by ascending generator index.
  return out;
}

std::vector<Ultrafilter> enumerate_ultrafilters_bruteforce(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  if (n > kBruteForceCarrierLimit)
    throw SizeError("enumerate_ultrafilters_bruteforce: carrier size " +
                    std::to_string(n) + " exceeds the subset-scan limit " +
                    std::to_string(kBruteForceCarrierLimit));

  std::vector<Ultrafilter> out;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    bool exactly_one = true;
    for (ElementId x = 0; x < n && exactly_one; ++x)
      exactly_one = ((bits >> x) & 1) != ((bits >> a.complement_raw(x)) & 1);
    if (!exactly_one) continue;

    std::vector<bool> mask(n, false);
    for (ElementId x = 0; x < n; ++x) mask[x] = (bits >> x) & 1;
    if (!mask_is_filter(a, mask)) continue;
    out.emplace_back(Ultrafilter(&a, std::move(mask)));
  }
  std::sort(out.begin(), out.end(), [](const Ultrafilter& lhs, const Ultrafilter& rhs) {
    return lhs.generator() < rhs.generator();
  });
  return out;
}

bool check_ultrafilter_prime(const FiniteAlgebra& a, const Ultrafilter& u) {
  if (&u.algebra() != &a)
    throw ArgumentError("check_ultrafilter_prime: ultrafilter belongs to a different algebra");
  const std::size_t n = a.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (u.contains(a.join_raw(x, y)) && !(u.contains(x) || u.contains(y))) return false;
      if (u.contains(a.meet_raw(x, y)) && !(u.contains(x) && u.contains(y))) return false;
    }
  }
  return true;
}

}  // namespace stonework
