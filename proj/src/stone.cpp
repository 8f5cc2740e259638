#include "stonework/stone.hpp"

#include <algorithm>
#include <map>

namespace stonework {

namespace {

std::vector<std::uint64_t> image_masks(const FiniteAlgebra& a,
                                       const std::vector<Ultrafilter>& ufs) {
  if (ufs.size() > 64)
    throw SizeError("stone: more than 64 ultrafilters is unsupported");
  std::vector<std::uint64_t> masks(a.size(), 0);
  for (std::size_t i = 0; i < ufs.size(); ++i) {
    for (ElementId x : ufs[i].members()) masks[x] |= std::uint64_t{1} << i;
  }
  return masks;
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

std::string set_name(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!(mask >> i & 1)) continue;
    if (!first) out += ',';
    out += 'p';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace

std::vector<std::size_t> stone_map(const FiniteAlgebra& a,
                                   const std::vector<Ultrafilter>& ufs, ElementId x) {
  if (x >= a.size())
    throw ArgumentError("stone_map: element " + std::to_string(x) + " out of carrier");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ufs.size(); ++i)
    if (ufs[i].contains(x)) out.push_back(i);
  return out;
}

std::vector<std::size_t> stone_map(const FiniteAlgebra& a, ElementId x,
                                   std::size_t enumeration_cap) {
  return stone_map(a, enumerate_ultrafilters(a, enumeration_cap), x);
}

std::optional<std::size_t> separating_ultrafilter(
    const FiniteAlgebra& a, const std::vector<Ultrafilter>& ufs, ElementId x,
    ElementId y) {
  if (x == y) throw ArgumentError("separating_ultrafilter: the elements must differ");
  // Mirrors the injectivity argument: one of x.-y, y.-x is nonzero, and any
  // ultrafilter containing it contains one element but not the other.
  const ElementId diff_xy = a.meet(x, a.complement(y));
  const ElementId diff_yx = a.meet(y, a.complement(x));
  const ElementId diff = diff_xy != a.zero() ? diff_xy : diff_yx;
  if (diff == a.zero()) return std::nullopt;
  for (std::size_t i = 0; i < ufs.size(); ++i)
    if (ufs[i].contains(diff)) return i;
  return std::nullopt;
}

StoneReport verify_stone_embedding(const FiniteAlgebra& a, std::size_t enumeration_cap) {
  const std::vector<Ultrafilter> ufs = enumerate_ultrafilters(a, enumeration_cap);
  const std::vector<std::uint64_t> masks = image_masks(a, ufs);
  const std::uint64_t full =
      ufs.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ufs.size()) - 1;
  const std::size_t n = a.size();

  StoneReport report;
  report.carrier_size = n;
  report.ultrafilter_count = ufs.size();
  report.element_images.reserve(n);
  for (ElementId x = 0; x < n; ++x) report.element_images.push_back(mask_to_indices(masks[x]));

  auto record = [&report](bool& flag, const char* equation, ElementId x, ElementId y) {
    if (!flag) return;
    flag = false;
    report.failures.push_back({equation, x, y});
  };

  report.zero_to_empty = masks[a.zero()] == 0;
  if (!report.zero_to_empty) report.failures.push_back({"s(0) = {}", a.zero(), 0});
  report.one_to_full = masks[a.one()] == full;
  if (!report.one_to_full) report.failures.push_back({"s(1) = UltA", a.one(), 0});

  report.join_preserved = true;
  report.meet_preserved = true;
  report.complement_preserved = true;
  for (ElementId x = 0; x < n; ++x) {
    if ((full & ~masks[x]) != masks[a.complement_raw(x)])
      record(report.complement_preserved, "s(-x) = UltA \\ s(x)", x, 0);
    for (ElementId y = 0; y < n; ++y) {
      if ((masks[x] | masks[y]) != masks[a.join_raw(x, y)])
        record(report.join_preserved, "s(x+y) = s(x) u s(y)", x, y);
      if ((masks[x] & masks[y]) != masks[a.meet_raw(x, y)])
        record(report.meet_preserved, "s(x.y) = s(x) n s(y)", x, y);
    }
  }

  report.injective_direct = true;
  report.injective_separating = true;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = static_cast<ElementId>(x + 1); y < n; ++y) {
      if (masks[x] == masks[y])
        record(report.injective_direct, "s(x) = s(y) with x != y", x, y);
      const std::optional<std::size_t> p = separating_ultrafilter(a, ufs, x, y);
      bool separated = false;
      if (p) {
        const bool in_x = ufs[*p].contains(x);
        const bool in_y = ufs[*p].contains(y);
        separated = in_x != in_y;
      }
      if (!separated)
        record(report.injective_separating, "no ultrafilter separates x and y", x, y);
    }
  }

  report.carrier_is_power_of_ultrafilters =
      ufs.size() < 64 && n == (std::size_t{1} << ufs.size());
  return report;
}

StoneImage build_stone_representation(const FiniteAlgebra& a, std::size_t enumeration_cap) {
  std::vector<Ultrafilter> ufs = enumerate_ultrafilters(a, enumeration_cap);
  std::vector<std::uint64_t> masks = image_masks(a, ufs);
  const std::uint64_t full =
      ufs.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ufs.size()) - 1;

  // The carrier of the image algebra: the element images, closed under the
  // set operations. When the source satisfies the axioms the images are
  // already closed and the loop settles immediately.
  std::map<std::uint64_t, ElementId> index_of;
  std::vector<std::uint64_t> carrier;
  auto add = [&](std::uint64_t mask) {
    if (index_of.emplace(mask, 0).second) carrier.push_back(mask);
  };
  for (std::uint64_t mask : masks) add(mask);
  for (std::size_t settled = 0; settled < carrier.size();) {
    const std::size_t before = carrier.size();
    for (std::size_t i = settled; i < before; ++i) {
      add(full & ~carrier[i]);
      for (std::size_t j = 0; j <= i; ++j) {
        add(carrier[i] | carrier[j]);
        add(carrier[i] & carrier[j]);
      }
    }
    settled = before;
    if (carrier.size() == before) break;
    if (carrier.size() > enumeration_cap)
      throw SizeError("stone: image closure exceeds the cap " +
                      std::to_string(enumeration_cap));
  }
  std::sort(carrier.begin(), carrier.end());
  for (std::size_t i = 0; i < carrier.size(); ++i)
    index_of[carrier[i]] = static_cast<ElementId>(i);

  const std::size_t m = carrier.size();
  std::vector<std::string> names(m);
  std::vector<ElementId> join(m * m), meet(m * m), comp(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = set_name(carrier[i]);
    comp[i] = index_of.at(full & ~carrier[i]);
    for (std::size_t j = 0; j < m; ++j) {
      join[i * m + j] = index_of.at(carrier[i] | carrier[j]);
      meet[i * m + j] = index_of.at(carrier[i] & carrier[j]);
    }
  }
  FiniteAlgebra image(std::move(names), std::move(join), std::move(meet), std::move(comp),
                      index_of.at(0), index_of.at(full));

  std::vector<ElementId> iso(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) iso[x] = index_of.at(masks[x]);

  StoneImage result{std::move(ufs), std::move(masks), std::move(image), std::move(iso),
                    false, false};
  result.isomorphic_to_image =
      is_isomorphism(result.iso_map, a, result.image_algebra);

  // Onto the FULL power set of the ultrafilter list: every subset is the
  // image of some element.
  std::vector<std::uint64_t> distinct = result.element_masks;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  result.onto_full_power_set =
      result.ultrafilters.size() < 64 &&
      distinct.size() == (std::size_t{1} << result.ultrafilters.size());
  return result;
}

}  // namespace stonework
