#include "stonework/algebra.hpp"

#include <algorithm>
#include <unordered_set>

namespace stonework {

namespace {

std::string plural(std::size_t n) { return n == 1 ? "" : "s"; }

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> names,
                             std::vector<ElementId> join_table,
                             std::vector<ElementId> meet_table,
                             std::vector<ElementId> complement_table,
                             ElementId zero, ElementId one)
    : names_(std::move(names)),
      join_(std::move(join_table)),
      meet_(std::move(meet_table)),
      complement_(std::move(complement_table)),
      zero_(zero),
      one_(one) {
  const std::size_t n = names_.size();
  if (n == 0) throw ArgumentError("algebra: carrier must not be empty");
  if (n > kMaxCarrierSize)
    throw ArgumentError("algebra: carrier size " + std::to_string(n) +
                        " exceeds the representable maximum " +
                        std::to_string(kMaxCarrierSize));
  if (join_.size() != n * n)
    throw ArgumentError("algebra: join table must have " + std::to_string(n * n) +
                        " entries, got " + std::to_string(join_.size()));
  if (meet_.size() != n * n)
    throw ArgumentError("algebra: meet table must have " + std::to_string(n * n) +
                        " entries, got " + std::to_string(meet_.size()));
  if (complement_.size() != n)
    throw ArgumentError("algebra: complement table must have " + std::to_string(n) +
                        " entries, got " + std::to_string(complement_.size()));
  if (zero_ >= n) throw ArgumentError("algebra: zero is out of carrier");
  if (one_ >= n) throw ArgumentError("algebra: one is out of carrier");
  for (ElementId v : join_)
    if (v >= n) throw ArgumentError("algebra: join table entry out of carrier");
  for (ElementId v : meet_)
    if (v >= n) throw ArgumentError("algebra: meet table entry out of carrier");
  for (ElementId v : complement_)
    if (v >= n) throw ArgumentError("algebra: complement table entry out of carrier");
  std::unordered_set<std::string> seen;
  for (const std::string& name : names_) {
    if (name.empty()) throw ArgumentError("algebra: element names must not be empty");
    if (!seen.insert(name).second)
      throw ArgumentError("algebra: duplicate element name '" + name + "'");
  }
}

void FiniteAlgebra::require_in_carrier(ElementId x, const char* op) const {
  if (x >= names_.size())
    throw ArgumentError(std::string(op) + ": element " + std::to_string(x) +
                        " out of carrier (size " + std::to_string(names_.size()) + ")");
}

const std::string& FiniteAlgebra::name_of(ElementId x) const {
  require_in_carrier(x, "name_of");
  return names_[x];
}

std::optional<ElementId> FiniteAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<ElementId>(i);
  return std::nullopt;
}

ElementId FiniteAlgebra::join(ElementId x, ElementId y) const {
  require_in_carrier(x, "join");
  require_in_carrier(y, "join");
  return join_raw(x, y);
}

ElementId FiniteAlgebra::meet(ElementId x, ElementId y) const {
  require_in_carrier(x, "meet");
  require_in_carrier(y, "meet");
  return meet_raw(x, y);
}

ElementId FiniteAlgebra::complement(ElementId x) const {
  require_in_carrier(x, "complement");
  return complement_raw(x);
}

bool FiniteAlgebra::leq(ElementId x, ElementId y) const {
  require_in_carrier(x, "leq");
  require_in_carrier(y, "leq");
  return meet_raw(x, y) == x;
}

PowerSetAlgebra::PowerSetAlgebra(std::vector<std::string> ground)
    : ground_(std::move(ground)) {
  if (ground_.size() >= 16)
    throw SizeError("powerset: ground set of " + std::to_string(ground_.size()) +
                    " atoms would exceed the representable carrier");
  std::unordered_set<std::string> seen;
  for (const std::string& atom : ground_) {
    if (atom.empty()) throw ArgumentError("powerset: ground atoms must not be empty");
    if (!seen.insert(atom).second)
      throw ArgumentError("powerset: duplicate ground atom '" + atom + "'");
  }
}

std::string PowerSetAlgebra::element_name(std::uint64_t mask) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (!first) out += ',';
    out += ground_[i];
    first = false;
  }
  out += '}';
  return out;
}

FiniteAlgebra PowerSetAlgebra::materialize(std::size_t carrier_cap) const {
  const std::uint64_t n = carrier_size();
  if (n > carrier_cap)
    throw SizeError("powerset: carrier of " + std::to_string(n) + " element" +
                    plural(n) + " exceeds the cap " + std::to_string(carrier_cap));
  const std::uint64_t full = n - 1;
  std::vector<std::string> names(n);
  std::vector<ElementId> join(n * n), meet(n * n), comp(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    names[x] = element_name(x);
    comp[x] = static_cast<ElementId>(full & ~x);
    for (std::uint64_t y = 0; y < n; ++y) {
      join[x * n + y] = static_cast<ElementId>(x | y);
      meet[x * n + y] = static_cast<ElementId>(x & y);
    }
  }
  return FiniteAlgebra(std::move(names), std::move(join), std::move(meet),
                       std::move(comp), 0, static_cast<ElementId>(full));
}

bool AxiomReport::all_passed() const {
  for (const AxiomResult& r : axioms)
    if (!r.passed) return false;
  return true;
}

AxiomReport verify_axioms(const FiniteAlgebra& a, std::size_t carrier_cap) {
  const std::size_t n = a.size();
  if (n > carrier_cap)
    throw SizeError("verify_axioms: carrier size " + std::to_string(n) +
                    " exceeds the cap " + std::to_string(carrier_cap));

  AxiomReport report;
  report.axioms = {
      {"B1", "associativity", true, std::nullopt},
      {"B2", "commutativity", true, std::nullopt},
      {"B3", "absorption", true, std::nullopt},
      {"B4", "distributivity", true, std::nullopt},
      {"B5", "complementation", true, std::nullopt},
  };
  AxiomResult& b1 = report.axioms[0];
  AxiomResult& b2 = report.axioms[1];
  AxiomResult& b3 = report.axioms[2];
  AxiomResult& b4 = report.axioms[3];
  AxiomResult& b5 = report.axioms[4];

  auto fail = [](AxiomResult& slot, const char* identity, int arity, ElementId x,
                 ElementId y, ElementId z, ElementId lhs, ElementId rhs) {
    if (!slot.passed) return;
    slot.passed = false;
    slot.violation = AxiomViolation{identity, arity, x, y, z, lhs, rhs};
  };

  const ElementId one = a.one();
  const ElementId zero = a.zero();

  for (ElementId x = 0; x < n; ++x) {
    // B5: x+(-x) = 1, x.(-x) = 0
    const ElementId cx = a.complement_raw(x);
    if (ElementId lhs = a.join_raw(x, cx); lhs != one)
      fail(b5, "x+(-x) = 1", 1, x, 0, 0, lhs, one);
    if (ElementId lhs = a.meet_raw(x, cx); lhs != zero)
      fail(b5, "x.(-x) = 0", 1, x, 0, 0, lhs, zero);

    for (ElementId y = 0; y < n; ++y) {
      // B2: x+y = y+x, x.y = y.x
      if (ElementId lhs = a.join_raw(x, y), rhs = a.join_raw(y, x); lhs != rhs)
        fail(b2, "x+y = y+x", 2, x, y, 0, lhs, rhs);
      if (ElementId lhs = a.meet_raw(x, y), rhs = a.meet_raw(y, x); lhs != rhs)
        fail(b2, "x.y = y.x", 2, x, y, 0, lhs, rhs);
      // B3: x+(x.y) = x, x.(x+y) = x
      if (ElementId lhs = a.join_raw(x, a.meet_raw(x, y)); lhs != x)
        fail(b3, "x+(x.y) = x", 2, x, y, 0, lhs, x);
      if (ElementId lhs = a.meet_raw(x, a.join_raw(x, y)); lhs != x)
        fail(b3, "x.(x+y) = x", 2, x, y, 0, lhs, x);

      for (ElementId z = 0; z < n; ++z) {
        // B1: x+(y+z) = (x+y)+z, x.(y.z) = (x.y).z
        if (ElementId lhs = a.join_raw(x, a.join_raw(y, z)),
            rhs = a.join_raw(a.join_raw(x, y), z);
            lhs != rhs)
          fail(b1, "x+(y+z) = (x+y)+z", 3, x, y, z, lhs, rhs);
        if (ElementId lhs = a.meet_raw(x, a.meet_raw(y, z)),
            rhs = a.meet_raw(a.meet_raw(x, y), z);
            lhs != rhs)
          fail(b1, "x.(y.z) = (x.y).z", 3, x, y, z, lhs, rhs);
        // B4: x.(y+z) = (x.y)+(x.z), x+(y.z) = (x+y).(x+z)
        if (ElementId lhs = a.meet_raw(x, a.join_raw(y, z)),
            rhs = a.join_raw(a.meet_raw(x, y), a.meet_raw(x, z));
            lhs != rhs)
          fail(b4, "x.(y+z) = (x.y)+(x.z)", 3, x, y, z, lhs, rhs);
        if (ElementId lhs = a.join_raw(x, a.meet_raw(y, z)),
            rhs = a.meet_raw(a.join_raw(x, y), a.join_raw(x, z));
            lhs != rhs)
          fail(b4, "x+(y.z) = (x+y).(x+z)", 3, x, y, z, lhs, rhs);
      }
    }
  }
  return report;
}

bool check_complement_uniqueness(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const bool complements =
          a.join_raw(x, y) == a.one() && a.meet_raw(x, y) == a.zero();
      if (complements && y != a.complement_raw(x)) return false;
    }
  }
  return true;
}

bool check_de_morgan(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (a.complement_raw(a.join_raw(x, y)) !=
          a.meet_raw(a.complement_raw(x), a.complement_raw(y)))
        return false;
      if (a.complement_raw(a.meet_raw(x, y)) !=
          a.join_raw(a.complement_raw(x), a.complement_raw(y)))
        return false;
    }
  }
  return true;
}

std::vector<ElementId> atoms(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<ElementId> out;
  for (ElementId cand = 0; cand < n; ++cand) {
    if (cand == a.zero()) continue;
    bool minimal = true;
    for (ElementId x = 0; x < n; ++x) {
      if (x == a.zero() || x == cand) continue;
      if (a.meet_raw(x, cand) == x) {  // 0 < x < cand
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(cand);
  }
  return out;
}

bool check_homomorphism(const std::vector<ElementId>& map,
                        const FiniteAlgebra& domain,
                        const FiniteAlgebra& codomain) {
  if (map.size() != domain.size())
    throw ArgumentError("check_homomorphism: map must be total on the domain "
                        "carrier (expected " + std::to_string(domain.size()) +
                        " entries, got " + std::to_string(map.size()) + ")");
  for (ElementId v : map)
    if (v >= codomain.size())
      throw ArgumentError("check_homomorphism: map value " + std::to_string(v) +
                          " out of codomain carrier");

  if (map[domain.zero()] != codomain.zero()) return false;
  if (map[domain.one()] != codomain.one()) return false;
  const std::size_t n = domain.size();
  for (ElementId x = 0; x < n; ++x) {
    if (map[domain.complement_raw(x)] != codomain.complement_raw(map[x])) return false;
    for (ElementId y = 0; y < n; ++y) {
      if (map[domain.join_raw(x, y)] != codomain.join_raw(map[x], map[y])) return false;
      if (map[domain.meet_raw(x, y)] != codomain.meet_raw(map[x], map[y])) return false;
    }
  }
  return true;
}

bool is_isomorphism(const std::vector<ElementId>& map,
                    const FiniteAlgebra& domain,
                    const FiniteAlgebra& codomain) {
  if (!check_homomorphism(map, domain, codomain)) return false;
  if (domain.size() != codomain.size()) return false;
  std::vector<bool> hit(codomain.size(), false);
  for (ElementId v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

const FiniteAlgebra& two_element_algebra() {
  static const FiniteAlgebra two{{"0", "1"},
                                 {0, 1, 1, 1},   // join
                                 {0, 0, 0, 1},   // meet
                                 {1, 0},         // complement
                                 0,
                                 1};
  return two;
}

}  // namespace stonework
