#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bicross/group.hpp"

namespace bicross {

// Cheap isomorphism invariants; equal for isomorphic groups, compared
// field by field so a refutation can name the first mismatch.
struct Fingerprint {
  int order = 1;
  OrderProfile order_profile;
  int center_order = 1;
  std::vector<int> derived_series_orders;
  bool abelian = true;

  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

// Either an explicit bijection f with f(xy) = f(x)f(y), verified over all
// pairs, or the reason none exists ("order", "order_profile",
// "center_order", "derived_series", "abelian", or "exhausted-search").
struct IsomorphismCertificate {
  std::optional<std::vector<int>> bijection;
  std::string refutation;

  bool iso() const { return bijection.has_value(); }
};

IsomorphismCertificate are_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);

// Partition into isomorphism classes. Representatives are the first member
// in input order; classes sorted by (order, order profile).
struct IsoClass {
  int representative;
  std::vector<int> members;
};
std::vector<IsoClass> classify(const std::vector<FiniteGroup>& groups);

// Greedy generating sequence: repeatedly adjoin the lowest-index element
// outside the closure so far. Short (<= 2 here) sequences keep the
// backtracking tree small.
std::vector<int> generating_sequence(const FiniteGroup& g);

}  // namespace bicross
