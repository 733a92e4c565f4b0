#pragma once

#include <vector>

#include "bicross/action.hpp"
#include "bicross/group.hpp"

namespace bicross {

// Subgroups H, G of E with |H||G| = |E| and trivial intersection; every
// element of E then factors uniquely as h*g.
struct ExactFactorization {
  const FiniteGroup* parent;
  Subgroup H;
  Subgroup G;
};

// All subgroups generated by at most two elements, deduplicated and sorted
// by (order, element set). Every group this engine constructs is a product
// of two cyclic subgroups, so the 2-generated family is the relevant one;
// subgroups needing three or more generators are not enumerated.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g);

// All ordered pairs (H, G) forming an exact factorization of E, in
// deterministic order (by |H|, then H's element set, then G's).
std::vector<ExactFactorization> find_exact_factorizations(const FiniteGroup& e);

// Recovery of the matched pair from an exact factorization: writing
// g h = h' g' uniquely defines g |> h = h' and g <| h = g'. The recovered
// pair is validated, and theta(h, g) = h*g is verified to be a group
// isomorphism from the rebuilt product onto E.
struct RecoveredPair {
  MatchedPair mp;          // on abstract copies of H and G
  std::vector<int> h_map;  // local H index -> element of E
  std::vector<int> g_map;  // local G index -> element of E
  std::vector<int> theta;  // product element (h,g) -> element of E
  bool verified;
};
RecoveredPair recover_matched_pair(const ExactFactorization& f);

}  // namespace bicross
