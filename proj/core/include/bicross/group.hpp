#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicross/errors.hpp"

namespace bicross {

// Hard cap on group order. All algorithms here are exhaustive scans over
// dense N x N tables, which stays cheap well past anything the cyclic
// enumeration produces.
inline constexpr int kMaxOrder = 512;

// First violated group axiom found in a candidate table, with the smallest
// witness indices in scan order. Empty optional from check_group_table
// means the table is a group.
struct GroupDefect {
  ErrorCode code;
  Witness witness;
};

// A finite group as a validated Cayley table over element indices 0..N-1.
// Index 0 is always the identity. Immutable after construction and safe to
// share across threads.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  int order() const noexcept { return order_; }
  int mul(int x, int y) const { return table_[x * order_ + y]; }
  int inv(int x) const { return inverse_[x]; }
  // x y x^-1
  int conj(int x, int y) const { return mul(mul(x, y), inv(x)); }
  int power(int x, long long k) const;

  const std::vector<int>& table() const noexcept { return table_; }
  std::vector<std::vector<int>> table_rows() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(int x) const;

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

  void require_index(int x) const;

  // Trusted constructor for tables that are groups by construction
  // (cyclic groups, quotients, subgroup copies). Inverses are still
  // derived from the table.
  static FiniteGroup unchecked(int order, std::vector<int> table,
                               std::vector<std::string> labels = {});

 private:
  int order_;
  std::vector<int> table_;    // row-major N*N
  std::vector<int> inverse_;  // two-sided inverse per element
  std::vector<std::string> labels_;
};

// Scans unit row/column, row and column bijectivity, associativity and
// inverses, in that order. Returns the first defect or nothing.
std::optional<GroupDefect> check_group_table(const std::vector<int>& table, int order);

// Entry point for externally supplied tables: verifies every group axiom
// and throws Error(NotUnital | NonBijectiveRow | NonBijectiveColumn |
// NonAssociative | NoInverse) with witness indices on the first violation.
FiniteGroup validate_group(const std::vector<std::vector<int>>& rows,
                           std::vector<std::string> labels = {});
FiniteGroup validate_group_flat(std::vector<int> table, int order,
                                std::vector<std::string> labels = {});

// Cyclic group C_n with table[i][j] = (i+j) mod n and labels "a^i".
FiniteGroup make_cyclic(int n);

// Smallest k >= 1 with x^k = identity.
int element_order(const FiniteGroup& g, int x);

// Sorted multiset of element orders; an isomorphism invariant.
using OrderProfile = std::vector<int>;
OrderProfile order_profile(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);

// Elements commuting with the whole group, sorted.
std::vector<int> center(const FiniteGroup& g);

// A subgroup stored as a sorted index set plus parent reference. Equality
// is set equality within the same parent. The parent group must outlive
// the subgroup.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<int> elements);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const std::vector<int>& elements() const noexcept { return elements_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(int x) const;
  bool is_trivial() const { return elements_.size() == 1; }

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }

 private:
  const FiniteGroup* parent_;
  std::vector<int> elements_;  // sorted, always contains 0
};

// Closure of S (plus the identity) under multiplication; inverses come for
// free in a finite group.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);

// Verifies the subgroup axioms for an arbitrary index set.
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

struct SubgroupFlags {
  bool normal;
  bool central;
};
SubgroupFlags subgroup_predicates(const FiniteGroup& g, const Subgroup& h);

// x H x^-1; same order as H.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int x);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);

struct ConjugateIntersect {
  Subgroup conjugate;
  Subgroup intersection;
};
ConjugateIntersect conjugate_and_intersect(const FiniteGroup& g, const Subgroup& h1,
                                           int x, const Subgroup& h2);

// G/N with coset multiplication. Cosets are indexed by their smallest
// member, in increasing order, so the identity coset is index 0.
// projection[x] is the coset index of x; it is a surjective homomorphism
// with kernel N. Throws Error(NotNormal) if N is not normal.
struct QuotientResult {
  FiniteGroup group;
  std::vector<int> projection;
};
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

// Iterated commutator subgroups until stabilization, reported as orders
// starting from |G|. solvable iff the series reaches the trivial subgroup.
struct DerivedSeriesResult {
  std::vector<int> orders;
  bool solvable;
};
DerivedSeriesResult derived_series(const FiniteGroup& g);

// Abstract copy of a subgroup: a FiniteGroup on local indices 0..|H|-1
// (sorted element order, so identity stays at 0) plus the local -> parent
// index map.
struct SubgroupCopy {
  FiniteGroup group;
  std::vector<int> to_parent;
};
SubgroupCopy subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

}  // namespace bicross
