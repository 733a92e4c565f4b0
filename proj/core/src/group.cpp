#include "bicross/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bicross {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NonBijectiveRow: return "NonBijectiveRow";
    case ErrorCode::NonBijectiveColumn: return "NonBijectiveColumn";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::Compat1Violation: return "Compat1Violation";
    case ErrorCode::Compat2Violation: return "Compat2Violation";
    case ErrorCode::InvalidMatchedPair: return "InvalidMatchedPair";
    case ErrorCode::NotAutomorphismAction: return "NotAutomorphismAction";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::IncompatiblePair: return "IncompatiblePair";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::NotExactFactorization: return "NotExactFactorization";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::PreconditionFailure: return "PreconditionFailure";
    case ErrorCode::FrobeniusStepFailure: return "FrobeniusStepFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

FiniteGroup::FiniteGroup() : order_(1), table_{0}, inverse_{0} {}

int FiniteGroup::power(int x, long long k) const {
  require_index(x);
  int n = element_order(*this, x);
  long long e = k % n;
  if (e < 0) e += n;
  int acc = 0;
  for (long long i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(order_);
  for (int i = 0; i < order_; ++i)
    rows[i].assign(table_.begin() + i * order_, table_.begin() + (i + 1) * order_);
  return rows;
}

std::string FiniteGroup::label(int x) const {
  require_index(x);
  if (x < static_cast<int>(labels_.size())) return labels_[x];
  return "e" + std::to_string(x);
}

void FiniteGroup::require_index(int x) const {
  if (x < 0 || x >= order_)
    throw Error(ErrorCode::IndexOutOfRange,
                "element index " + std::to_string(x) + " out of range for order " +
                    std::to_string(order_),
                {x, -1, -1});
}

FiniteGroup FiniteGroup::unchecked(int order, std::vector<int> table,
                                   std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.inverse_.assign(order, 0);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (g.table_[x * order + y] == 0) {
        g.inverse_[x] = y;
        break;
      }
    }
  }
  return g;
}

std::optional<GroupDefect> check_group_table(const std::vector<int>& table, int order) {
  const int n = order;
  if (n <= 0 || static_cast<int>(table.size()) != n * n)
    return GroupDefect{ErrorCode::InvalidParameter, kNoWitness};
  for (int v : table)
    if (v < 0 || v >= n) return GroupDefect{ErrorCode::IndexOutOfRange, kNoWitness};

  // identity at index 0
  for (int j = 0; j < n; ++j)
    if (table[j] != j) return GroupDefect{ErrorCode::NotUnital, {0, j, -1}};
  for (int i = 0; i < n; ++i)
    if (table[i * n] != i) return GroupDefect{ErrorCode::NotUnital, {i, 0, -1}};

  // two-sided inverse: some y with xy = yx = identity
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      found = table[x * n + y] == 0 && table[y * n + x] == 0;
    if (!found) return GroupDefect{ErrorCode::NoInverse, {x, -1, -1}};
  }

  // rows and columns are permutations
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = table[i * n + j];
      if (seen[v]) return GroupDefect{ErrorCode::NonBijectiveRow, {i, j, v}};
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = table[i * n + j];
      if (seen[v]) return GroupDefect{ErrorCode::NonBijectiveColumn, {i, j, v}};
      seen[v] = 1;
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ij = table[i * n + j];
      for (int k = 0; k < n; ++k)
        if (table[ij * n + k] != table[i * n + table[j * n + k]])
          return GroupDefect{ErrorCode::NonAssociative, {i, j, k}};
    }
  return std::nullopt;
}

FiniteGroup validate_group_flat(std::vector<int> table, int order,
                                std::vector<std::string> labels) {
  if (order < 1 || order > kMaxOrder)
    throw Error(ErrorCode::InvalidParameter,
                "group order must be in 1.." + std::to_string(kMaxOrder) + ", got " +
                    std::to_string(order));
  if (auto defect = check_group_table(table, order)) {
    const auto& w = defect->witness;
    std::string msg = std::string(error_code_name(defect->code)) + " at (" +
                      std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                      std::to_string(w[2]) + ")";
    throw Error(defect->code, msg, w);
  }
  return FiniteGroup::unchecked(order, std::move(table), std::move(labels));
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& rows,
                           std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::ShapeMismatch, "Cayley table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_group_flat(std::move(flat), n, std::move(labels));
}

FiniteGroup make_cyclic(int n) {
  if (n < 1)
    throw Error(ErrorCode::InvalidParameter, "cyclic group order must be >= 1");
  if (n > kMaxOrder)
    throw Error(ErrorCode::InvalidParameter,
                "cyclic group order exceeds table cap " + std::to_string(kMaxOrder));
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "a^" + std::to_string(i);
  return FiniteGroup::unchecked(n, std::move(table), std::move(labels));
}

int element_order(const FiniteGroup& g, int x) {
  g.require_index(x);
  int k = 1;
  int acc = x;
  while (acc != 0) {
    acc = g.mul(acc, x);
    ++k;
  }
  return k;
}

OrderProfile order_profile(const FiniteGroup& g) {
  OrderProfile profile(g.order());
  for (int x = 0; x < g.order(); ++x) profile[x] = element_order(g, x);
  std::sort(profile.begin(), profile.end());
  return profile;
}

bool is_abelian(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<int> elements)
    : parent_(&parent), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!is_subgroup(parent, elements_))
    throw Error(ErrorCode::NotASubgroup, "index set is not a subgroup");
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  for (int x : elements)
    if (x < 0 || x >= g.order()) return false;
  if (!std::binary_search(elements.begin(), elements.end(), 0)) return false;
  for (int x : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), g.inv(x))) return false;
    for (int y : elements)
      if (!std::binary_search(elements.begin(), elements.end(), g.mul(x, y)))
        return false;
  }
  return true;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
  for (int x : generators) g.require_index(x);
  std::vector<char> in(g.order(), 0);
  std::vector<int> frontier{0};
  in[0] = 1;
  for (int x : generators)
    if (!in[x]) {
      in[x] = 1;
      frontier.push_back(x);
    }
  // right-multiplication closure reaches every word in the generators
  for (size_t i = 0; i < frontier.size(); ++i)
    for (int s : generators) {
      int p = g.mul(frontier[i], s);
      if (!in[p]) {
        in[p] = 1;
        frontier.push_back(p);
      }
    }
  std::vector<int> elements;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) elements.push_back(x);
  return Subgroup(g, std::move(elements));
}

static void require_same_parent(const FiniteGroup& g, const Subgroup& h) {
  if (&h.parent() != &g)
    throw Error(ErrorCode::NotASubgroup, "subgroup belongs to a different parent group");
}

SubgroupFlags subgroup_predicates(const FiniteGroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  SubgroupFlags flags{true, true};
  for (int x = 0; x < g.order() && flags.normal; ++x)
    for (int e : h.elements())
      if (!h.contains(g.conj(x, e))) {
        flags.normal = false;
        break;
      }
  for (int e : h.elements()) {
    if (!flags.central) break;
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(e, x) != g.mul(x, e)) {
        flags.central = false;
        break;
      }
  }
  return flags;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int x) {
  require_same_parent(g, h);
  g.require_index(x);
  std::vector<int> elements;
  elements.reserve(h.elements().size());
  for (int e : h.elements()) elements.push_back(g.conj(x, e));
  return Subgroup(g, std::move(elements));
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent())
    throw Error(ErrorCode::NotASubgroup, "subgroups of different parent groups");
  std::vector<int> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return Subgroup(a.parent(), std::move(common));
}

ConjugateIntersect conjugate_and_intersect(const FiniteGroup& g, const Subgroup& h1,
                                           int x, const Subgroup& h2) {
  return ConjugateIntersect{conjugate_subgroup(g, h1, x), intersect_subgroups(h1, h2)};
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  require_same_parent(g, n);
  if (!subgroup_predicates(g, n).normal)
    throw Error(ErrorCode::NotNormal, "quotient requires a normal subgroup");

  // Name each coset by its smallest member; identity coset gets index 0.
  std::vector<int> coset_min(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    int least = g.order();
    for (int e : n.elements()) least = std::min(least, g.mul(x, e));
    coset_min[x] = least;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x)
    if (coset_min[x] == x) reps.push_back(x);

  std::vector<int> projection(g.order());
  for (int x = 0; x < g.order(); ++x) {
    auto it = std::lower_bound(reps.begin(), reps.end(), coset_min[x]);
    projection[x] = static_cast<int>(it - reps.begin());
  }

  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a * q + b] = projection[g.mul(reps[a], reps[b])];
  std::vector<std::string> labels(q);
  for (int a = 0; a < q; ++a) labels[a] = g.label(reps[a]) + "N";
  return QuotientResult{FiniteGroup::unchecked(q, std::move(table), std::move(labels)),
                        std::move(projection)};
}

static Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> gens;
  std::vector<char> seen(g.order(), 0);
  for (int x : h.elements())
    for (int y : h.elements()) {
      int c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return generated_subgroup(g, gens);
}

DerivedSeriesResult derived_series(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  Subgroup current(g, std::move(all));
  DerivedSeriesResult result{{current.order()}, false};
  while (true) {
    Subgroup next = commutator_subgroup(g, current);
    if (next.order() == current.order()) break;  // stabilized
    result.orders.push_back(next.order());
    current = next;
    if (current.order() == 1) break;
  }
  result.solvable = result.orders.back() == 1;
  return result;
}

SubgroupCopy subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  require_same_parent(g, h);
  const auto& elems = h.elements();
  const int n = static_cast<int>(elems.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < n; ++i) local[elems[i]] = i;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = local[g.mul(elems[i], elems[j])];
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = g.label(elems[i]);
  return SubgroupCopy{FiniteGroup::unchecked(n, std::move(table), std::move(labels)),
                      elems};
}

}  // namespace bicross
