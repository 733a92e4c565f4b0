#pragma once

#include <optional>
#include <vector>

#include "bicross/action.hpp"
#include "bicross/group.hpp"
#include "bicross/iso.hpp"

namespace bicross {

// Cap on the number of candidate (theta, phi) pairs a single enumeration
// may scan. Exceeding it raises Error(BudgetExceeded) instead of silently
// truncating. Overridable per call and via the CLI.
inline constexpr long long kDefaultSeedBudget = 10'000'000;

// Actions between cyclic groups C_n = <a> and C_m = <b> are determined by
// one permutation each:
//   alpha(b, a^x) = a^(theta(x))     theta in S(Z_n)
//   beta(b^y, a)  = b^(phi(y))       phi   in S(Z_m)
// A seed is admissible when theta(0) = 0, phi(0) = 0 (forced by the unit
// conditions of a matched pair) and theta^m = id, phi^n = id (forced by
// the action axioms).
struct CyclicSeed {
  int n = 1, m = 1;
  std::vector<int> theta;  // one-line notation over Z_n
  std::vector<int> phi;    // one-line notation over Z_m
};

bool is_prime(int p);
// Extended Euclid; throws Error(InvalidParameter) if gcd(a, mod) != 1.
int mod_inverse(int a, int mod);
int perm_order(const std::vector<int>& perm);

// The per-coordinate candidate lists: permutations of Z_size fixing 0
// whose order divides power_to_identity, in lexicographic one-line order.
std::vector<std::vector<int>> admissible_permutations(int size, int power_to_identity,
                                                      long long budget);

// All admissible seeds in lexicographic (theta, phi) order. Raises
// BudgetExceeded when the candidate-pair count (or a factorial scan)
// exceeds the budget.
std::vector<CyclicSeed> enumerate_seeds(int n, int m,
                                        long long budget = kDefaultSeedBudget);

// alpha(b^k, a^x) = a^(theta^k(x)), beta(b^y, a^j) = b^(phi^j(y)), both
// |G| x |H| = m x n in the engine-wide (g, h) layout.
struct SeedTables {
  std::vector<int> alpha;
  std::vector<int> beta;
};
SeedTables expand_seed_tables(const CyclicSeed& seed);
ActionPair expand_seed(const CyclicSeed& seed);

// Every seed whose expanded tables pass matched-pair validation, seed
// order preserved. The scan partitions across threads by contiguous seed
// ranges and merges in order, so the result does not depend on
// parallelism.
std::vector<MatchedPair> enumerate_matched_pairs(int n, int m,
                                                 long long budget = kDefaultSeedBudget,
                                                 int parallelism = 1);
std::vector<CyclicSeed> enumerate_matched_seeds(int n, int m,
                                                long long budget = kDefaultSeedBudget,
                                                int parallelism = 1);

enum class WitnessBranch { NormalH, NormalG, Corrected };
const char* witness_branch_name(WitnessBranch b);

// Proof trace exhibiting a product C_p |><| C_m as a semidirect product:
//   NormalH:   <a> is already normal; b a b^-1 = a^t.
//   NormalG:   <b> is normal; a b a^-1 = b^s (s in m_exponent).
//   Corrected: neither factor is normal. H = C_m n a C_m a^-1 is central,
//              b a b^-1 = a^t c with c in H, c^p = 1, c != 1, t != 1,
//              u (t-1) = 1 (mod p), and a~ = a c^u generates a normal
//              subgroup of order p meeting C_m trivially with
//              b a~ b^-1 = a~^t.
struct SemidirectWitness {
  WitnessBranch branch = WitnessBranch::NormalH;
  int t = 1;                           // conjugation exponent on a~ (NormalH/Corrected)
  int m_exponent = 1;                  // conjugation exponent on b (NormalG)
  int c = 0;                           // central correction element, identity unless Corrected
  std::optional<int> u;                // Corrected only
  std::optional<int> a_tilde;          // NormalH/Corrected
  std::optional<std::vector<int>> central_h;  // Corrected only: elements of H
};

// Follows the constructive argument branch by branch; every claimed
// property is re-checked against the table and a failure raises
// Error(FrobeniusStepFailure). Preconditions (orders, intersection,
// |E| = p m) raise Error(PreconditionFailure).
SemidirectWitness witness_decomposition(const FiniteGroup& e, int a, int b, int p, int m);

// All semidirect products between C_p and C_m, both orientations:
// residues r with r^m = 1 (mod p) acting on C_p, and units s with
// s^p = 1 (mod m) acting on C_m. Duplicates across parameters retained.
struct SemidirectCandidate {
  FiniteGroup group;
  int residue;
  WitnessBranch orientation;  // NormalH: C_p x| C_m, NormalG: C_m x| C_p
};
std::vector<SemidirectCandidate> enumerate_semidirects(int p, int m);

struct TheoremMatch {
  int pair_index;
  int residue;
  WitnessBranch orientation;
  IsomorphismCertificate certificate;
};

struct TheoremReport {
  int p = 2, m = 1;
  std::vector<CyclicSeed> pairs;        // seeds whose pairs validate
  std::vector<OrderProfile> profiles;   // order profile of each product
  std::vector<TheoremMatch> matches;    // pair -> first isomorphic semidirect
  std::vector<SemidirectWitness> witnesses;
  bool all_matched = false;
};

// For every matched pair (C_p, C_m): build the product, locate an
// isomorphic semidirect product of the same orders, and extract the
// witness decomposition. A pair with no match or no witness raises
// Error(TheoremViolation); that outcome would mean a bug in this
// engine, not a counterexample.
TheoremReport verify_main_theorem(int p, int m, long long budget = kDefaultSeedBudget,
                                  int parallelism = 1);

}  // namespace bicross
