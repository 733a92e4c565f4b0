#include "bicross/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "bicross/bicrossed.hpp"

namespace bicross {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod_inverse(int a, int mod) {
  // extended Euclid on (a mod m, m)
  int r0 = mod, r1 = ((a % mod) + mod) % mod;
  int s0 = 0, s1 = 1;
  while (r1 != 0) {
    const int q = r0 / r1;
    int tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1)
    throw Error(ErrorCode::InvalidParameter,
                std::to_string(a) + " is not invertible mod " + std::to_string(mod));
  return ((s0 % mod) + mod) % mod;
}

int perm_order(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  long long order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = perm[j];
      ++len;
    }
    order = std::lcm(order, static_cast<long long>(len));
  }
  return static_cast<int>(order);
}

namespace {

long long checked_factorial(int k, long long cap) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

void require_positive(int n, int m) {
  if (n < 1 || m < 1)
    throw Error(ErrorCode::InvalidParameter, "cyclic orders must be >= 1");
}

}  // namespace

std::vector<std::vector<int>> admissible_permutations(int size, int power_to_identity,
                                                      long long budget) {
  if (checked_factorial(size - 1, budget) > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "scanning S(Z_" + std::to_string(size) + ") exceeds the seed budget");
  std::vector<std::vector<int>> out;
  std::vector<int> suffix(std::max(size - 1, 0));
  std::iota(suffix.begin(), suffix.end(), 1);
  std::vector<int> perm(size);
  perm[0] = 0;
  do {
    std::copy(suffix.begin(), suffix.end(), perm.begin() + 1);
    if (power_to_identity % perm_order(perm) == 0) out.push_back(perm);
  } while (std::next_permutation(suffix.begin(), suffix.end()));
  return out;
}

std::vector<CyclicSeed> enumerate_seeds(int n, int m, long long budget) {
  require_positive(n, m);
  auto thetas = admissible_permutations(n, m, budget);
  auto phis = admissible_permutations(m, n, budget);
  const long long pairs = static_cast<long long>(thetas.size()) * phis.size();
  if (pairs > budget)
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(pairs) + " candidate seeds exceed the budget of " +
                    std::to_string(budget));
  std::vector<CyclicSeed> seeds;
  seeds.reserve(static_cast<size_t>(pairs));
  for (const auto& theta : thetas)
    for (const auto& phi : phis) seeds.push_back(CyclicSeed{n, m, theta, phi});
  return seeds;
}

namespace {

bool seed_invariants_hold(const CyclicSeed& seed) {
  if (seed.n < 1 || seed.m < 1) return false;
  if (static_cast<int>(seed.theta.size()) != seed.n ||
      static_cast<int>(seed.phi.size()) != seed.m)
    return false;
  auto is_perm_fixing_zero = [](const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
      seen[v] = 1;
    }
    return p[0] == 0;
  };
  if (!is_perm_fixing_zero(seed.theta) || !is_perm_fixing_zero(seed.phi)) return false;
  return seed.m % perm_order(seed.theta) == 0 && seed.n % perm_order(seed.phi) == 0;
}

// powers[k] = perm^k for k in 0..count-1, flattened row-major
std::vector<int> permutation_powers(const std::vector<int>& perm, int count) {
  const int size = static_cast<int>(perm.size());
  std::vector<int> powers(static_cast<size_t>(count) * size);
  for (int x = 0; x < size; ++x) powers[x] = x;
  for (int k = 1; k < count; ++k)
    for (int x = 0; x < size; ++x)
      powers[k * size + x] = perm[powers[(k - 1) * size + x]];
  return powers;
}

// Compatibility conditions in exponent form, all table lookups:
//   (1) theta^k(x1+x2) = theta^k(x1) + theta^(phi^x1(k))(x2)   (mod n)
//   (2) phi^x(k1+k2)   = phi^(theta^k2(x))(k1) + phi^x(k2)     (mod m)
bool seed_pair_compatible(int n, int m, const int* tp, const int* pp) {
  for (int k = 0; k < m; ++k)
    for (int x1 = 0; x1 < n; ++x1) {
      const int tkx1 = tp[k * n + x1];
      const int krot = pp[x1 * m + k];
      for (int x2 = 0; x2 < n; ++x2) {
        int lhs = tp[k * n + (x1 + x2) % n];
        int rhs = tkx1 + tp[krot * n + x2];
        if (rhs >= n) rhs -= n;
        if (lhs != rhs) return false;
      }
    }
  for (int k1 = 0; k1 < m; ++k1)
    for (int k2 = 0; k2 < m; ++k2)
      for (int x = 0; x < n; ++x) {
        int lhs = pp[x * m + (k1 + k2) % m];
        int rhs = pp[tp[k2 * n + x] * m + k1] + pp[x * m + k2];
        if (rhs >= m) rhs -= m;
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

SeedTables expand_seed_tables(const CyclicSeed& seed) {
  if (!seed_invariants_hold(seed))
    throw Error(ErrorCode::InvalidParameter, "seed violates the cyclic-seed invariants");
  const int n = seed.n, m = seed.m;
  const auto tp = permutation_powers(seed.theta, m);
  const auto pp = permutation_powers(seed.phi, n);
  SeedTables tables;
  tables.alpha.resize(static_cast<size_t>(m) * n);
  tables.beta.resize(static_cast<size_t>(m) * n);
  for (int k = 0; k < m; ++k)
    for (int x = 0; x < n; ++x) {
      tables.alpha[k * n + x] = tp[k * n + x];  // b^k |> a^x = a^(theta^k(x))
      tables.beta[k * n + x] = pp[x * m + k];   // b^k <| a^x = b^(phi^x(k))
    }
  return tables;
}

ActionPair expand_seed(const CyclicSeed& seed) {
  auto tables = expand_seed_tables(seed);
  FiniteGroup h = make_cyclic(seed.n), g = make_cyclic(seed.m);
  if (auto defect = check_actions(seed.n, seed.m, g.table(), h.table(), tables.alpha,
                                  tables.beta))
    throw Error(ErrorCode::InternalConsistency,
                "expanded seed tables failed the action axioms");
  return ActionPair{LeftAction{g, h, std::move(tables.alpha)},
                    RightAction{h, g, std::move(tables.beta)}};
}

namespace {

struct SeedScan {
  std::vector<std::vector<int>> thetas, phis;
  std::vector<int> theta_powers, phi_powers;  // per candidate, flattened
  int n = 1, m = 1;

  long long pair_count() const {
    return static_cast<long long>(thetas.size()) * phis.size();
  }
  const int* theta_power(int i) const { return theta_powers.data() + static_cast<size_t>(i) * m * n; }
  const int* phi_power(int i) const { return phi_powers.data() + static_cast<size_t>(i) * n * m; }
};

SeedScan prepare_scan(int n, int m, long long budget) {
  require_positive(n, m);
  SeedScan scan;
  scan.n = n;
  scan.m = m;
  scan.thetas = admissible_permutations(n, m, budget);
  scan.phis = admissible_permutations(m, n, budget);
  if (scan.pair_count() > budget)
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(scan.pair_count()) + " candidate seeds exceed the budget of " +
                    std::to_string(budget));
  scan.theta_powers.resize(scan.thetas.size() * static_cast<size_t>(m) * n);
  for (size_t i = 0; i < scan.thetas.size(); ++i) {
    auto p = permutation_powers(scan.thetas[i], m);
    std::copy(p.begin(), p.end(), scan.theta_powers.begin() + i * static_cast<size_t>(m) * n);
  }
  scan.phi_powers.resize(scan.phis.size() * static_cast<size_t>(n) * m);
  for (size_t i = 0; i < scan.phis.size(); ++i) {
    auto p = permutation_powers(scan.phis[i], n);
    std::copy(p.begin(), p.end(), scan.phi_powers.begin() + i * static_cast<size_t>(n) * m);
  }
  return scan;
}

// Contiguous ranges of the linearized (theta, phi) index space, scanned in
// worker threads and merged in range order: the survivor list is the same
// for every parallelism setting.
std::vector<std::pair<int, int>> scan_compatible(const SeedScan& scan, int parallelism) {
  const long long total = scan.pair_count();
  const int workers = static_cast<int>(
      std::clamp<long long>(std::min<long long>(parallelism, total), 1, 64));
  const long long chunk = (total + workers - 1) / workers;
  std::vector<std::vector<std::pair<int, int>>> found(workers);

  auto run = [&](int w) {
    const long long begin = w * chunk;
    const long long end = std::min<long long>(begin + chunk, total);
    const long long nphis = static_cast<long long>(scan.phis.size());
    for (long long idx = begin; idx < end; ++idx) {
      const int ti = static_cast<int>(idx / nphis);
      const int pi = static_cast<int>(idx % nphis);
      if (seed_pair_compatible(scan.n, scan.m, scan.theta_power(ti), scan.phi_power(pi)))
        found[w].emplace_back(ti, pi);
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  std::vector<std::pair<int, int>> merged;
  for (auto& part : found)
    merged.insert(merged.end(), part.begin(), part.end());
  return merged;
}

}  // namespace

std::vector<CyclicSeed> enumerate_matched_seeds(int n, int m, long long budget,
                                                int parallelism) {
  const SeedScan scan = prepare_scan(n, m, budget);
  std::vector<CyclicSeed> out;
  for (auto [ti, pi] : scan_compatible(scan, parallelism))
    out.push_back(CyclicSeed{n, m, scan.thetas[ti], scan.phis[pi]});
  return out;
}

std::vector<MatchedPair> enumerate_matched_pairs(int n, int m, long long budget,
                                                 int parallelism) {
  const FiniteGroup h = make_cyclic(n), g = make_cyclic(m);
  std::vector<MatchedPair> out;
  for (const auto& seed : enumerate_matched_seeds(n, m, budget, parallelism)) {
    auto tables = expand_seed_tables(seed);
    // survivors go through the table-level validator, which is the
    // authority the fast exponent check must agree with
    out.push_back(validate_matched_pair(h, g, std::move(tables.alpha),
                                        std::move(tables.beta)));
  }
  return out;
}

const char* witness_branch_name(WitnessBranch b) {
  switch (b) {
    case WitnessBranch::NormalH: return "NormalH";
    case WitnessBranch::NormalG: return "NormalG";
    case WitnessBranch::Corrected: return "Corrected";
  }
  return "?";
}

namespace {

int conj_exponent(const FiniteGroup& e, int base, int target, int order) {
  // smallest k in 0..order-1 with base^k = target, -1 if none
  int acc = 0;
  for (int k = 0; k < order; ++k) {
    if (acc == target) return k;
    acc = e.mul(acc, base);
  }
  return -1;
}

}  // namespace

SemidirectWitness witness_decomposition(const FiniteGroup& e, int a, int b, int p,
                                        int m) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  e.require_index(a);
  e.require_index(b);

  const Subgroup sub_a = generated_subgroup(e, {a});
  const Subgroup sub_b = generated_subgroup(e, {b});
  if (sub_a.order() != p || sub_b.order() != m || e.order() != p * m ||
      intersect_subgroups(sub_a, sub_b).order() != 1)
    throw Error(ErrorCode::PreconditionFailure,
                "need |<a>| = p, |<b>| = m, trivial intersection and |E| = p*m");

  auto frobenius_failure = [](const std::string& what) -> Error {
    return Error(ErrorCode::FrobeniusStepFailure, what);
  };

  if (subgroup_predicates(e, sub_a).normal) {
    const int t = conj_exponent(e, a, e.conj(b, a), p);
    if (t < 1) throw frobenius_failure("<a> normal but b a b^-1 is not a power of a");
    SemidirectWitness w;
    w.branch = WitnessBranch::NormalH;
    w.t = t;
    w.a_tilde = a;
    return w;
  }

  if (subgroup_predicates(e, sub_b).normal) {
    const int s = conj_exponent(e, b, e.conj(a, b), m);
    if (s < 1) throw frobenius_failure("<b> normal but a b a^-1 is not a power of b");
    SemidirectWitness w;
    w.branch = WitnessBranch::NormalG;
    w.m_exponent = s;
    return w;
  }

  // Neither factor normal: H = C_m n a C_m a^-1 must be central, and
  // b a b^-1 = a^t c for a unique t in 1..p-1, c in H.
  const Subgroup central_h =
      intersect_subgroups(sub_b, conjugate_subgroup(e, sub_b, a));
  if (!subgroup_predicates(e, central_h).central)
    throw frobenius_failure("C_m n a C_m a^-1 is not central");

  const int target = e.conj(b, a);
  int t = -1, c = -1;
  {
    int a_pow = a;  // a^1
    for (int k = 1; k < p && t < 0; ++k) {
      for (int cand : central_h.elements())
        if (e.mul(a_pow, cand) == target) {
          t = k;
          c = cand;
          break;
        }
      a_pow = e.mul(a_pow, a);
    }
  }
  if (t < 0) throw frobenius_failure("no t, c with b a b^-1 = a^t c");
  if (c == 0) throw frobenius_failure("c = 1 would make <a> normal");
  if (t == 1) throw frobenius_failure("t = 1 would make <b> normal");
  if (e.power(c, p) != 0) throw frobenius_failure("c^p != 1");

  const int u = mod_inverse(t - 1, p);
  const int a_tilde = e.mul(a, e.power(c, u));
  if (e.conj(b, a_tilde) != e.power(a_tilde, t))
    throw frobenius_failure("b a~ b^-1 != a~^t");
  const Subgroup sub_at = generated_subgroup(e, {a_tilde});
  if (sub_at.order() != p) throw frobenius_failure("<a~> does not have order p");
  if (!subgroup_predicates(e, sub_at).normal)
    throw frobenius_failure("<a~> is not normal");
  if (intersect_subgroups(sub_at, sub_b).order() != 1)
    throw frobenius_failure("<a~> meets C_m nontrivially");

  SemidirectWitness w;
  w.branch = WitnessBranch::Corrected;
  w.t = t;
  w.c = c;
  w.u = u;
  w.a_tilde = a_tilde;
  w.central_h = central_h.elements();
  return w;
}

std::vector<SemidirectCandidate> enumerate_semidirects(int p, int m) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require_positive(p, m);
  std::vector<SemidirectCandidate> out;

  auto power_mod = [](long long base, int exp, int mod) {
    long long acc = 1 % mod;
    for (int i = 0; i < exp; ++i) acc = acc * base % mod;
    return static_cast<int>(acc);
  };

  // C_p x| C_m: residues r with r^m = 1 (mod p); b^k acts by x -> r^k x
  const FiniteGroup cp = make_cyclic(p), cm = make_cyclic(m);
  for (int r = 1; r < p; ++r) {
    if (power_mod(r, m, p) != 1) continue;
    std::vector<int> alpha(static_cast<size_t>(m) * p);
    for (int k = 0; k < m; ++k) {
      const long long rk = power_mod(r, k, p);
      for (int x = 0; x < p; ++x) alpha[k * p + x] = static_cast<int>(rk * x % p);
    }
    out.push_back(SemidirectCandidate{
        semidirect_product(cp, cm, LeftAction{cm, cp, std::move(alpha)}), r,
        WitnessBranch::NormalH});
  }
  // C_m x| C_p: units s with s^p = 1 (mod m)
  for (int s = 1; s < m; ++s) {
    if (std::gcd(s, m) != 1 || power_mod(s, p, m) != 1) continue;
    std::vector<int> alpha(static_cast<size_t>(p) * m);
    for (int k = 0; k < p; ++k) {
      const long long sk = power_mod(s, k, m);
      for (int y = 0; y < m; ++y) alpha[k * m + y] = static_cast<int>(sk * y % m);
    }
    out.push_back(SemidirectCandidate{
        semidirect_product(cm, cp, LeftAction{cp, cm, std::move(alpha)}), s,
        WitnessBranch::NormalG});
  }
  return out;
}

TheoremReport verify_main_theorem(int p, int m, long long budget, int parallelism) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime,
                "verify-theorem needs a prime p, got " + std::to_string(p));
  TheoremReport report;
  report.p = p;
  report.m = m;
  report.pairs = enumerate_matched_seeds(p, m, budget, parallelism);

  const auto semis = enumerate_semidirects(p, m);
  const FiniteGroup h = make_cyclic(p), g = make_cyclic(m);

  for (size_t i = 0; i < report.pairs.size(); ++i) {
    auto tables = expand_seed_tables(report.pairs[i]);
    const MatchedPair mp =
        validate_matched_pair(h, g, std::move(tables.alpha), std::move(tables.beta));
    const BicrossedGroup bi = build_bicrossed(mp);
    report.profiles.push_back(order_profile(bi.group));

    bool matched = false;
    for (const auto& cand : semis) {
      IsomorphismCertificate cert = are_isomorphic(bi.group, cand.group);
      if (cert.iso()) {
        report.matches.push_back(TheoremMatch{static_cast<int>(i), cand.residue,
                                              cand.orientation, std::move(cert)});
        matched = true;
        break;
      }
    }
    if (!matched)
      throw Error(ErrorCode::TheoremViolation,
                  "pair " + std::to_string(i) +
                      " has no isomorphic semidirect product; this is an engine bug",
                  {static_cast<int>(i), -1, -1});

    const int a = bi.encode(1, 0);
    const int b = m > 1 ? bi.encode(0, 1) : 0;
    report.witnesses.push_back(witness_decomposition(bi.group, a, b, p, m));
  }

  report.all_matched = report.matches.size() == report.pairs.size() &&
                       report.witnesses.size() == report.pairs.size();
  return report;
}

}  // namespace bicross
