#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "bicross/action.hpp"

namespace bicross::testing {

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::set<ActionTables> oracle_matched_pairs(int n, int m) {
  const FiniteGroup h = make_cyclic(n), g = make_cyclic(m);
  std::set<ActionTables> out;
  const auto thetas = all_permutations(n);
  const auto phis = all_permutations(m);
  std::vector<int> alpha(static_cast<size_t>(m) * n), beta(static_cast<size_t>(m) * n);
  for (const auto& theta : thetas)
    for (const auto& phi : phis) {
      // alpha row k is theta applied k times; beta column x is phi applied
      // x times (representative exponents 0..m-1 / 0..n-1)
      for (int x = 0; x < n; ++x) alpha[x] = x;
      for (int k = 1; k < m; ++k)
        for (int x = 0; x < n; ++x) alpha[k * n + x] = theta[alpha[(k - 1) * n + x]];
      for (int k = 0; k < m; ++k) beta[k * n] = k;
      for (int x = 1; x < n; ++x)
        for (int k = 0; k < m; ++k) beta[k * n + x] = phi[beta[k * n + x - 1]];
      if (!check_matched_pair(h, g, alpha, beta)) out.insert({alpha, beta});
    }
  return out;
}

std::optional<std::vector<int>> oracle_isomorphism(const FiniteGroup& g1,
                                                   const FiniteGroup& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  const int n = g1.order();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  // permute images of 1..n-1, identity pinned to identity
  do {
    bool hom = true;
    for (int x = 0; x < n && hom; ++x)
      for (int y = 0; y < n && hom; ++y)
        hom = f[g1.mul(x, y)] == g2.mul(f[x], f[y]);
    if (hom) return f;
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return std::nullopt;
}

}  // namespace bicross::testing
