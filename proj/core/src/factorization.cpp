#include "bicross/factorization.hpp"

#include <algorithm>
#include <set>

#include "bicross/bicrossed.hpp"

namespace bicross {

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  // cyclic subgroups first, then joins of two of them
  std::vector<std::vector<int>> cyclic;
  for (int x = 0; x < g.order(); ++x) {
    auto s = generated_subgroup(g, {x}).elements();
    if (seen.insert(s).second) cyclic.push_back(s);
  }
  for (size_t i = 0; i < cyclic.size(); ++i)
    for (size_t j = i + 1; j < cyclic.size(); ++j) {
      std::vector<int> gens = cyclic[i];
      gens.insert(gens.end(), cyclic[j].begin(), cyclic[j].end());
      seen.insert(generated_subgroup(g, gens).elements());
    }

  std::vector<std::vector<int>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto& elems : sorted) out.emplace_back(g, std::move(elems));
  return out;
}

std::vector<ExactFactorization> find_exact_factorizations(const FiniteGroup& e) {
  auto subgroups = enumerate_subgroups(e);
  std::vector<ExactFactorization> out;
  for (const auto& h : subgroups)
    for (const auto& g : subgroups) {
      if (h.order() * g.order() != e.order()) continue;
      if (intersect_subgroups(h, g).order() != 1) continue;
      // |H||G| = |E| and trivial intersection already force unique
      // factorization; no further scan needed.
      out.push_back(ExactFactorization{&e, h, g});
    }
  return out;
}

RecoveredPair recover_matched_pair(const ExactFactorization& f) {
  const FiniteGroup& e = *f.parent;
  const int nh = f.H.order(), ng = f.G.order();
  if (nh * ng != e.order() || intersect_subgroups(f.H, f.G).order() != 1)
    throw Error(ErrorCode::NotExactFactorization,
                "|H||G| != |E| or the intersection is nontrivial");

  SubgroupCopy hc = subgroup_as_group(e, f.H);
  SubgroupCopy gc = subgroup_as_group(e, f.G);

  // factor every element of E uniquely as h*g
  std::vector<int> factor_h(e.order(), -1), factor_g(e.order(), -1);
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g) {
      const int prod = e.mul(hc.to_parent[h], gc.to_parent[g]);
      if (factor_h[prod] != -1)
        throw Error(ErrorCode::NotExactFactorization,
                    "element " + std::to_string(prod) + " factors twice", {prod, -1, -1});
      factor_h[prod] = h;
      factor_g[prod] = g;
    }
  for (int x = 0; x < e.order(); ++x)
    if (factor_h[x] == -1)
      throw Error(ErrorCode::NotExactFactorization,
                  "element " + std::to_string(x) + " has no factorization", {x, -1, -1});

  // g h = (g |> h)(g <| h) defines both action tables
  std::vector<int> alpha(static_cast<size_t>(ng) * nh), beta(static_cast<size_t>(ng) * nh);
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h) {
      const int prod = e.mul(gc.to_parent[g], hc.to_parent[h]);
      alpha[g * nh + h] = factor_h[prod];
      beta[g * nh + h] = factor_g[prod];
    }

  MatchedPair mp = validate_matched_pair(hc.group, gc.group, std::move(alpha),
                                         std::move(beta));

  // theta(h, g) = h*g must be an isomorphism from the rebuilt product to E
  BicrossedGroup product = build_bicrossed(mp);
  std::vector<int> theta(product.group.order());
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g)
      theta[product.encode(h, g)] = e.mul(hc.to_parent[h], gc.to_parent[g]);

  std::vector<char> hit(e.order(), 0);
  for (int x : theta) hit[x] = 1;
  bool bijective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  if (!bijective || !is_homomorphism(product.group, e, theta))
    throw Error(ErrorCode::InternalConsistency,
                "theta(h, g) = h*g failed the isomorphism check");

  return RecoveredPair{std::move(mp), hc.to_parent, gc.to_parent, std::move(theta), true};
}

}  // namespace bicross
