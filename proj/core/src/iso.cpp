#include "bicross/iso.hpp"

#include <algorithm>
#include <map>

namespace bicross {

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.order_profile = order_profile(g);
  fp.center_order = static_cast<int>(center(g).size());
  fp.derived_series_orders = derived_series(g).orders;
  fp.abelian = is_abelian(g);
  return fp;
}

std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in_closure(g.order(), 0);
  in_closure[0] = 1;
  int covered = 1;
  while (covered < g.order()) {
    int next = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!in_closure[x]) {
        next = x;
        break;
      }
    gens.push_back(next);
    const Subgroup closure = generated_subgroup(g, gens);
    std::fill(in_closure.begin(), in_closure.end(), 0);
    for (int x : closure.elements()) in_closure[x] = 1;
    covered = closure.order();
  }
  return gens;
}

namespace {

// Breadth-first construction of every element as (previous element) * (generator),
// so one image per generator determines the whole candidate map.
struct WordTable {
  std::vector<int> bfs_order;  // excludes the identity
  std::vector<int> parent;     // element -> previous element
  std::vector<int> via;        // element -> generator position used
};

WordTable build_word_table(const FiniteGroup& g, const std::vector<int>& gens) {
  WordTable wt;
  wt.parent.assign(g.order(), -1);
  wt.via.assign(g.order(), -1);
  std::vector<int> queue{0};
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  for (size_t i = 0; i < queue.size(); ++i)
    for (size_t s = 0; s < gens.size(); ++s) {
      const int next = g.mul(queue[i], gens[s]);
      if (!seen[next]) {
        seen[next] = 1;
        wt.parent[next] = queue[i];
        wt.via[next] = static_cast<int>(s);
        wt.bfs_order.push_back(next);
        queue.push_back(next);
      }
    }
  return wt;
}

bool propagate_and_verify(const FiniteGroup& g1, const FiniteGroup& g2,
                          const WordTable& wt, const std::vector<int>& gen_images,
                          std::vector<int>& f) {
  const int n = g1.order();
  f.assign(n, -1);
  f[0] = 0;
  std::vector<char> used(n, 0);
  used[0] = 1;
  for (int x : wt.bfs_order) {
    const int img = g2.mul(f[wt.parent[x]], gen_images[wt.via[x]]);
    if (used[img]) return false;  // not injective
    used[img] = 1;
    f[x] = img;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[g1.mul(x, y)] != g2.mul(f[x], f[y])) return false;
  return true;
}

}  // namespace

IsomorphismCertificate are_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) {
  const Fingerprint fp1 = fingerprint(g1), fp2 = fingerprint(g2);
  if (fp1.order != fp2.order) return {std::nullopt, "order"};
  if (fp1.order_profile != fp2.order_profile) return {std::nullopt, "order_profile"};
  if (fp1.center_order != fp2.center_order) return {std::nullopt, "center_order"};
  if (fp1.derived_series_orders != fp2.derived_series_orders)
    return {std::nullopt, "derived_series"};
  if (fp1.abelian != fp2.abelian) return {std::nullopt, "abelian"};

  const std::vector<int> gens = generating_sequence(g1);
  const WordTable wt = build_word_table(g1, gens);

  std::vector<char> central2(g2.order(), 0);
  for (int z : center(g2)) central2[z] = 1;
  std::vector<char> central1(g1.order(), 0);
  for (int z : center(g1)) central1[z] = 1;

  // candidate images per generator, filtered by order and centrality
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t s = 0; s < gens.size(); ++s) {
    const int want_order = element_order(g1, gens[s]);
    const bool want_central = central1[gens[s]] != 0;
    for (int y = 0; y < g2.order(); ++y)
      if (element_order(g2, y) == want_order && (central2[y] != 0) == want_central)
        candidates[s].push_back(y);
    if (candidates[s].empty()) return {std::nullopt, "exhausted-search"};
  }

  std::vector<int> choice(gens.size(), 0);
  std::vector<int> gen_images(gens.size());
  std::vector<int> f;
  // odometer over the candidate lists, ascending, so the first bijection
  // found is deterministic
  while (true) {
    for (size_t s = 0; s < gens.size(); ++s) gen_images[s] = candidates[s][choice[s]];
    if (propagate_and_verify(g1, g2, wt, gen_images, f))
      return {f, ""};
    size_t pos = gens.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < static_cast<int>(candidates[pos].size())) break;
      choice[pos] = 0;
      if (pos == 0) return {std::nullopt, "exhausted-search"};
    }
    if (gens.empty()) return {std::nullopt, "exhausted-search"};
  }
}

std::vector<IsoClass> classify(const std::vector<FiniteGroup>& groups) {
  const int n = static_cast<int>(groups.size());
  std::vector<Fingerprint> fps(n);
  for (int i = 0; i < n; ++i) fps[i] = fingerprint(groups[i]);

  std::vector<IsoClass> classes;
  std::vector<int> class_of(n, -1);
  for (int i = 0; i < n; ++i) {
    for (auto& cls : classes) {
      if (fps[cls.representative] != fps[i]) continue;
      if (are_isomorphic(groups[cls.representative], groups[i]).iso()) {
        cls.members.push_back(i);
        class_of[i] = cls.representative;
        break;
      }
    }
    if (class_of[i] == -1) {
      classes.push_back(IsoClass{i, {i}});
      class_of[i] = i;
    }
  }
  std::sort(classes.begin(), classes.end(), [&](const IsoClass& a, const IsoClass& b) {
    const Fingerprint &fa = fps[a.representative], &fb = fps[b.representative];
    if (fa.order != fb.order) return fa.order < fb.order;
    if (fa.order_profile != fb.order_profile) return fa.order_profile < fb.order_profile;
    return a.representative < b.representative;
  });
  return classes;
}

}  // namespace bicross
