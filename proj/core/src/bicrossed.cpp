#include "bicross/bicrossed.hpp"

#include <algorithm>
#include <string>

namespace bicross {

std::vector<int> bicrossed_table(const FiniteGroup& H, const FiniteGroup& G,
                                 const std::vector<int>& alpha,
                                 const std::vector<int>& beta) {
  const int nh = H.order(), ng = G.order(), n = nh * ng;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int g1 = 0; g1 < ng; ++g1) {
      const int row = (h1 * ng + g1) * n;
      for (int h2 = 0; h2 < nh; ++h2) {
        const int hpart = H.mul(h1, alpha[g1 * nh + h2]);
        const int gleft = beta[g1 * nh + h2];
        for (int g2 = 0; g2 < ng; ++g2)
          table[row + h2 * ng + g2] = hpart * ng + G.mul(gleft, g2);
      }
    }
  return table;
}

namespace {

std::vector<std::string> product_labels(const FiniteGroup& H, const FiniteGroup& G) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(H.order()) * G.order());
  for (int h = 0; h < H.order(); ++h)
    for (int g = 0; g < G.order(); ++g)
      labels.push_back("a^" + std::to_string(h) + " b^" + std::to_string(g));
  return labels;
}

[[noreturn]] void internal_error(const std::string& what, Witness w = kNoWitness) {
  throw Error(ErrorCode::InternalConsistency, what, w);
}

}  // namespace

BicrossedGroup build_bicrossed(const MatchedPair& mp) {
  const FiniteGroup& H = mp.H;
  const FiniteGroup& G = mp.G;
  const int nh = H.order(), ng = G.order(), n = nh * ng;
  if (n > kMaxOrder)
    throw Error(ErrorCode::InvalidParameter,
                "product order " + std::to_string(n) + " exceeds table cap");

  auto table = bicrossed_table(H, G, mp.alpha, mp.beta);
  if (auto defect = check_group_table(table, n))
    throw Error(ErrorCode::InvalidMatchedPair,
                std::string("product table violates group axioms (") +
                    error_code_name(defect->code) + "); the input is not a matched pair",
                defect->witness);

  BicrossedGroup bi{FiniteGroup::unchecked(n, std::move(table), product_labels(H, G)),
                    mp};

  // inverse formula (h,g)^-1 = (g^-1 |> h^-1, (g <| (g^-1 |> h^-1))^-1)
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g) {
      const int k = mp.left(G.inv(g), H.inv(h));
      const int formula = bi.encode(k, G.inv(mp.right(g, k)));
      if (formula != bi.group.inv(bi.encode(h, g)))
        internal_error("inverse formula mismatch", {h, g, -1});
    }

  // unique factorization (h,g) = (h,1)(1,g)
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g)
      if (bi.group.mul(bi.embed_h(h), bi.embed_g(g)) != bi.encode(h, g))
        internal_error("unique factorization identity failed", {h, g, -1});

  // iH, iG are injective homomorphisms (H x {1} and {1} x G subgroups)
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y)
      if (bi.group.mul(bi.embed_h(x), bi.embed_h(y)) != bi.embed_h(H.mul(x, y)))
        internal_error("iH is not a homomorphism", {x, y, -1});
  for (int x = 0; x < ng; ++x)
    for (int y = 0; y < ng; ++y)
      if (bi.group.mul(bi.embed_g(x), bi.embed_g(y)) != bi.embed_g(G.mul(x, y)))
        internal_error("iG is not a homomorphism", {x, y, -1});

  return bi;
}

FiniteGroup semidirect_product(const FiniteGroup& H, const FiniteGroup& G,
                               const LeftAction& alpha) {
  const int nh = H.order(), ng = G.order(), n = nh * ng;
  if (static_cast<int>(alpha.table.size()) != ng * nh)
    throw Error(ErrorCode::ShapeMismatch, "action table shape mismatch");
  if (auto defect = check_actions(nh, ng, G.table(), H.table(), alpha.table,
                                  [&] {  // trivial beta for the axiom check
                                    std::vector<int> b(static_cast<size_t>(ng) * nh);
                                    for (int g = 0; g < ng; ++g)
                                      for (int h = 0; h < nh; ++h) b[g * nh + h] = g;
                                    return b;
                                  }()))
    throw Error(defect->code, "alpha is not a left action", defect->witness);
  for (int g = 0; g < ng; ++g)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int h2 = 0; h2 < nh; ++h2)
        if (alpha.table[g * nh + H.mul(h1, h2)] !=
            H.mul(alpha.table[g * nh + h1], alpha.table[g * nh + h2]))
          throw Error(ErrorCode::NotAutomorphismAction,
                      "element " + std::to_string(g) + " does not act multiplicatively",
                      {g, h1, h2});

  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int g1 = 0; g1 < ng; ++g1) {
      const int row = (h1 * ng + g1) * n;
      for (int h2 = 0; h2 < nh; ++h2) {
        const int hpart = H.mul(h1, alpha.table[g1 * nh + h2]);
        for (int g2 = 0; g2 < ng; ++g2)
          table[row + h2 * ng + g2] = hpart * ng + G.mul(g1, g2);
      }
    }
  return FiniteGroup::unchecked(n, std::move(table), product_labels(H, G));
}

namespace {

bool is_bijection(const std::vector<int>& f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

ChiXiResult chi_xi_isomorphisms(const MatchedPair& mp) {
  BicrossedGroup fwd = build_bicrossed(mp);
  BicrossedGroup rev = build_bicrossed(reverse_matched_pair(mp));
  const FiniteGroup& H = mp.H;
  const FiniteGroup& G = mp.G;
  const int n = fwd.group.order();

  std::vector<int> chi(n), xi(n);
  for (int h = 0; h < H.order(); ++h)
    for (int g = 0; g < G.order(); ++g) {
      chi[fwd.encode(h, g)] = rev.encode(G.inv(g), H.inv(h));
      const int k = mp.left(G.inv(g), H.inv(h));  // g^-1 |> h^-1
      xi[fwd.encode(h, g)] = rev.encode(mp.right(g, k), H.inv(k));
    }

  // chi is an isomorphism from the opposite group: chi(y x) = chi(x) chi(y)
  if (!is_bijection(chi, n)) internal_error("chi is not a bijection");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (chi[fwd.group.mul(y, x)] != rev.group.mul(chi[x], chi[y]))
        internal_error("chi is not an antihomomorphism", {x, y, -1});

  if (!is_bijection(xi, n)) internal_error("xi is not a bijection");
  if (!is_homomorphism(fwd.group, rev.group, xi))
    internal_error("xi is not a homomorphism");

  return ChiXiResult{std::move(chi), std::move(xi), std::move(rev), true};
}

std::vector<int> induced_morphism(const MatchedPair& from, const MatchedPair& to,
                                  const std::vector<int>& f_h,
                                  const std::vector<int>& f_g) {
  if (!matched_pair_morphism(from, to, f_h, f_g))
    throw Error(ErrorCode::NotAMorphism, "(fH, fG) is not a matched-pair morphism");
  BicrossedGroup src = build_bicrossed(from);
  BicrossedGroup dst = build_bicrossed(to);
  std::vector<int> w(src.group.order());
  for (int h = 0; h < from.H.order(); ++h)
    for (int g = 0; g < from.G.order(); ++g)
      w[src.encode(h, g)] = dst.encode(f_h[h], f_g[g]);
  if (!is_homomorphism(src.group, dst.group, w))
    internal_error("induced map failed the homomorphism check");
  return w;
}

namespace {

void require_map_into(const std::vector<int>& f, int domain, int codomain,
                      const char* name) {
  if (static_cast<int>(f.size()) != domain)
    throw Error(ErrorCode::ShapeMismatch, std::string(name) + " has wrong domain size");
  for (int v : f)
    if (v < 0 || v >= codomain)
      throw Error(ErrorCode::ShapeMismatch, std::string(name) + " image out of range");
}

}  // namespace

std::vector<int> mediating_from(const BicrossedGroup& bi, const FiniteGroup& X,
                                const std::vector<int>& u, const std::vector<int>& v) {
  const MatchedPair& mp = bi.pair;
  require_map_into(u, mp.H.order(), X.order(), "u");
  require_map_into(v, mp.G.order(), X.order(), "v");
  if (!is_homomorphism(mp.H, X, u))
    throw Error(ErrorCode::NotHomomorphism, "u is not a homomorphism");
  if (!is_homomorphism(mp.G, X, v))
    throw Error(ErrorCode::NotHomomorphism, "v is not a homomorphism");

  // v(g) u(h) = u(g |> h) v(g <| h)
  for (int g = 0; g < mp.G.order(); ++g)
    for (int h = 0; h < mp.H.order(); ++h)
      if (X.mul(v[g], u[h]) != X.mul(u[mp.left(g, h)], v[mp.right(g, h)]))
        throw Error(ErrorCode::IncompatiblePair,
                    "u, v violate the mediating compatibility at (g=" +
                        std::to_string(g) + ", h=" + std::to_string(h) + ")",
                    {g, h, -1});

  std::vector<int> w(bi.group.order());
  for (int h = 0; h < mp.H.order(); ++h)
    for (int g = 0; g < mp.G.order(); ++g) w[bi.encode(h, g)] = X.mul(u[h], v[g]);

  if (!satisfies_mediating_from(bi, X, u, v, w))
    internal_error("mediating map w = u*v failed verification");
  return w;
}

std::vector<int> mediating_from(const MatchedPair& mp, const FiniteGroup& X,
                                const std::vector<int>& u, const std::vector<int>& v) {
  return mediating_from(build_bicrossed(mp), X, u, v);
}

bool satisfies_mediating_from(const BicrossedGroup& bi, const FiniteGroup& X,
                              const std::vector<int>& u, const std::vector<int>& v,
                              const std::vector<int>& candidate) {
  if (static_cast<int>(candidate.size()) != bi.group.order()) return false;
  for (int val : candidate)
    if (val < 0 || val >= X.order()) return false;
  if (!is_homomorphism(bi.group, X, candidate)) return false;
  for (int h = 0; h < bi.h_order(); ++h)
    if (candidate[bi.embed_h(h)] != u[h]) return false;
  for (int g = 0; g < bi.g_order(); ++g)
    if (candidate[bi.embed_g(g)] != v[g]) return false;
  return true;
}

std::vector<int> mediating_to(const BicrossedGroup& bi, const FiniteGroup& X,
                              const std::vector<int>& u, const std::vector<int>& v) {
  const MatchedPair& mp = bi.pair;
  require_map_into(u, X.order(), mp.H.order(), "u");
  require_map_into(v, X.order(), mp.G.order(), "v");

  // u(xy) = u(x)(v(x) |> u(y))  and  v(xy) = (v(x) <| u(y)) v(y)
  for (int x = 0; x < X.order(); ++x)
    for (int y = 0; y < X.order(); ++y) {
      const int xy = X.mul(x, y);
      if (u[xy] != mp.H.mul(u[x], mp.left(v[x], u[y])) ||
          v[xy] != mp.G.mul(mp.right(v[x], u[y]), v[y]))
        throw Error(ErrorCode::IncompatiblePair,
                    "u, v violate the factorization identities at (x=" +
                        std::to_string(x) + ", y=" + std::to_string(y) + ")",
                    {x, y, -1});
    }

  std::vector<int> w(X.order());
  for (int x = 0; x < X.order(); ++x) w[x] = bi.encode(u[x], v[x]);
  if (!satisfies_mediating_to(bi, X, u, v, w))
    internal_error("mediating map w = (u, v) failed verification");
  return w;
}

std::vector<int> mediating_to(const MatchedPair& mp, const FiniteGroup& X,
                              const std::vector<int>& u, const std::vector<int>& v) {
  return mediating_to(build_bicrossed(mp), X, u, v);
}

bool satisfies_mediating_to(const BicrossedGroup& bi, const FiniteGroup& X,
                            const std::vector<int>& u, const std::vector<int>& v,
                            const std::vector<int>& candidate) {
  if (static_cast<int>(candidate.size()) != X.order()) return false;
  for (int val : candidate)
    if (val < 0 || val >= bi.group.order()) return false;
  if (!is_homomorphism(X, bi.group, candidate)) return false;
  for (int x = 0; x < X.order(); ++x) {
    if (bi.project_h(candidate[x]) != u[x]) return false;
    if (bi.project_g(candidate[x]) != v[x]) return false;
  }
  return true;
}

}  // namespace bicross
