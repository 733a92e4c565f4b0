#pragma once

#include <vector>

#include "bicross/action.hpp"
#include "bicross/group.hpp"

namespace bicross {

// The product group on H x G with multiplication
//   (h1, g1) (h2, g2) = (h1 (g1 |> h2), (g1 <| h2) g2)
// Elements are encoded row-major: (h, g) -> h*|G| + g, which makes the
// unique factorization (h, g) = (h, 1)(1, g) an index identity.
struct BicrossedGroup {
  FiniteGroup group;
  MatchedPair pair;

  int h_order() const { return pair.H.order(); }
  int g_order() const { return pair.G.order(); }

  int encode(int h, int g) const { return h * g_order() + g; }
  int project_h(int e) const { return e / g_order(); }  // pH
  int project_g(int e) const { return e % g_order(); }  // pG
  int embed_h(int h) const { return encode(h, 0); }     // iH
  int embed_g(int g) const { return encode(0, g); }     // iG
};

// Raw product table, no validation. The table is a group exactly when
// (H, G, alpha, beta) is a matched pair, which is what the construction
// tests exploit in both directions.
std::vector<int> bicrossed_table(const FiniteGroup& H, const FiniteGroup& G,
                                 const std::vector<int>& alpha,
                                 const std::vector<int>& beta);

// Builds H |><| G and re-validates everything: the group axioms of the
// table (throws Error(InvalidMatchedPair) with the defect witness if the
// caller bypassed pair validation), the inverse formula
//   (h, g)^-1 = (g^-1 |> h^-1, (g <| (g^-1 |> h^-1))^-1),
// unique factorization, and that iH, iG are injective homomorphisms.
BicrossedGroup build_bicrossed(const MatchedPair& mp);

// Semidirect product H x| G for an action by automorphisms:
//   (h1, g1)(h2, g2) = (h1 (g1 |> h2), g1 g2).
// Throws Error(NotAutomorphismAction) with the offending g if some g does
// not act multiplicatively. Element-for-element equal to build_bicrossed
// with trivial beta.
FiniteGroup semidirect_product(const FiniteGroup& H, const FiniteGroup& G,
                               const LeftAction& alpha);

// chi : (H |><| G)^op -> G |><| H, chi(h, g) = (g^-1, h^-1)
// xi  :  H |><| G     -> G |><| H, xi(h, g) = (g <| (g^-1 |> h^-1), (g^-1 |> h^-1)^-1)
// Both maps are verified exhaustively; a failure would be an internal
// consistency bug and throws.
struct ChiXiResult {
  std::vector<int> chi;
  std::vector<int> xi;
  BicrossedGroup reversed_product;  // G |><| H over the reversed pair
  bool verified;
};
ChiXiResult chi_xi_isomorphisms(const MatchedPair& mp);

// (h, g) -> (fH(h), fG(g)) on the product groups; requires (fH, fG) to be
// a matched-pair morphism (throws Error(NotAMorphism) otherwise) and
// verifies the induced map is a homomorphism.
std::vector<int> induced_morphism(const MatchedPair& from, const MatchedPair& to,
                                  const std::vector<int>& f_h,
                                  const std::vector<int>& f_g);

// Mediating morphism out of the product: for group homomorphisms
// u : H -> X, v : G -> X satisfying v(g) u(h) = u(g |> h) v(g <| h),
// w(h, g) = u(h) v(g) is the unique homomorphism with w o iH = u and
// w o iG = v. Throws Error(NotHomomorphism) or Error(IncompatiblePair)
// with the offending (g, h) when the preconditions fail.
std::vector<int> mediating_from(const BicrossedGroup& bi, const FiniteGroup& X,
                                const std::vector<int>& u, const std::vector<int>& v);
std::vector<int> mediating_from(const MatchedPair& mp, const FiniteGroup& X,
                                const std::vector<int>& u, const std::vector<int>& v);

// True iff candidate is a homomorphism agreeing with u on iH and v on iG;
// exactly one map satisfies this, which is how uniqueness is tested.
bool satisfies_mediating_from(const BicrossedGroup& bi, const FiniteGroup& X,
                              const std::vector<int>& u, const std::vector<int>& v,
                              const std::vector<int>& candidate);

// Mediating morphism into the product: for maps u : X -> H, v : X -> G
// (not assumed homomorphisms) satisfying
//   u(xy) = u(x) (v(x) |> u(y))   and   v(xy) = (v(x) <| u(y)) v(y),
// w(x) = (u(x), v(x)) is the unique homomorphism with pH o w = u and
// pG o w = v. Throws Error(IncompatiblePair) with the offending (x, y).
std::vector<int> mediating_to(const BicrossedGroup& bi, const FiniteGroup& X,
                              const std::vector<int>& u, const std::vector<int>& v);
std::vector<int> mediating_to(const MatchedPair& mp, const FiniteGroup& X,
                              const std::vector<int>& u, const std::vector<int>& v);

bool satisfies_mediating_to(const BicrossedGroup& bi, const FiniteGroup& X,
                            const std::vector<int>& u, const std::vector<int>& v,
                            const std::vector<int>& candidate);

}  // namespace bicross
