#pragma once

#include <optional>
#include <vector>

#include "bicross/group.hpp"

namespace bicross {

// Action tables are |G| x |H| in row-major (g, h) order throughout:
//   alpha[g][h] = g |> h   (an element of H)
//   beta[g][h]  = g <| h   (an element of G)

// Left action of a group G on the underlying set of H. Identity acts
// trivially and table[g1*g2][h] = table[g1][table[g2][h]].
struct LeftAction {
  FiniteGroup actor;  // G
  FiniteGroup space;  // H, acted on as a set
  std::vector<int> table;

  int at(int g, int h) const { return table[g * space.order() + h]; }
  bool is_trivial() const;
};

// Right action of H on the underlying set of G, stored with the same
// (g, h) indexing: table[g][0] = g and table[g][h1*h2] = table[table[g][h1]][h2].
struct RightAction {
  FiniteGroup actor;  // H
  FiniteGroup space;  // G
  std::vector<int> table;

  int at(int g, int h) const { return table[g * actor.order() + h]; }
  bool is_trivial() const;
};

struct ActionPair {
  LeftAction alpha;
  RightAction beta;
};

// Exhaustively verifies both action axioms. Throws Error(ShapeMismatch |
// NotUnital | NotAnAction) carrying the lexicographically smallest witness.
ActionPair validate_actions(const FiniteGroup& H, const FiniteGroup& G,
                            const std::vector<std::vector<int>>& alpha_rows,
                            const std::vector<std::vector<int>>& beta_rows);

// Two groups plus mutually compatible action tables:
//   (1)  g |> (h1 h2) = (g |> h1) ((g <| h1) |> h2)
//   (2)  (g1 g2) <| h = (g1 <| (g2 |> h)) (g2 <| h)
// Tables are stored fully expanded. Immutable after validation.
struct MatchedPair {
  FiniteGroup H;
  FiniteGroup G;
  std::vector<int> alpha;  // |G| x |H|
  std::vector<int> beta;   // |G| x |H|

  int left(int g, int h) const { return alpha[g * H.order() + h]; }    // g |> h
  int right(int g, int h) const { return beta[g * H.order() + h]; }    // g <| h
  bool alpha_trivial() const;
  bool beta_trivial() const;

  LeftAction alpha_action() const { return LeftAction{G, H, alpha}; }
  RightAction beta_action() const { return RightAction{H, G, beta}; }
};

// The same defect report used by the non-throwing checker. For compat
// violations the witness is the smallest offending triple; unit_violated
// marks that g |> 1 = 1 or 1 <| h = 1 also fails (which implies one of
// the compatibility conditions).
struct PairDefect {
  ErrorCode code;
  Witness witness;
  bool unit_violated = false;
};

std::optional<PairDefect> check_actions(int h_order, int g_order,
                                        const std::vector<int>& g_table,
                                        const std::vector<int>& h_table,
                                        const std::vector<int>& alpha,
                                        const std::vector<int>& beta);

std::optional<PairDefect> check_matched_pair(const FiniteGroup& H, const FiniteGroup& G,
                                             const std::vector<int>& alpha,
                                             const std::vector<int>& beta);

// Full validation: action axioms, then compatibility conditions (1) and
// (2) over all triples. Throws Error(Compat1Violation | Compat2Violation)
// with the smallest witness triple; the message notes when the derived
// unit condition g |> 1 = 1, 1 <| h = 1 is violated as well.
MatchedPair validate_matched_pair(const FiniteGroup& H, const FiniteGroup& G,
                                  std::vector<int> alpha, std::vector<int> beta);
MatchedPair validate_matched_pair(const FiniteGroup& H, const FiniteGroup& G,
                                  const std::vector<std::vector<int>>& alpha_rows,
                                  const std::vector<std::vector<int>>& beta_rows);

// Swaps the roles of H and G:
//   alpha~(h, g) = (beta(g^-1, h^-1))^-1,  beta~(h, g) = (alpha(g^-1, h^-1))^-1.
// The result is itself a validated matched pair, and reversing twice gives
// back the original tables.
MatchedPair reverse_matched_pair(const MatchedPair& mp);

// True iff (fH, fG) are group homomorphisms intertwining both actions.
bool matched_pair_morphism(const MatchedPair& a, const MatchedPair& b,
                           const std::vector<int>& f_h, const std::vector<int>& f_g);

// Plain homomorphism test used in several modules.
bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to,
                     const std::vector<int>& f);

}  // namespace bicross
