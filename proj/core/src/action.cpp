#include "bicross/action.hpp"

#include <algorithm>

namespace bicross {

bool LeftAction::is_trivial() const {
  for (int g = 0; g < actor.order(); ++g)
    for (int h = 0; h < space.order(); ++h)
      if (at(g, h) != h) return false;
  return true;
}

bool RightAction::is_trivial() const {
  for (int g = 0; g < space.order(); ++g)
    for (int h = 0; h < actor.order(); ++h)
      if (at(g, h) != g) return false;
  return true;
}

bool MatchedPair::alpha_trivial() const {
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      if (left(g, h) != h) return false;
  return true;
}

bool MatchedPair::beta_trivial() const {
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      if (right(g, h) != g) return false;
  return true;
}

std::optional<PairDefect> check_actions(int h_order, int g_order,
                                        const std::vector<int>& g_table,
                                        const std::vector<int>& h_table,
                                        const std::vector<int>& alpha,
                                        const std::vector<int>& beta) {
  const int nh = h_order, ng = g_order;
  if (static_cast<int>(alpha.size()) != ng * nh ||
      static_cast<int>(beta.size()) != ng * nh)
    return PairDefect{ErrorCode::ShapeMismatch, kNoWitness};
  for (int v : alpha)
    if (v < 0 || v >= nh) return PairDefect{ErrorCode::ShapeMismatch, kNoWitness};
  for (int v : beta)
    if (v < 0 || v >= ng) return PairDefect{ErrorCode::ShapeMismatch, kNoWitness};

  // alpha: identity of G acts trivially, then composition
  for (int h = 0; h < nh; ++h)
    if (alpha[h] != h) return PairDefect{ErrorCode::NotUnital, {0, h, -1}};
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2) {
      const int g12 = g_table[g1 * ng + g2];
      for (int h = 0; h < nh; ++h)
        if (alpha[g12 * nh + h] != alpha[g1 * nh + alpha[g2 * nh + h]])
          return PairDefect{ErrorCode::NotAnAction, {g1, g2, h}};
    }

  // beta: identity of H acts trivially, then composition
  for (int g = 0; g < ng; ++g)
    if (beta[g * nh] != g) return PairDefect{ErrorCode::NotUnital, {g, 0, -1}};
  for (int g = 0; g < ng; ++g)
    for (int h1 = 0; h1 < nh; ++h1) {
      const int gh1 = beta[g * nh + h1];
      for (int h2 = 0; h2 < nh; ++h2)
        if (beta[g * nh + h_table[h1 * nh + h2]] != beta[gh1 * nh + h2])
          return PairDefect{ErrorCode::NotAnAction, {g, h1, h2}};
    }
  return std::nullopt;
}

namespace {

// g |> 1 = 1 and 1 <| h = 1 follow from the compatibility conditions; when
// they fail we flag it alongside the primary violation.
bool unit_condition_violated(int nh, int ng, const std::vector<int>& alpha,
                             const std::vector<int>& beta) {
  for (int g = 0; g < ng; ++g)
    if (alpha[g * nh] != 0) return true;
  for (int h = 0; h < nh; ++h)
    if (beta[h] != 0) return true;
  return false;
}

}  // namespace

std::optional<PairDefect> check_matched_pair(const FiniteGroup& H, const FiniteGroup& G,
                                             const std::vector<int>& alpha,
                                             const std::vector<int>& beta) {
  const int nh = H.order(), ng = G.order();
  if (auto defect = check_actions(nh, ng, G.table(), H.table(), alpha, beta))
    return defect;

  // (1)  g |> (h1 h2) = (g |> h1) ((g <| h1) |> h2)
  for (int g = 0; g < ng; ++g)
    for (int h1 = 0; h1 < nh; ++h1) {
      const int gh1 = alpha[g * nh + h1];
      const int g_after = beta[g * nh + h1];
      for (int h2 = 0; h2 < nh; ++h2) {
        const int lhs = alpha[g * nh + H.mul(h1, h2)];
        const int rhs = H.mul(gh1, alpha[g_after * nh + h2]);
        if (lhs != rhs)
          return PairDefect{ErrorCode::Compat1Violation,
                            {g, h1, h2},
                            unit_condition_violated(nh, ng, alpha, beta)};
      }
    }

  // (2)  (g1 g2) <| h = (g1 <| (g2 |> h)) (g2 <| h)
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2) {
      const int g12 = G.mul(g1, g2);
      for (int h = 0; h < nh; ++h) {
        const int lhs = beta[g12 * nh + h];
        const int rhs = G.mul(beta[g1 * nh + alpha[g2 * nh + h]], beta[g2 * nh + h]);
        if (lhs != rhs)
          return PairDefect{ErrorCode::Compat2Violation,
                            {g1, g2, h},
                            unit_condition_violated(nh, ng, alpha, beta)};
      }
    }
  return std::nullopt;
}

namespace {

std::vector<int> flatten_action(const std::vector<std::vector<int>>& rows, int ng,
                                int nh) {
  if (static_cast<int>(rows.size()) != ng)
    throw Error(ErrorCode::ShapeMismatch, "action table must have one row per actor");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(ng) * nh);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != nh)
      throw Error(ErrorCode::ShapeMismatch, "action table row width mismatch");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

[[noreturn]] void throw_pair_defect(const PairDefect& defect) {
  std::string msg = std::string(error_code_name(defect.code)) + " at (" +
                    std::to_string(defect.witness[0]) + ", " +
                    std::to_string(defect.witness[1]) + ", " +
                    std::to_string(defect.witness[2]) + ")";
  if (defect.unit_violated)
    msg += "; derived unit condition g|>1 = 1, 1<|h = 1 also violated";
  throw Error(defect.code, msg, defect.witness);
}

}  // namespace

ActionPair validate_actions(const FiniteGroup& H, const FiniteGroup& G,
                            const std::vector<std::vector<int>>& alpha_rows,
                            const std::vector<std::vector<int>>& beta_rows) {
  auto alpha = flatten_action(alpha_rows, G.order(), H.order());
  auto beta = flatten_action(beta_rows, G.order(), H.order());
  if (auto defect = check_actions(H.order(), G.order(), G.table(), H.table(), alpha, beta))
    throw_pair_defect(*defect);
  return ActionPair{LeftAction{G, H, std::move(alpha)}, RightAction{H, G, std::move(beta)}};
}

MatchedPair validate_matched_pair(const FiniteGroup& H, const FiniteGroup& G,
                                  std::vector<int> alpha, std::vector<int> beta) {
  if (auto defect = check_matched_pair(H, G, alpha, beta)) throw_pair_defect(*defect);
  return MatchedPair{H, G, std::move(alpha), std::move(beta)};
}

MatchedPair validate_matched_pair(const FiniteGroup& H, const FiniteGroup& G,
                                  const std::vector<std::vector<int>>& alpha_rows,
                                  const std::vector<std::vector<int>>& beta_rows) {
  return validate_matched_pair(H, G, flatten_action(alpha_rows, G.order(), H.order()),
                               flatten_action(beta_rows, G.order(), H.order()));
}

MatchedPair reverse_matched_pair(const MatchedPair& mp) {
  const int nh = mp.H.order(), ng = mp.G.order();
  std::vector<int> alpha_rev(static_cast<size_t>(nh) * ng);
  std::vector<int> beta_rev(static_cast<size_t>(nh) * ng);
  for (int h = 0; h < nh; ++h)
    for (int g = 0; g < ng; ++g) {
      const int gi = mp.G.inv(g), hi = mp.H.inv(h);
      alpha_rev[h * ng + g] = mp.G.inv(mp.right(gi, hi));
      beta_rev[h * ng + g] = mp.H.inv(mp.left(gi, hi));
    }
  if (auto defect = check_matched_pair(mp.G, mp.H, alpha_rev, beta_rev))
    throw Error(ErrorCode::InternalConsistency,
                std::string("reversed pair failed validation: ") +
                    error_code_name(defect->code),
                defect->witness);
  return MatchedPair{mp.G, mp.H, std::move(alpha_rev), std::move(beta_rev)};
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to,
                     const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != from.order()) return false;
  for (int v : f)
    if (v < 0 || v >= to.order()) return false;
  for (int x = 0; x < from.order(); ++x)
    for (int y = 0; y < from.order(); ++y)
      if (f[from.mul(x, y)] != to.mul(f[x], f[y])) return false;
  return true;
}

bool matched_pair_morphism(const MatchedPair& a, const MatchedPair& b,
                           const std::vector<int>& f_h, const std::vector<int>& f_g) {
  if (static_cast<int>(f_h.size()) != a.H.order() ||
      static_cast<int>(f_g.size()) != a.G.order())
    throw Error(ErrorCode::ShapeMismatch, "morphism maps must cover H and G");
  for (int v : f_h)
    if (v < 0 || v >= b.H.order())
      throw Error(ErrorCode::ShapeMismatch, "f_H image out of range");
  for (int v : f_g)
    if (v < 0 || v >= b.G.order())
      throw Error(ErrorCode::ShapeMismatch, "f_G image out of range");

  if (!is_homomorphism(a.H, b.H, f_h) || !is_homomorphism(a.G, b.G, f_g)) return false;
  for (int g = 0; g < a.G.order(); ++g)
    for (int h = 0; h < a.H.order(); ++h) {
      if (f_h[a.left(g, h)] != b.left(f_g[g], f_h[h])) return false;
      if (f_g[a.right(g, h)] != b.right(f_g[g], f_h[h])) return false;
    }
  return true;
}

}  // namespace bicross
