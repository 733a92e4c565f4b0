#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicross::testing {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& f, const Perm& g) {  // apply g first, then f
  Perm out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

FiniteGroup group_from_perms(const std::vector<Perm>& elems,
                             std::vector<std::string> labels) {
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Perm prod = compose(elems[i], elems[j]);
      const auto it = std::find(elems.begin(), elems.end(), prod);
      if (it == elems.end()) throw std::logic_error("fixture set not closed");
      table[i * n + j] = static_cast<int>(it - elems.begin());
    }
  return validate_group(
      [&] {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) rows[i][j] = table[i * n + j];
        return rows;
      }(),
      std::move(labels));
}

}  // namespace

FiniteGroup make_s3() {
  const std::vector<Perm> elems = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  return group_from_perms(elems, {"id", "(012)", "(021)", "(01)", "(02)", "(12)"});
}

FiniteGroup make_d4() {
  std::vector<Perm> elems;
  for (int k = 0; k < 4; ++k) {  // rotations
    Perm r(4);
    for (int i = 0; i < 4; ++i) r[i] = (i + k) % 4;
    elems.push_back(r);
  }
  for (int k = 0; k < 4; ++k) {  // reflections s r^k
    Perm sr(4);
    for (int i = 0; i < 4; ++i) sr[i] = ((4 - ((i + k) % 4)) % 4);
    elems.push_back(sr);
  }
  return group_from_perms(elems, {"1", "r", "r2", "r3", "s", "sr", "sr2", "sr3"});
}

FiniteGroup make_klein() {
  return validate_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                        {"1", "x", "y", "xy"});
}

MatchedPair trivial_pair(int n, int m) {
  const FiniteGroup h = make_cyclic(n), g = make_cyclic(m);
  std::vector<int> alpha(static_cast<size_t>(m) * n), beta(static_cast<size_t>(m) * n);
  for (int gg = 0; gg < m; ++gg)
    for (int hh = 0; hh < n; ++hh) {
      alpha[gg * n + hh] = hh;
      beta[gg * n + hh] = gg;
    }
  return validate_matched_pair(h, g, std::move(alpha), std::move(beta));
}

MatchedPair pair_c3_c2_inversion() {
  const FiniteGroup h = make_cyclic(3), g = make_cyclic(2);
  // alpha(b^k, a^x) = a^((-1)^k x), beta trivial
  std::vector<int> alpha = {0, 1, 2, 0, 2, 1};
  std::vector<int> beta = {0, 0, 0, 1, 1, 1};
  return validate_matched_pair(h, g, std::move(alpha), std::move(beta));
}

MatchedPair pair_c5_c4_doubling() {
  const FiniteGroup h = make_cyclic(5), g = make_cyclic(4);
  std::vector<int> alpha(20), beta(20);
  int pw = 1;
  for (int k = 0; k < 4; ++k) {
    for (int x = 0; x < 5; ++x) {
      alpha[k * 5 + x] = pw * x % 5;
      beta[k * 5 + x] = k;
    }
    pw = pw * 2 % 5;
  }
  return validate_matched_pair(h, g, std::move(alpha), std::move(beta));
}

}  // namespace bicross::testing
