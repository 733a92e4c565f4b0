#pragma once

#include <vector>

#include "bicross/action.hpp"
#include "bicross/group.hpp"

namespace bicross::testing {

// Groups built here come from permutation composition, not from any code
// path under test, so they can serve as independent references.

// Symmetric group on 3 points: [id, (012), (021), (01), (02), (12)].
FiniteGroup make_s3();

// Dihedral group of order 8 acting on the square's corners:
// [id, r, r2, r3, s, sr, sr2, sr3] with r(i) = i+1 mod 4 and s(i) = -i mod 4.
FiniteGroup make_d4();

// Klein four group as C_2 x C_2.
FiniteGroup make_klein();

// The nontrivial matched pair between C_3 and C_2 (inversion action,
// trivial right action) and its C_5/C_4 analogue (x -> 2x).
MatchedPair pair_c3_c2_inversion();
MatchedPair pair_c5_c4_doubling();
MatchedPair trivial_pair(int n, int m);

}  // namespace bicross::testing
