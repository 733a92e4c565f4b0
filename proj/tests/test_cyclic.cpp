#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bicross/bicrossed.hpp"
#include "bicross/cyclic.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bicross;
using testing::make_s3;

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(1, 2) == 1);
  CHECK_THROWS_AS(mod_inverse(2, 4), Error);
  CHECK(perm_order({0, 1, 2}) == 1);
  CHECK(perm_order({0, 2, 1}) == 2);
  CHECK(perm_order({1, 2, 0}) == 3);
}

TEST_CASE("enumerate_seeds") {
  SUBCASE("(2,2) has the lone identity seed") {
    const auto seeds = enumerate_seeds(2, 2);
    REQUIRE(seeds.size() == 1);
    CHECK(seeds[0].theta == std::vector<int>{0, 1});
    CHECK(seeds[0].phi == std::vector<int>{0, 1});
  }

  SUBCASE("(3,2) has exactly the identity and the involution") {
    const auto seeds = enumerate_seeds(3, 2);
    REQUIRE(seeds.size() == 2);
    CHECK(seeds[0].theta == std::vector<int>{0, 1, 2});
    CHECK(seeds[1].theta == std::vector<int>{0, 2, 1});
    for (const auto& s : seeds) CHECK(s.phi == std::vector<int>{0, 1});
  }

  SUBCASE("m = 1 forces the identity") {
    CHECK(enumerate_seeds(5, 1).size() == 1);
    CHECK(enumerate_seeds(1, 5).size() == 1);
  }

  SUBCASE("(5,4) candidate counts: 16 thetas, one phi") {
    CHECK(admissible_permutations(5, 4, kDefaultSeedBudget).size() == 16);
    CHECK(admissible_permutations(4, 5, kDefaultSeedBudget).size() == 1);
    CHECK(enumerate_seeds(5, 4).size() == 16);
  }

  SUBCASE("budget violations are explicit") {
    CHECK_THROWS_AS(enumerate_seeds(4, 4, 3), Error);
    try {
      enumerate_seeds(4, 4, 3);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    // the factorial scan guard fires before any enumeration
    CHECK_THROWS_AS(enumerate_seeds(13, 2), Error);
  }

  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(enumerate_seeds(0, 2), Error);
  }
}

TEST_CASE("expand_seed") {
  SUBCASE("identity theta gives the trivial left action") {
    const CyclicSeed seed{3, 2, {0, 1, 2}, {0, 1}};
    const auto pair = expand_seed(seed);
    CHECK(pair.alpha.is_trivial());
    CHECK(pair.beta.is_trivial());
  }

  SUBCASE("(3,2) involution: alpha(b, a) = a^2") {
    const CyclicSeed seed{3, 2, {0, 2, 1}, {0, 1}};
    const auto tables = expand_seed_tables(seed);
    CHECK(tables.alpha[1 * 3 + 1] == 2);
  }

  SUBCASE("(5,4) doubling: alpha(b^2, a) = a^4") {
    const CyclicSeed seed{5, 4, {0, 2, 4, 1, 3}, {0, 1, 2, 3}};
    const auto tables = expand_seed_tables(seed);
    CHECK(tables.alpha[2 * 5 + 1] == 4);
  }

  SUBCASE("seed invariants are enforced") {
    CHECK_THROWS_AS(expand_seed_tables(CyclicSeed{3, 2, {1, 0, 2}, {0, 1}}), Error);
    CHECK_THROWS_AS(expand_seed_tables(CyclicSeed{3, 3, {0, 2, 1}, {0, 1, 2}}), Error);
  }
}

TEST_CASE("enumerate_matched_pairs counts") {
  CHECK(enumerate_matched_pairs(2, 2).size() == 1);
  CHECK(enumerate_matched_pairs(3, 2).size() == 2);
  CHECK(enumerate_matched_pairs(6, 1).size() == 1);
  CHECK(enumerate_matched_pairs(1, 6).size() == 1);
}

TEST_CASE("pruned enumeration equals the unpruned oracle") {
  for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3},
                      std::pair{3, 3}, std::pair{4, 2}}) {
    std::set<testing::ActionTables> engine;
    for (const auto& mp : enumerate_matched_pairs(n, m))
      engine.insert({mp.alpha, mp.beta});
    CHECK(engine == testing::oracle_matched_pairs(n, m));
  }
}

TEST_CASE("parallel scans match the sequential scan") {
  const auto seq = enumerate_matched_seeds(5, 8, kDefaultSeedBudget, 1);
  const auto par = enumerate_matched_seeds(5, 8, kDefaultSeedBudget, 7);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].theta == par[i].theta);
    CHECK(seq[i].phi == par[i].phi);
  }
}

TEST_CASE("enumerate_semidirects") {
  SUBCASE("p = 2 gives only the direct product in the first orientation") {
    const auto semis = enumerate_semidirects(2, 5);
    int first = 0;
    for (const auto& c : semis)
      if (c.orientation == WitnessBranch::NormalH) ++first;
    CHECK(first == 1);
  }

  SUBCASE("p = 3, m = 2 realizes C_6 and S_3") {
    const auto semis = enumerate_semidirects(3, 2);
    REQUIRE(semis.size() >= 2);
    CHECK(semis[0].residue == 1);
    CHECK(order_profile(semis[0].group) == OrderProfile{1, 2, 3, 3, 6, 6});
    CHECK(semis[1].residue == 2);
    CHECK(order_profile(semis[1].group) == OrderProfile{1, 2, 2, 2, 3, 3});
  }

  SUBCASE("p = 5, m = 4: every residue passes Fermat") {
    const auto semis = enumerate_semidirects(5, 4);
    int first = 0;
    for (const auto& c : semis)
      if (c.orientation == WitnessBranch::NormalH) ++first;
    CHECK(first == 4);
  }

  SUBCASE("p must be prime") {
    CHECK_THROWS_AS(enumerate_semidirects(6, 2), Error);
  }
}

TEST_CASE("witness_decomposition") {
  SUBCASE("normal <a>: the S_3 table with a = a 3-cycle") {
    const FiniteGroup s3 = make_s3();
    const auto w = witness_decomposition(s3, 1, 3, 3, 2);
    CHECK(w.branch == WitnessBranch::NormalH);
    CHECK(w.t == 2);
    CHECK(w.a_tilde == 1);
  }

  SUBCASE("abelian groups land in NormalH with t = 1") {
    const FiniteGroup c6 = make_cyclic(6);
    const auto w = witness_decomposition(c6, 2, 3, 3, 2);
    CHECK(w.branch == WitnessBranch::NormalH);
    CHECK(w.t == 1);
    CHECK(w.c == 0);
  }

  SUBCASE("normal <b>: S_3 the other way around") {
    const FiniteGroup s3 = make_s3();
    const auto w = witness_decomposition(s3, 3, 1, 2, 3);
    CHECK(w.branch == WitnessBranch::NormalG);
    CHECK(w.m_exponent == 2);  // conjugating the 3-cycle by the involution inverts it
  }

  SUBCASE("preconditions") {
    const FiniteGroup s3 = make_s3();
    CHECK_THROWS_AS(witness_decomposition(s3, 1, 3, 2, 3), Error);   // wrong orders
    CHECK_THROWS_AS(witness_decomposition(s3, 1, 2, 3, 2), Error);   // b not order 2
    CHECK_THROWS_AS(witness_decomposition(s3, 1, 3, 4, 2), Error);   // p not prime
  }

  SUBCASE("corrected branch on a neither-normal factorization") {
    // the (3,6) enumeration contains pairs whose product has no normal
    // copy of either factor; the corrected generator must repair that
    const TheoremReport report = verify_main_theorem(3, 6);
    bool saw_corrected = false;
    for (size_t i = 0; i < report.witnesses.size(); ++i) {
      const auto& w = report.witnesses[i];
      if (w.branch != WitnessBranch::Corrected) continue;
      saw_corrected = true;
      CHECK(w.c != 0);
      CHECK(w.t != 1);
      REQUIRE(w.u.has_value());
      CHECK((*w.u * (w.t - 1)) % 3 == 1);
      REQUIRE(w.a_tilde.has_value());
      CHECK(w.a_tilde != 0);
      REQUIRE(w.central_h.has_value());
      CHECK(w.central_h->size() > 1);
    }
    CHECK(saw_corrected);
  }
}

TEST_CASE("verify_main_theorem small cases") {
  SUBCASE("(2,2): one abelian pair, matched to the direct product") {
    const TheoremReport r = verify_main_theorem(2, 2);
    CHECK(r.all_matched);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.profiles[0] == OrderProfile{1, 2, 2, 2});
    CHECK(r.matches[0].residue == 1);
  }

  SUBCASE("(3,2): C_6 and the S_3 type group") {
    const TheoremReport r = verify_main_theorem(3, 2);
    CHECK(r.all_matched);
    REQUIRE(r.pairs.size() == 2);
    CHECK(r.profiles[0] == OrderProfile{1, 2, 3, 3, 6, 6});
    CHECK(r.profiles[1] == OrderProfile{1, 2, 2, 2, 3, 3});
    CHECK(r.witnesses[0].t == 1);
    CHECK(r.witnesses[1].t == 2);
  }

  SUBCASE("(5,4): every pair matched") {
    const TheoremReport r = verify_main_theorem(5, 4);
    CHECK(r.all_matched);
    CHECK(r.pairs.size() == enumerate_matched_pairs(5, 4).size());
  }

  SUBCASE("p must be prime") {
    CHECK_THROWS_AS(verify_main_theorem(4, 2), Error);
  }
}

TEST_CASE("matched pair <-> group equivalence on a slice of seeds") {
  // (4,3): every admissible seed either passes validation and builds a
  // group, or fails and builds a non-group
  const FiniteGroup h = make_cyclic(4), g = make_cyclic(3);
  for (const auto& seed : enumerate_seeds(4, 3)) {
    const auto tables = expand_seed_tables(seed);
    const bool pair_ok = !check_matched_pair(h, g, tables.alpha, tables.beta);
    const auto table = bicrossed_table(h, g, tables.alpha, tables.beta);
    const bool group_ok = !check_group_table(table, 12);
    CHECK(pair_ok == group_ok);
  }
}

TEST_CASE("coprime orders give solvable products") {
  for (auto [n, m] : {std::pair{3, 4}, std::pair{4, 3}, std::pair{5, 2}}) {
    for (const auto& mp : enumerate_matched_pairs(n, m)) {
      const auto series = derived_series(build_bicrossed(mp).group);
      CHECK(series.solvable);
    }
  }
}
