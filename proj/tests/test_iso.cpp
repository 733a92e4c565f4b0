#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bicross/bicrossed.hpp"
#include "bicross/cyclic.hpp"
#include "bicross/iso.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bicross;
using testing::make_klein;
using testing::make_s3;
using testing::oracle_isomorphism;
using testing::pair_c3_c2_inversion;

TEST_CASE("fingerprints separate the classic small groups") {
  CHECK(fingerprint(make_cyclic(6)).order_profile !=
        fingerprint(make_s3()).order_profile);
  CHECK(fingerprint(make_cyclic(4)).order_profile !=
        fingerprint(make_klein()).order_profile);
  const FiniteGroup d4 = testing::make_d4();
  CHECK(fingerprint(d4) == fingerprint(d4));
}

TEST_CASE("are_isomorphic basics") {
  SUBCASE("a group is isomorphic to itself") {
    const FiniteGroup s3 = make_s3();
    const auto cert = are_isomorphic(s3, s3);
    REQUIRE(cert.iso());
    CHECK(is_homomorphism(s3, s3, *cert.bijection));
  }

  SUBCASE("C_6 vs S_3 refuted by the order profile") {
    const auto cert = are_isomorphic(make_cyclic(6), make_s3());
    CHECK_FALSE(cert.iso());
    CHECK(cert.refutation == "order_profile");
  }

  SUBCASE("different orders refuted immediately") {
    CHECK(are_isomorphic(make_cyclic(4), make_cyclic(5)).refutation == "order");
  }

  SUBCASE("two routes to S_3 are matched by backtracking") {
    const FiniteGroup built = build_bicrossed(pair_c3_c2_inversion()).group;
    const auto cert = are_isomorphic(built, make_s3());
    REQUIRE(cert.iso());
    CHECK(is_homomorphism(built, make_s3(), *cert.bijection));
  }
}

TEST_CASE("are_isomorphic agrees with the all-bijections oracle at small order") {
  std::vector<FiniteGroup> pool = {make_cyclic(1), make_cyclic(4), make_klein(),
                                   make_cyclic(6), make_s3(),
                                   testing::make_d4(), make_cyclic(8)};
  for (const auto& mp : enumerate_matched_pairs(2, 4))
    pool.push_back(build_bicrossed(mp).group);
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j) {
      const bool engine = are_isomorphic(pool[i], pool[j]).iso();
      const bool oracle = oracle_isomorphism(pool[i], pool[j]).has_value();
      CHECK(engine == oracle);
    }
}

TEST_CASE("fingerprints transport through relabelings") {
  const FiniteGroup s3 = make_s3();
  std::mt19937 rng(1234);
  for (int round = 0; round < 10; ++round) {
    std::vector<int> f(6);
    std::iota(f.begin(), f.end(), 0);
    std::shuffle(f.begin() + 1, f.end(), rng);  // keep identity at 0
    std::vector<std::vector<int>> rows(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) rows[f[i]][f[j]] = f[s3.mul(i, j)];
    const FiniteGroup relabeled = validate_group(rows);
    CHECK(fingerprint(relabeled) == fingerprint(s3));
    CHECK(are_isomorphic(s3, relabeled).iso());
  }
}

TEST_CASE("classify") {
  SUBCASE("empty input") { CHECK(classify({}).empty()); }

  SUBCASE("C_4, Klein, C_4 splits into two classes") {
    const auto classes = classify({make_cyclic(4), make_klein(), make_cyclic(4)});
    REQUIRE(classes.size() == 2);
    // sorted by order profile: Klein's [1,2,2,2] precedes C_4's [1,2,4,4]
    CHECK(classes[0].representative == 1);
    CHECK(classes[0].members == std::vector<int>{1});
    CHECK(classes[1].representative == 0);
    CHECK(classes[1].members == std::vector<int>{0, 2});
  }

  SUBCASE("products of the (3,2) enumeration fall into two classes") {
    std::vector<FiniteGroup> groups;
    for (const auto& mp : enumerate_matched_pairs(3, 2))
      groups.push_back(build_bicrossed(mp).group);
    CHECK(classify(groups).size() == 2);
  }

  SUBCASE("partition does not depend on input order") {
    std::vector<FiniteGroup> groups = {make_cyclic(4), make_klein(), make_cyclic(4),
                                       make_s3(), make_cyclic(6)};
    auto as_sets = [](const std::vector<IsoClass>& classes,
                      const std::vector<int>& perm) {
      std::set<std::set<int>> sets;
      for (const auto& c : classes) {
        std::set<int> members;
        for (int m : c.members) members.insert(perm[m]);
        sets.insert(members);
      }
      return sets;
    };
    std::vector<int> id{0, 1, 2, 3, 4};
    const auto base = as_sets(classify(groups), id);

    std::vector<int> perm{3, 0, 4, 1, 2};  // position i holds original index perm[i]
    std::vector<FiniteGroup> shuffled;
    for (int idx : perm) shuffled.push_back(groups[idx]);
    CHECK(as_sets(classify(shuffled), perm) == base);
  }
}

TEST_CASE("generating sequences stay short on two-factor products") {
  CHECK(generating_sequence(make_s3()).size() <= 2);
  CHECK(generating_sequence(testing::make_d4()).size() <= 2);
  CHECK(generating_sequence(make_cyclic(12)).size() == 1);
}
