#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "bicross/bicrossed.hpp"
#include "bicross/group.hpp"
#include "support/fixtures.hpp"

using namespace bicross;
using testing::make_d4;
using testing::make_klein;
using testing::make_s3;
using testing::pair_c3_c2_inversion;

TEST_CASE("make_cyclic basics") {
  const FiniteGroup c1 = make_cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.mul(0, 0) == 0);

  const FiniteGroup c4 = make_cyclic(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(c4.mul(i, j) == (i + j) % 4);
  CHECK(element_order(c4, 1) == 4);
  CHECK(c4.label(1) == "a^1");

  const FiniteGroup c6 = make_cyclic(6);
  CHECK(element_order(c6, 2) == 3);
  CHECK(element_order(c6, 3) == 2);

  CHECK_THROWS_WITH_AS(make_cyclic(0), doctest::Contains(">= 1"), Error);
}

TEST_CASE("validate_group accepts real tables and reports witnesses") {
  CHECK_NOTHROW(validate_group(make_cyclic(4).table_rows()));

  try {
    validate_group({{0, 1}, {1, 1}});
    FAIL("expected NoInverse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInverse);
    CHECK(e.witness()[0] == 1);
  }

  // row 1 repeats an entry but every element still has a two-sided inverse
  try {
    validate_group({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
    FAIL("expected NonBijectiveRow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonBijectiveRow);
    CHECK(e.witness()[0] == 1);
  }

  try {
    validate_group({{1, 0}, {0, 1}});
    FAIL("expected NotUnital");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnital);
  }

  // associativity violation with every unital/inverse/bijectivity axiom intact:
  // the "rock-paper-scissors" style table on 5 points is a quasigroup
  try {
    validate_group({{0, 1, 2, 3, 4},
                    {1, 0, 3, 4, 2},
                    {2, 4, 0, 1, 3},
                    {3, 2, 4, 0, 1},
                    {4, 3, 1, 2, 0}});
    FAIL("expected NonAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonAssociative);
    CHECK(e.witness()[0] >= 0);
  }
}

TEST_CASE("element_order edge cases") {
  const FiniteGroup s3 = make_s3();
  CHECK(element_order(s3, 0) == 1);
  CHECK_THROWS_AS(element_order(s3, 6), Error);

  // S_3-type group built from the (C_3, C_2) nontrivial pair: (a,1) has order 3
  const BicrossedGroup bi = build_bicrossed(pair_c3_c2_inversion());
  CHECK(element_order(bi.group, bi.encode(1, 0)) == 3);
}

TEST_CASE("generated subgroups") {
  const FiniteGroup c6 = make_cyclic(6);
  CHECK(generated_subgroup(c6, {0}).elements() == std::vector<int>{0});
  CHECK(generated_subgroup(c6, {2}).elements() == std::vector<int>{0, 2, 4});

  const FiniteGroup s3 = make_s3();
  CHECK(generated_subgroup(s3, {1, 3}).order() == 6);  // 3-cycle + involution
  CHECK_THROWS_AS(generated_subgroup(s3, {7}), Error);
}

TEST_CASE("subgroup predicates") {
  const FiniteGroup s3 = make_s3();
  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  const auto whole = subgroup_predicates(s3, Subgroup(s3, all));
  CHECK(whole.normal);
  CHECK_FALSE(whole.central);  // S_3 is not abelian

  const FiniteGroup c6 = make_cyclic(6);
  std::vector<int> all6(6);
  std::iota(all6.begin(), all6.end(), 0);
  const auto whole6 = subgroup_predicates(c6, Subgroup(c6, all6));
  CHECK(whole6.normal);
  CHECK(whole6.central);

  const auto rot = subgroup_predicates(s3, generated_subgroup(s3, {1}));
  CHECK(rot.normal);
  CHECK_FALSE(rot.central);

  const auto refl = subgroup_predicates(s3, generated_subgroup(s3, {3}));
  CHECK_FALSE(refl.normal);
}

TEST_CASE("conjugation and intersection of subgroups") {
  const FiniteGroup s3 = make_s3();
  const Subgroup h = generated_subgroup(s3, {3});
  CHECK(conjugate_subgroup(s3, h, 0) == h);
  for (int x = 0; x < 6; ++x)
    CHECK(conjugate_subgroup(s3, h, x).order() == h.order());

  const Subgroup rot = generated_subgroup(s3, {1});
  for (int x = 0; x < 6; ++x) CHECK(conjugate_subgroup(s3, rot, x) == rot);

  const FiniteGroup c12 = make_cyclic(12);
  const Subgroup a2 = generated_subgroup(c12, {2});
  const Subgroup a3 = generated_subgroup(c12, {3});
  const auto both = conjugate_and_intersect(c12, a2, 5, a3);
  CHECK(a2.order() == 6);
  CHECK(a3.order() == 4);
  CHECK(both.intersection.elements() == generated_subgroup(c12, {6}).elements());
  CHECK(both.conjugate == a2);
}

TEST_CASE("quotients") {
  const FiniteGroup c6 = make_cyclic(6);
  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);

  const auto by_whole = quotient(c6, Subgroup(c6, all));
  CHECK(by_whole.group.order() == 1);

  const auto by_trivial = quotient(c6, Subgroup(c6, {0}));
  CHECK(by_trivial.group.order() == 6);
  CHECK(by_trivial.group.same_table(c6));

  const auto q = quotient(c6, generated_subgroup(c6, {3}));
  CHECK(q.group.order() == 3);
  CHECK(order_profile(q.group) == OrderProfile{1, 3, 3});

  // projection is a homomorphism with kernel N
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(q.projection[c6.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]));

  const FiniteGroup s3 = make_s3();
  CHECK_THROWS_AS(quotient(s3, generated_subgroup(s3, {3})), Error);
}

TEST_CASE("derived series and solvability") {
  const FiniteGroup c6 = make_cyclic(6);
  const auto ab = derived_series(c6);
  CHECK(ab.orders == std::vector<int>{6, 1});
  CHECK(ab.solvable);

  const auto s3 = derived_series(make_s3());
  CHECK(s3.orders == std::vector<int>{6, 3, 1});
  CHECK(s3.solvable);

  CHECK(derived_series(make_d4()).solvable);
}

TEST_CASE("order profiles") {
  CHECK(order_profile(make_cyclic(4)) == OrderProfile{1, 2, 4, 4});
  CHECK(order_profile(make_klein()) == OrderProfile{1, 2, 2, 2});
  CHECK(order_profile(make_cyclic(6)) == OrderProfile{1, 2, 3, 3, 6, 6});
  CHECK(order_profile(make_s3()) == OrderProfile{1, 2, 2, 2, 3, 3});
}

TEST_CASE("Lagrange and validation invariants") {
  for (const FiniteGroup& g : {make_s3(), make_d4(), make_cyclic(12)}) {
    // accepted tables satisfy every axiom exhaustively
    CHECK_FALSE(check_group_table(g.table(), g.order()).has_value());
    for (int x = 0; x < g.order(); ++x) {
      const Subgroup s = generated_subgroup(g, {x});
      CHECK(g.order() % s.order() == 0);
      CHECK(s.order() == element_order(g, x));
    }
  }
}

TEST_CASE("subgroup_as_group keeps structure") {
  const FiniteGroup s3 = make_s3();
  const auto copy = subgroup_as_group(s3, generated_subgroup(s3, {1}));
  CHECK(copy.group.order() == 3);
  CHECK(order_profile(copy.group) == OrderProfile{1, 3, 3});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(copy.to_parent[copy.group.mul(i, j)] ==
            s3.mul(copy.to_parent[i], copy.to_parent[j]));
}
