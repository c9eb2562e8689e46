/* Tests for the permutation-group layer: Schreier-Sims orders cross-checked
 * against full enumeration, the named constructors, orbit/block/transitivity
 * machinery, conjugacy class data and coset actions. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "trefoil/permgrp.hpp"

using namespace trefoil;

TEST_CASE("permutation basics and composition convention") {
  Perm a = Perm::from_cycles(5, {{0, 1, 2}});
  Perm b = Perm::from_cycles(5, {{2, 3}});
  // (a*b) applies b first: 2 -> 3 -> 3, so (a*b)(2) == 3.
  CHECK((a * b)(2) == 3);
  // and 3 -> 2 -> 0.
  CHECK((a * b)(3) == 0);
  CHECK((b * a)(2) == 0);
  CHECK(a.inverse() * a == Perm(5));
  CHECK(a.order() == 3);
  CHECK(Perm::from_cycles(6, {{0, 1}, {2, 3, 4}}).order() == 6);
  CHECK(a.to_cycle_string() == "(0 1 2)");
  CHECK(Perm(4).to_cycle_string() == "()");
  CHECK(Perm::from_cycles(7, {{0, 1}, {5, 6}}).to_cycle_string() == "(0 1)(5 6)");
  // conj_by(g) = g a g^{-1} maps the cycle through g.
  Perm g = Perm::from_cycles(5, {{0, 3}});
  CHECK(a.conj_by(g) == Perm::from_cycles(5, {{3, 1, 2}}));
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 1}, {1, 2}}), DomainError);
}

TEST_CASE("orders of the named groups, chain vs enumeration") {
  struct Row {
    const char* spec;
    long order;
    int degree;
  };
  const Row rows[] = {
      {"A5", 60, 5},        {"S5", 120, 5},       {"A6", 360, 6},
      {"A7", 2520, 7},      {"PSL2(4)", 60, 5},   {"PSL2(5)", 60, 6},
      {"PSL2(7)", 168, 8},  {"SL2(8)", 504, 9},   {"PSL2(9)", 360, 10},
      {"PSL2(11)", 660, 12}, {"PSL2(13)", 1092, 14}, {"SL3(3):26", 5616, 26},
      {"PSp4(3):40", 25920, 40},
  };
  for (const auto& row : rows) {
    CAPTURE(row.spec);
    GroupRef g = group_from_spec(row.spec);
    CHECK(g->group().order() == Int(row.order));
    CHECK(g->group().degree() == row.degree);
    // Independent oracle: count the elements one by one.
    CHECK(g->elements().size() == static_cast<std::size_t>(row.order));
  }
}

TEST_CASE("group_from_spec caches and rejects junk") {
  CHECK(group_from_spec("A7").get() == group_from_spec("A7").get());
  CHECK_THROWS_AS(group_from_spec("M11"), DomainError);
  CHECK_THROWS_AS(group_from_spec("PSL2(15)"), DomainError);
}

TEST_CASE("embedded copies inside A7") {
  PermGroup a7 = alternating_group(7);
  PermGroup fano = psl2_7_in_a7();
  CHECK(fano.order() == Int(168));
  CHECK(fano.is_subgroup_of(a7));
  PermGroup s5 = s5_signed_in_a7();
  CHECK(s5.order() == Int(120));
  CHECK(s5.is_subgroup_of(a7));
  // The signed embedding sends transpositions to double transpositions.
  Perm t = Perm::from_cycles(7, {{0, 1}, {5, 6}});
  CHECK(s5.contains(t));
  CHECK_FALSE(a7.contains(Perm::from_cycles(7, {{0, 1}})));
}

TEST_CASE("A5 subgroup of PSL2(11)") {
  PermGroup a5 = a5_in_psl2_11(7);
  CHECK(a5.order() == Int(60));
  CHECK(a5.is_subgroup_of(psl2(11)));
  // Seeds do not change the order, only possibly the copy found.
  CHECK(a5_in_psl2_11(8).order() == Int(60));
}

TEST_CASE("orbits, blocks and primitivity") {
  // Regular C4: unique minimal block system {0,2},{1,3}.
  PermGroup c4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(is_transitive(c4));
  auto systems = minimal_block_systems(c4);
  REQUIRE(systems.size() == 1);
  CHECK(systems[0] == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK_FALSE(is_primitive(c4));

  // SL3(3) on nonzero vectors: transitive, with the +/- pairing as blocks.
  PermGroup sl33 = sl3_3_on_26();
  CHECK(is_transitive(sl33));
  auto vs = minimal_block_systems(sl33);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].size() == 13);
  for (const auto& blk : vs[0]) {
    REQUIRE(blk.size() == 2);
    // Points are v-1 for vectors v; the mate of v is -v = 2v mod 3 coordwise.
    int v = blk[0] + 1;
    int d0 = v % 3, d1 = (v / 3) % 3, d2 = v / 9;
    int neg = (2 * d0) % 3 + 3 * ((2 * d1) % 3) + 9 * ((2 * d2) % 3);
    CHECK(blk[1] == neg - 1);
  }
  CHECK_FALSE(is_primitive(sl33));

  CHECK(is_primitive(psl2(11)));
  CHECK(is_primitive(psp4_3_on_40()));

  PermGroup two_orbits(5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{2, 3, 4}})});
  auto orbs = orbits(two_orbits);
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0] == std::vector<int>{0, 1});
  CHECK(orbs[1] == std::vector<int>{2, 3, 4});
  CHECK_THROWS_AS(minimal_block_systems(two_orbits), DomainError);
}

TEST_CASE("transitivity degrees") {
  CHECK(transitivity_degree(symmetric_group(5)) == 3);  // capped at 3
  CHECK(transitivity_degree(alternating_group(7)) == 3);
  CHECK(transitivity_degree(psl2(11)) == 2);
  CHECK(transitivity_degree(sl3_3_on_26()) == 1);
  PermGroup c4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(transitivity_degree(c4) == 1);
}

TEST_CASE("point stabilizers") {
  PermGroup a7 = alternating_group(7);
  PermGroup st = point_stabilizer(a7, 3);
  CHECK(st.order() == Int(360));  // A6
  for (const auto& g : st.generators()) CHECK(g(3) == 3);

  // SL2(8) point stabilizer: the Borel of order 56 = (mu_2)^3 : mu_7.
  PermGroup borel = point_stabilizer(sl2_8(), 8);
  CHECK(borel.order() == Int(56));
  PermGroup unipotent = derived_subgroup(borel);
  CHECK(unipotent.order() == Int(8));
  for (const auto& e : enumerate_elements(unipotent)) CHECK(e.order() <= 2);
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup(symmetric_group(5)).order() == Int(60));
  CHECK(derived_subgroup(alternating_group(5)).order() == Int(60));  // perfect
  CHECK(derived_subgroup(psl2(7)).order() == Int(168));
  PermGroup c4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(derived_subgroup(c4).order() == Int(1));
}

TEST_CASE("conjugacy classes of A7") {
  GroupRef a7 = group_from_spec("A7");
  const ConjClasses& cc = a7->classes();
  REQUIRE(cc.num_classes() == 9);
  std::vector<long> sizes(cc.sizes);
  std::vector<long> expect{1, 70, 105, 210, 280, 360, 360, 504, 630};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == expect);
  CHECK(cc.exponent == 420);
  // Identity class first.
  CHECK(cc.sizes[0] == 1);
  CHECK(cc.rep_order[0] == 1);
  // Orders attached to sizes: (size, order) pairs determine the class except
  // for the two classes of 7-cycles.
  std::multiset<std::pair<long, long>> size_order;
  for (int c = 0; c < cc.num_classes(); ++c) size_order.insert({cc.sizes[c], cc.rep_order[c]});
  std::multiset<std::pair<long, long>> expect_so{{1, 1},   {70, 3},  {105, 2}, {210, 6}, {280, 3},
                                                 {360, 7}, {360, 7}, {504, 5}, {630, 4}};
  CHECK(size_order == expect_so);
  // The two 7-classes are swapped by inversion and by cubing, fixed by squares.
  std::vector<int> sevens;
  for (int c = 0; c < cc.num_classes(); ++c)
    if (cc.rep_order[c] == 7) sevens.push_back(c);
  REQUIRE(sevens.size() == 2);
  CHECK(cc.inverse_class[sevens[0]] == sevens[1]);
  CHECK(cc.inverse_class[sevens[1]] == sevens[0]);
  CHECK(cc.class_of_power(sevens[0], 2) == sevens[0]);
  CHECK(cc.class_of_power(sevens[0], 3) == sevens[1]);
  CHECK(cc.class_of_power(sevens[0], 7) == 0);
  // All other classes are rational (self-inverse).
  for (int c = 0; c < cc.num_classes(); ++c)
    if (cc.rep_order[c] != 7) CHECK(cc.inverse_class[c] == c);
  // Membership lookup agrees with conjugation.
  Perm seven = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  int c7 = cc.class_of(seven);
  CHECK(cc.rep_order[c7] == 7);
  CHECK(cc.class_of(seven.conj_by(Perm::from_cycles(7, {{0, 1, 2}}))) == c7);
}

TEST_CASE("conjugacy classes of S5, A5, PSL2(11), PSp4(3)") {
  {
    const ConjClasses& cc = group_from_spec("S5")->classes();
    REQUIRE(cc.num_classes() == 7);
    std::multiset<std::pair<long, long>> so;
    for (int c = 0; c < cc.num_classes(); ++c) so.insert({cc.sizes[c], cc.rep_order[c]});
    std::multiset<std::pair<long, long>> expect{{1, 1},  {10, 2}, {15, 2}, {20, 3},
                                                {20, 6}, {30, 4}, {24, 5}};
    CHECK(so == expect);
  }
  {
    const ConjClasses& cc = group_from_spec("A5")->classes();
    REQUIRE(cc.num_classes() == 5);
    std::multiset<std::pair<long, long>> so;
    for (int c = 0; c < cc.num_classes(); ++c) so.insert({cc.sizes[c], cc.rep_order[c]});
    std::multiset<std::pair<long, long>> expect{{1, 1}, {15, 2}, {20, 3}, {12, 5}, {12, 5}};
    CHECK(so == expect);
    // Both 5-classes are real but are swapped by squaring.
    for (int c = 0; c < cc.num_classes(); ++c) {
      CHECK(cc.inverse_class[c] == c);
      if (cc.rep_order[c] == 5) CHECK(cc.class_of_power(c, 2) != c);
    }
  }
  {
    const ConjClasses& cc = group_from_spec("PSL2(11)")->classes();
    REQUIRE(cc.num_classes() == 8);
    std::multiset<std::pair<long, long>> so;
    for (int c = 0; c < cc.num_classes(); ++c) so.insert({cc.sizes[c], cc.rep_order[c]});
    std::multiset<std::pair<long, long>> expect{{1, 1},   {55, 2},  {110, 3}, {132, 5},
                                                {132, 5}, {110, 6}, {60, 11}, {60, 11}};
    CHECK(so == expect);
    for (int c = 0; c < cc.num_classes(); ++c) {
      if (cc.rep_order[c] == 11)
        CHECK(cc.inverse_class[c] != c);  // 11-classes form a Galois pair
      else
        CHECK(cc.inverse_class[c] == c);
    }
  }
  {
    const ConjClasses& cc = group_from_spec("PSp4(3):40")->classes();
    CHECK(cc.num_classes() == 20);
    CHECK(cc.exponent == 180);
    std::set<long> orders(cc.rep_order.begin(), cc.rep_order.end());
    CHECK(orders == std::set<long>{1, 2, 3, 4, 5, 6, 9, 12});
  }
}

TEST_CASE("coset actions") {
  {
    CosetAction ca(alternating_group(7), psl2_7_in_a7());
    CHECK(ca.index() == 15);
    CHECK(ca.action().order() == Int(2520));  // faithful: A7 is simple
    CHECK(is_transitive(ca.action()));
    CHECK(transitivity_degree(ca.action()) == 2);
    // The identity fixes everything, the image of a 7-cycle fixes one point.
    CHECK(ca.image(Perm(7)) == Perm(15));
    Perm seven = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
    int fixed = 0;
    Perm img = ca.image(seven);
    for (int i = 0; i < 15; ++i)
      if (img(i) == i) ++fixed;
    CHECK(fixed == 1);
  }
  {
    CosetAction ca(alternating_group(7), s5_signed_in_a7());
    CHECK(ca.index() == 21);
    CHECK(ca.action().order() == Int(2520));
    CHECK(is_transitive(ca.action()));
  }
  {
    GroupRef deg11 = group_from_spec("coset:PSL2(11)/A5");
    CHECK(deg11->group().degree() == 11);
    CHECK(deg11->group().order() == Int(660));
    CHECK(transitivity_degree(deg11->group()) == 2);
  }
  // A non-subgroup is rejected.
  CHECK_THROWS_AS(CosetAction(alternating_group(7), symmetric_group(7)), DomainError);
}
