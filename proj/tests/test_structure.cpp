#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

#include <loopkit/catalog.hpp>
#include <loopkit/errors.hpp>
#include <loopkit/groups.hpp>
#include <loopkit/identity_check.hpp>
#include <loopkit/isomorphism.hpp>
#include <loopkit/models.hpp>
#include <loopkit/report.hpp>
#include <loopkit/structure.hpp>
#include <loopkit/term.hpp>

#include "support.hpp"

namespace loopkit {
namespace {

ElementSet set_of(int n, std::initializer_list<Element> xs) { return ElementSet(n, xs); }

// Frozen from an independent brute-force script.
TEST(Structure, ExampleFixtures) {
  const auto l = models::example_3_3();
  const auto all = ElementSet::full(8);
  EXPECT_EQ(left_nucleus(l), all);
  EXPECT_EQ(middle_nucleus(l), all);
  EXPECT_EQ(right_nucleus(l), all);
  EXPECT_EQ(nucleus(l), all);
  EXPECT_EQ(commutant(l), set_of(8, {0, 7}));
  EXPECT_EQ(center(l), set_of(8, {0, 7}));
  EXPECT_EQ(wip_elements(l), all);
  EXPECT_TRUE(is_lcc(l));
  EXPECT_TRUE(is_rcc(l));
  EXPECT_EQ(subloop_generated(l, set_of(8, {1})), set_of(8, {0, 1}));
  EXPECT_EQ(subloop_generated(l, set_of(8, {2})), set_of(8, {0, 2}));
  EXPECT_EQ(subloop_generated(l, ElementSet(8)), set_of(8, {0}));
  EXPECT_EQ(central_series(l), (CentralSeries{set_of(8, {0}), set_of(8, {0, 7}), all}));
  EXPECT_EQ(nilpotency_class(l), 2);
  EXPECT_TRUE(squares_translation(l));
  EXPECT_TRUE(square_central_translation(l));
}

TEST(Structure, ExampleNuclearNotCentral) {
  const auto l = models::example_3_3();
  EXPECT_TRUE(nucleus(l).contains(1));
  EXPECT_FALSE(center(l).contains(1));
  EXPECT_NE(l.mul(1, 2), l.mul(2, 1));
  const auto w = wip_elements(l);
  for (int x = 0; x < 8; ++x) EXPECT_TRUE(w.contains(l.mul(x, x)));
}

TEST(Structure, GroupsAndAbelianGroups) {
  for (const auto& g : testing::small_groups()) {
    const auto all = ElementSet::full(g.order());
    EXPECT_EQ(nucleus(g), all);
    EXPECT_TRUE(is_lcc(g) && is_rcc(g) && is_cc(g));
    EXPECT_TRUE(is_power_associative(g));
    EXPECT_TRUE(is_group(g));
    if (testing::commutative_naive(g)) {
      EXPECT_EQ(commutant(g), all);
      EXPECT_EQ(center(g), all);
      EXPECT_TRUE(squares_translation(g) && square_central_translation(g));
      EXPECT_EQ(nilpotency_class(g), g.order() == 1 ? 0 : 1);
    }
  }
}

TEST(Structure, QuaternionSquaresCentral) {
  const auto q = groups::quaternion();
  EXPECT_TRUE(squares_translation(q));
  EXPECT_TRUE(square_central_translation(q));
  EXPECT_EQ(center(q).size(), 2);
}

TEST(Structure, S3) {
  const LoopTable s3(testing::kS3Rows);
  EXPECT_EQ(center(s3), set_of(6, {0}));
  EXPECT_FALSE(nilpotency_class(s3).has_value());
  EXPECT_FALSE(square_central_translation(s3));
}

TEST(Structure, TrivialLoop) {
  const LoopTable t(testing::Rows{{0}});
  const auto r = analyze(t);
  EXPECT_EQ(r.nilpotency_class, 0);
  for (auto name : flag_names()) EXPECT_TRUE(flag_value(r.flags, name)) << name;
  EXPECT_THROW(flag_value(r.flags, "nope"), std::invalid_argument);
}

// Frozen: the lexicographically first normalized order-5 Latin square whose
// singly generated subloops are not all associative (independent script).
TEST(Structure, NonPowerAssociativeOrderFive) {
  const LoopTable t({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}});
  EXPECT_FALSE(is_power_associative(t));
  const auto loops = testing::all_loops_naive(5);
  for (const auto& u : loops) {
    if (u == t) break;
    EXPECT_TRUE(is_power_associative(u));
  }
}

TEST(Structure, WipContainsIdentity) {
  for (const auto& t : testing::all_loops_naive(5)) {
    const auto w = wip_elements(t);
    EXPECT_TRUE(w.contains(0));
    EXPECT_EQ(w.is_full(), holds(t, catalog_identity("wip")));
  }
}

TEST(Structure, InvariantsOverSmallLoops) {
  const auto lcc = catalog_identity("lcc");
  const auto rcc = mirror(lcc);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : testing::all_loops_naive(n)) {
      const auto r = analyze(t);
      EXPECT_EQ(r.center, r.nucleus & r.commutant);
      EXPECT_EQ(r.nucleus, r.left_nucleus & r.middle_nucleus & r.right_nucleus);
      EXPECT_TRUE(r.center.subset_of(r.commutant));
      EXPECT_EQ(r.flags.lcc, holds(t, lcc));
      EXPECT_EQ(r.flags.rcc, holds(t, rcc));
      EXPECT_EQ(r.flags.cc, r.flags.lcc && r.flags.rcc);
      EXPECT_EQ(r.flags.left_cheban, holds(t, catalog_identity("left_cheban")));
      EXPECT_EQ(r.flags.moufang, holds(t, catalog_identity("moufang")));
      EXPECT_EQ(is_group(t), testing::associative_naive(t));
      EXPECT_TRUE(is_normal(t, r.center));
      EXPECT_TRUE(is_normal(t, set_of(n, {0})));
      EXPECT_TRUE(is_normal(t, ElementSet::full(n)));
    }
  }
}

TEST(Structure, NormalityAndQuotients) {
  const auto d4 = groups::dihedral(4);
  const auto rotations = set_of(8, {0, 1, 2, 3});
  EXPECT_TRUE(is_subloop(d4, rotations));
  EXPECT_TRUE(is_normal(d4, rotations));
  const auto reflection = set_of(8, {0, 4});
  EXPECT_TRUE(is_subloop(d4, reflection));
  EXPECT_FALSE(is_normal(d4, reflection));
  EXPECT_THROW(quotient(d4, reflection), NotNormal);
  EXPECT_THROW(is_normal(d4, set_of(8, {0, 1})), NotASubloop);

  const auto q = quotient(d4, rotations);
  EXPECT_EQ(q.order(), 2);
  const auto by_center = quotient(d4, center(d4));
  EXPECT_EQ(by_center.order(), 4);
  EXPECT_TRUE(is_associative(by_center) && is_commutative(by_center));
  EXPECT_TRUE(is_isomorphic(quotient(d4, set_of(8, {0})), d4));
  EXPECT_EQ(quotient(d4, ElementSet::full(8)), LoopTable(testing::Rows{{0}}));

  const auto cs = cosets(d4, rotations);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0], rotations);
}

TEST(Structure, Heisenberg) {
  const auto h = models::heisenberg_27();
  EXPECT_EQ(h.order(), 27);
  EXPECT_TRUE(testing::associative_naive(h));
  EXPECT_FALSE(testing::commutative_naive(h));
  EXPECT_EQ(nilpotency_class(h), 2);
  EXPECT_EQ(center(h).size(), 3);
  EXPECT_FALSE(square_central_translation(h));
  EXPECT_FALSE(holds(h, catalog_identity("cheban")));
  for (int x = 0; x < 27; ++x) EXPECT_EQ(h.mul(x, h.mul(x, x)), 0);
}

TEST(Isotopism, DiagonalIsIsomorphism) {
  const auto l = models::example_3_3();
  const Permutation id = Permutation::identity(8);
  EXPECT_TRUE(is_isotopism(id, id, id, l, l));
  const Permutation f({0, 1, 2, 3, 4, 5, 7, 6});
  EXPECT_TRUE(is_isotopism(f, f, f, l, l.relabeled(f)));
  EXPECT_FALSE(is_isotopism(f, f, f, l, l));
  EXPECT_THROW(is_isotopism(id, id, id, l, groups::cyclic(4)), OrderMismatch);
}

TEST(Isotopism, DiagonalTriplesAreExactlyIsomorphismsOrderFour) {
  for (const auto& a : testing::all_loops_naive(4)) {
    for (const auto& b : testing::all_loops_naive(4)) {
      std::vector<Element> p{0, 1, 2, 3};
      do {
        const Permutation f(p);
        EXPECT_EQ(is_isotopism(f, f, f, a, b), a.relabeled(f) == b);
      } while (std::next_permutation(p.begin() + 1, p.end()));
    }
  }
}

// Frozen: lexicographically first (f, g) with (f, g, id) an isotopism of the
// cyclic group of order 5 onto itself other than the trivial triple; by hand,
// f(x) = x + a and g(y) = y - a with a = 1.
TEST(Isotopism, PrincipalNonDiagonal) {
  const auto z5 = groups::cyclic(5);
  const Permutation id = Permutation::identity(5);
  std::optional<std::pair<Permutation, Permutation>> first;
  std::vector<Element> fp{0, 1, 2, 3, 4};
  do {
    std::vector<Element> gp{0, 1, 2, 3, 4};
    do {
      const Permutation f(fp), g(gp);
      if (!(f.is_identity() && g.is_identity()) && is_isotopism(f, g, id, z5, z5)) first.emplace(f, g);
    } while (!first && std::next_permutation(gp.begin(), gp.end()));
  } while (!first && std::next_permutation(fp.begin(), fp.end()));
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(first->first, Permutation({1, 2, 3, 4, 0}));
  EXPECT_EQ(first->second, Permutation({4, 0, 1, 2, 3}));
}

}  // namespace
}  // namespace loopkit
