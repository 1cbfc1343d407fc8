#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <loopkit/catalog.hpp>
#include <loopkit/errors.hpp>
#include <loopkit/identity_check.hpp>
#include <loopkit/identity_parser.hpp>
#include <loopkit/isomorphism.hpp>
#include <loopkit/models.hpp>
#include <loopkit/search.hpp>
#include <loopkit/structure.hpp>

#include "support.hpp"

namespace loopkit {
namespace {

std::vector<LoopTable> naive_filter(int n, const std::vector<Identity>& constraints) {
  std::vector<LoopTable> out;
  for (const auto& t : testing::all_loops_naive(n)) {
    if (std::all_of(constraints.begin(), constraints.end(), [&](const Identity& id) { return holds(t, id); })) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<LoopTable> labeled(int n, std::vector<Identity> constraints, int jobs = 1) {
  SearchSpec spec;
  spec.order = n;
  spec.constraints = std::move(constraints);
  spec.jobs = jobs;
  return enumerate_all(spec);
}

std::vector<LoopTable> classes(int n, std::vector<Identity> constraints, int jobs = 1) {
  SearchSpec spec;
  spec.order = n;
  spec.constraints = std::move(constraints);
  spec.mode = SearchMode::up_to_isomorphism;
  spec.jobs = jobs;
  return enumerate_all(spec);
}

TEST(Search, OracleEquivalenceCoreFamilies) {
  const std::vector<std::vector<Identity>> families = {
      {}, {catalog_identity("left_cheban")}, {catalog_identity("cheban")}, {catalog_identity("lcc")}};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& f : families) {
      EXPECT_EQ(labeled(n, f), naive_filter(n, f)) << "order " << n << ", " << f.size() << " constraints";
    }
  }
}

TEST(Search, OracleEquivalenceEveryCatalogIdentity) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& e : catalog()) {
      EXPECT_EQ(labeled(n, {e.identity}), naive_filter(n, {e.identity})) << e.name << " order " << n;
    }
  }
}

TEST(Search, OracleEquivalenceInversesAndConstants) {
  const std::vector<std::string> laws = {
      "x^rho = x^lambda",         "(x*y)^rho = y^rho*x^rho",      "x\\(x*y) = y*1",
      "(x*y)/y = x",              "x*(y^lambda) = (y\\x)^rho",    "1/x = x^lambda",
      "x\\1 = x^rho",             "x*x = 1",                      "(x*x)*(y*y) = (y*y)*(x*x)",
      "x*(y\\(y*x)) = x*x",       "x/(y\\x) = y"};
  for (const auto& text : laws) {
    const auto id = parse_identity(text);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(labeled(n, {id}), naive_filter(n, {id})) << text << " order " << n;
  }
  const std::vector<Identity> pair = {catalog_identity("lcc"), mirror(catalog_identity("lcc"))};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(labeled(n, pair), naive_filter(n, pair)) << "order " << n;
}

TEST(Search, GroundIdentities) {
  EXPECT_EQ(labeled(4, {parse_identity("1 = 1")}).size(), 4u);
  EXPECT_EQ(labeled(1, {parse_identity("x = 1")}).size(), 1u);
  EXPECT_TRUE(labeled(3, {parse_identity("x = 1")}).empty());
}

TEST(Search, TrivialOrder) {
  const auto out = labeled(1, {});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], LoopTable(testing::Rows{{0}}));
}

TEST(Search, EmissionIsLexicographicAndRechecked) {
  const std::vector<Identity> cs = {catalog_identity("flexible")};
  const auto out = labeled(6, cs);
  EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
  EXPECT_EQ(std::adjacent_find(out.begin(), out.end()), out.end());
  for (const auto& t : out) {
    EXPECT_TRUE(holds(t, cs[0]));
    EXPECT_NO_THROW(validate(t.rows()));
  }
}

TEST(Search, UpToIsomorphismIsCanonicalAndComplete) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& f : std::vector<std::vector<Identity>>{{}, {catalog_identity("lcc")}}) {
      const auto reps = classes(n, f);
      std::set<LoopTable> expected;
      for (const auto& t : naive_filter(n, f)) expected.insert(testing::canonical_form_naive(t));
      EXPECT_EQ(std::vector<LoopTable>(expected.begin(), expected.end()), reps) << "order " << n;
      for (const auto& r : reps) EXPECT_EQ(canonical_form(r), r);
    }
  }
}

TEST(Search, Counts) {
  SearchSpec spec;
  spec.order = 4;
  spec.mode = SearchMode::up_to_isomorphism;
  EXPECT_EQ(count(spec), 2u);
  spec.constraints = {catalog_identity("left_cheban")};
  for (int n = 1; n <= 3; ++n) {
    spec.order = n;
    EXPECT_EQ(count(spec), 1u);
  }
  spec.order = 5;
  spec.constraints = {catalog_identity("cheban")};
  EXPECT_GE(count(spec), 1u);
  spec.order = 6;
  EXPECT_EQ(count(spec), 1u);
}

TEST(Search, StatsAreDeterministic) {
  SearchSpec spec;
  spec.order = 6;
  spec.mode = SearchMode::up_to_isomorphism;
  SearchStats a, b;
  const auto ra = enumerate_all(spec, &a);
  const auto rb = enumerate_all(spec, &b);
  EXPECT_EQ(ra, rb);
  EXPECT_EQ(a.nodes_expanded, b.nodes_expanded);
  EXPECT_EQ(a.solutions_found, 109u);
  EXPECT_EQ(a.isomorphism_rejections, 9408u - 109u);
  EXPECT_GT(a.nodes_expanded, 0u);
}

TEST(Search, ParallelMatchesSerial) {
  for (const auto& f : std::vector<std::vector<Identity>>{{}, {catalog_identity("left_cheban")}}) {
    EXPECT_EQ(labeled(6, f, 4), labeled(6, f, 1));
    EXPECT_EQ(classes(6, f, 3), classes(6, f, 1));
  }
  EXPECT_EQ(classes(8, {catalog_identity("cheban")}, 4), classes(8, {catalog_identity("cheban")}, 1));
}

TEST(Search, FirstOnly) {
  for (int jobs : {1, 4}) {
    SearchSpec spec;
    spec.order = 6;
    spec.mode = SearchMode::first_only;
    spec.jobs = jobs;
    spec.predicate = [](const LoopTable& t) { return !is_power_associative(t); };
    const auto out = enumerate_all(spec);
    ASSERT_EQ(out.size(), 1u);
    spec.mode = SearchMode::all_labeled;
    spec.jobs = 1;
    EXPECT_EQ(out[0], enumerate_all(spec).front());
  }
}

TEST(Search, PredicateFilters) {
  SearchSpec spec;
  spec.order = 5;
  spec.predicate = [](const LoopTable& t) { return is_commutative(t); };
  std::vector<LoopTable> expected;
  for (const auto& t : testing::all_loops_naive(5)) {
    if (testing::commutative_naive(t)) expected.push_back(t);
  }
  EXPECT_EQ(enumerate_all(spec), expected);
}

TEST(Search, BudgetExhaustion) {
  SearchSpec spec;
  spec.order = 7;
  spec.limits.max_nodes = 100;
  std::size_t seen = 0;
  const auto outcome = enumerate(spec, [&](const LoopTable&) { ++seen; });
  EXPECT_FALSE(outcome.complete);
  EXPECT_LE(outcome.stats.nodes_expanded, 100u);
  EXPECT_EQ(outcome.stats.solutions_found, seen);
  EXPECT_THROW(enumerate_all(spec), BudgetExceeded);
  EXPECT_THROW(count(spec), BudgetExceeded);
  spec.jobs = 4;
  EXPECT_FALSE(enumerate(spec, [](const LoopTable&) {}).complete);
  spec.jobs = 1;
  spec.limits = {0, 0.05};
  EXPECT_THROW(count(spec), BudgetExceeded);
}

TEST(Search, InvalidSpec) {
  SearchSpec spec;
  spec.order = 0;
  EXPECT_THROW(count(spec), std::invalid_argument);
  spec.order = kMaxOrder + 1;
  EXPECT_THROW(count(spec), std::invalid_argument);
  spec.order = 3;
  spec.jobs = 0;
  EXPECT_THROW(count(spec), std::invalid_argument);
}

TEST(FindMinimal, TrivialLoop) {
  const auto w = find_minimal({}, [](const LoopTable&) { return true; }, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->order, 1);
  EXPECT_EQ(w->table, LoopTable(testing::Rows{{0}}));
}

TEST(FindMinimal, NonassociativeLoop) {
  const auto w = find_minimal({}, [](const LoopTable& t) { return !is_associative(t); }, 6);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->order, 5);
  EXPECT_FALSE(testing::associative_naive(w->table));
}

TEST(FindMinimal, NuclearNonCentralLeftCheban) {
  const auto w = find_minimal({catalog_identity("left_cheban")},
                              [](const LoopTable& t) { return !nucleus(t).subset_of(center(t)); }, 8);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->order, 8);
  EXPECT_TRUE(is_isomorphic(w->table, models::example_3_3()));
}

TEST(FindMinimal, BudgetAndBound) {
  EXPECT_THROW(find_minimal({}, [](const LoopTable& t) { return t.order() > 7; }, 8, {1000, 0}), BudgetExceeded);
  EXPECT_THROW(find_minimal({}, {}, kMaxOrder + 1), std::invalid_argument);
}

}  // namespace
}  // namespace loopkit
