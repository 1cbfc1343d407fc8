#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include <loopkit/groups.hpp>
#include <loopkit/models.hpp>
#include <loopkit/table_io.hpp>
#include <loopkit/verify.hpp>

namespace loopkit {
namespace {

using verify::Verdict;

TEST(Models, ExampleTable) {
  const auto l = models::example_3_3();
  EXPECT_EQ(l.mul(6, 3), 5);
  for (int x = 0; x < 8; ++x) EXPECT_EQ(l.mul(0, x), x);
}

TEST(Verify, ClaimIdsAreUnique) {
  std::set<std::string_view> ids;
  for (const auto& c : verify::claims()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  EXPECT_EQ(ids.size(), 14u);
  EXPECT_THROW(verify::run_claim("no_such_claim"), std::invalid_argument);
}

TEST(Verify, SuiteAtSmallBoundPasses) {
  verify::SuiteConfig config;
  config.max_order = 5;
  const auto results = verify::run_suite(config);
  for (const auto& r : results) EXPECT_EQ(r.verdict, Verdict::pass) << r.claim_id;
  EXPECT_TRUE(verify::all_passed(results));
}

TEST(Verify, DegenerateBoundReportsScope) {
  verify::SuiteConfig config;
  config.max_order = 1;
  const auto results = verify::run_suite(config);
  EXPECT_TRUE(verify::all_passed(results));
  const auto& m = results[1];
  EXPECT_EQ(m.claim_id, "example_minimality");
  EXPECT_NE(m.scope.find("not reached"), std::string::npos);
}

TEST(Verify, FixedModelClaims) {
  EXPECT_EQ(verify::run_claim("example_fidelity").verdict, Verdict::pass);
  EXPECT_EQ(verify::run_claim("odd_class_two_group_not_cheban").verdict, Verdict::pass);
}

TEST(Verify, CorruptedExampleFailsWithWitness) {
  verify::SuiteConfig config;
  config.max_order = 3;
  config.example_override = groups::symmetric3();
  const auto r = verify::run_claim("example_fidelity", config);
  EXPECT_EQ(r.verdict, Verdict::fail);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0], groups::symmetric3());
}

TEST(Verify, BudgetSkipsRatherThanPasses) {
  verify::SuiteConfig config;
  config.max_order = 6;
  config.limits.max_nodes = 10;
  const auto r = verify::run_claim("left_cheban_iff_lcc_squares", config);
  EXPECT_EQ(r.verdict, Verdict::skipped);
  EXPECT_FALSE(verify::all_passed(std::vector<verify::ClaimResult>{r}));
}

TEST(Verify, ReportsAndWitnessFiles) {
  verify::SuiteConfig config;
  config.max_order = 2;
  config.example_override = groups::cyclic(8);
  auto results = verify::run_suite(config);
  const auto dir = std::filesystem::temp_directory_path() / "loopkit_verify_witnesses";
  std::filesystem::remove_all(dir);
  verify::save_witnesses(results, dir);
  const auto doc = verify::to_json(results);
  EXPECT_FALSE(doc["all_passed"].get<bool>());
  EXPECT_EQ(doc["claims"].size(), results.size());
  EXPECT_EQ(doc["claims"][0]["verdict"], "fail");
  const auto path = doc["claims"][0]["witness_files"][0].get<std::string>();
  EXPECT_EQ(read_table_file(path).table, groups::cyclic(8));
  const auto text = verify::render_text(results);
  EXPECT_NE(text.find("FAIL    example_fidelity"), std::string::npos);
  EXPECT_NE(text.find("witness 1 for example_fidelity"), std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace loopkit
