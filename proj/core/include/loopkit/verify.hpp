#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "loopkit/loop_table.hpp"
#include "loopkit/search.hpp"

namespace loopkit::verify {

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict verdict);

struct ClaimResult {
  std::string claim_id;
  std::string statement;
  /// Which loops were examined, e.g. "left Cheban loops of order 1..8".
  std::string scope;
  Verdict verdict = Verdict::pass;
  /// Counterexample tables; nonempty whenever the verdict is fail.
  std::vector<LoopTable> witnesses;
  /// Paths written by save_witnesses, parallel to `witnesses`.
  std::vector<std::string> witness_files;
  std::vector<std::string> notes;
};

struct SuiteConfig {
  /// Bound for searches constrained by identities.
  int max_order = 8;
  /// Bound for claims that filter every loop of an order; capped at max_order.
  int unconstrained_max_order = 6;
  /// Applied to each individual search. An exhausted budget skips the claim.
  SearchLimits limits;
  int jobs = 1;
  /// Replaces the embedded order-8 example (harness self-test).
  std::optional<LoopTable> example_override;
};

struct ClaimInfo {
  std::string_view id;
  std::string_view statement;
};

/// Every claim the suite knows, in run order.
std::span<const ClaimInfo> claims();

/// Throws std::invalid_argument for an unknown id.
ClaimResult run_claim(std::string_view claim_id, const SuiteConfig& config = {});

/// Runs every claim; enumerations are shared between claims.
std::vector<ClaimResult> run_suite(const SuiteConfig& config = {});

bool all_passed(std::span<const ClaimResult> results);

/// Writes each witness as <dir>/<claim_id>_<k>.tbl and records the paths.
void save_witnesses(std::vector<ClaimResult>& results, const std::filesystem::path& dir);

nlohmann::json to_json(const ClaimResult& result);
nlohmann::json to_json(std::span<const ClaimResult> results);

/// One line per claim, then witness tables for failures.
std::string render_text(std::span<const ClaimResult> results);

}  // namespace loopkit::verify
