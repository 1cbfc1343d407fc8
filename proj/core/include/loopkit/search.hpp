#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "loopkit/loop_table.hpp"
#include "loopkit/term.hpp"

namespace loopkit {

enum class SearchMode {
  /// Every labeled table (identity fixed at 0), in lexicographic order.
  all_labeled,
  /// One canonical form per isomorphism class, sorted.
  up_to_isomorphism,
  /// The lexicographically first labeled solution only.
  first_only,
};

/// Zero means unlimited.
struct SearchLimits {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

/// Filter applied to candidate tables. In up_to_isomorphism mode it sees one
/// canonical representative per class, so it should be isomorphism invariant.
using LoopPredicate = std::function<bool(const LoopTable&)>;

struct SearchSpec {
  int order = 1;
  std::vector<Identity> constraints;
  SearchMode mode = SearchMode::all_labeled;
  LoopPredicate predicate;
  SearchLimits limits;
  /// Worker threads; the tree is split after row 1 is complete.
  int jobs = 1;
};

struct SearchStats {
  /// Value choices tried at branch points.
  std::uint64_t nodes_expanded = 0;
  /// Tables passed to the sink.
  std::uint64_t solutions_found = 0;
  /// Labeled solutions dropped because their class was already seen.
  std::uint64_t isomorphism_rejections = 0;
  double elapsed_seconds = 0.0;
};

struct SearchOutcome {
  SearchStats stats;
  /// False when the node or time budget ran out; emitted results are then partial.
  bool complete = true;
};

using LoopSink = std::function<void(const LoopTable&)>;

/// Enumerates loops of `spec.order` satisfying every constraint. A ground
/// instance of a constraint is checked as soon as every cell it reads is
/// known, and a violated instance prunes the branch. Throws
/// std::invalid_argument for an invalid spec.
SearchOutcome enumerate(const SearchSpec& spec, const LoopSink& sink);

/// Collects enumerate()'s output; throws BudgetExceeded if the budget runs out.
std::vector<LoopTable> enumerate_all(const SearchSpec& spec, SearchStats* stats = nullptr);

/// Number of tables enumerate() would emit. Throws BudgetExceeded.
std::uint64_t count(const SearchSpec& spec);

struct MinimalWitness {
  int order;
  LoopTable table;
};

/// Least order <= max_order with a loop meeting the constraints and the
/// predicate. The witness is the canonical form of the first labeled
/// solution at that order. Throws BudgetExceeded.
std::optional<MinimalWitness> find_minimal(const std::vector<Identity>& constraints, const LoopPredicate& predicate,
                                           int max_order, const SearchLimits& limits = {});

nlohmann::json to_json(const SearchStats& stats);

}  // namespace loopkit
