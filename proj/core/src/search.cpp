#include "loopkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "latin_engine.hpp"
#include "loopkit/isomorphism.hpp"

namespace loopkit {

namespace {

using Clock = std::chrono::steady_clock;
using detail::LatinEngine;
using Prefix = std::vector<LatinEngine::Decision>;

class Budget {
 public:
  explicit Budget(const SearchLimits& limits) : max_nodes_(limits.max_nodes) {
    if (limits.max_seconds > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(limits.max_seconds));
      timed_ = true;
    }
  }

  /// Counts one node; false once the budget is gone.
  bool tick() {
    const auto k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes_ && k > max_nodes_) exhausted_.store(true, std::memory_order_relaxed);
    if (timed_ && (k & 255) == 0 && Clock::now() > deadline_) exhausted_.store(true, std::memory_order_relaxed);
    return !exhausted_.load(std::memory_order_relaxed);
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return std::min(nodes_.load(), max_nodes_ ? max_nodes_ : std::numeric_limits<std::uint64_t>::max()); }

 private:
  std::uint64_t max_nodes_;
  bool timed_ = false;
  Clock::time_point deadline_{};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

LoopTable to_table(std::span<const std::int8_t> cells, int n) {
  std::vector<std::vector<Element>> rows(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) rows[r][c] = cells[static_cast<std::size_t>(r * n + c)];
  }
  return LoopTable(rows);
}

using Visit = std::function<bool(const LoopTable&)>;

/// Searches the subtree below `prefix`; `visit` returns false to stop.
/// Returns false if the search was cut short (by visit or the budget).
bool run_subtree(const SearchSpec& spec, const Prefix& prefix, Budget& budget, const Visit& visit) {
  LatinEngine engine(spec.order, spec.constraints);
  if (!engine.initialize()) return true;
  for (const auto& d : prefix) {
    if (!engine.replay(d)) return true;
  }
  return engine.search([&] { return budget.tick(); },
                       [&](std::span<const std::int8_t> cells) { return visit(to_table(cells, spec.order)); });
}

bool accepts(const SearchSpec& spec, const LoopTable& t) { return !spec.predicate || spec.predicate(t); }

/// What one subtree contributes to the final result.
struct Partial {
  std::vector<LoopTable> tables;  // labeled modes
  std::set<LoopTable> classes;    // up_to_isomorphism
  std::uint64_t labeled = 0;
};

Visit collector(const SearchSpec& spec, Partial& part) {
  switch (spec.mode) {
    case SearchMode::up_to_isomorphism:
      return [&part](const LoopTable& t) {
        ++part.labeled;
        part.classes.insert(canonical_form(t));
        return true;
      };
    case SearchMode::first_only:
      return [&spec, &part](const LoopTable& t) {
        if (!accepts(spec, t)) return true;
        part.tables.push_back(t);
        return false;
      };
    case SearchMode::all_labeled:
      break;
  }
  return [&spec, &part](const LoopTable& t) {
    if (accepts(spec, t)) part.tables.push_back(t);
    return true;
  };
}

std::vector<Partial> run_parallel(const SearchSpec& spec, Budget& budget) {
  std::vector<Prefix> prefixes;
  {
    LatinEngine splitter(spec.order, spec.constraints);
    if (!splitter.initialize()) return {};
    if (!splitter.split_after_row1([&] { return budget.tick(); }, prefixes)) return {};
  }
  std::vector<Partial> parts(prefixes.size());
  std::atomic<std::size_t> next{0};
  // first_only: partitions past the earliest one holding a solution are skipped.
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || budget.exhausted()) return;
      if (spec.mode == SearchMode::first_only && i > first_hit.load()) continue;
      run_subtree(spec, prefixes[i], budget, collector(spec, parts[i]));
      if (spec.mode == SearchMode::first_only && !parts[i].tables.empty()) {
        auto seen = first_hit.load();
        while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, spec.jobs));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::min(jobs, prefixes.size()); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return parts;
}

void validate_spec(const SearchSpec& spec) {
  if (spec.order < 1 || spec.order > kMaxOrder) {
    throw std::invalid_argument("search order must be in 1.." + std::to_string(kMaxOrder));
  }
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
}

}  // namespace

SearchOutcome enumerate(const SearchSpec& spec, const LoopSink& sink) {
  validate_spec(spec);
  const auto start = Clock::now();
  Budget budget(spec.limits);
  SearchOutcome outcome;
  auto& stats = outcome.stats;
  auto emit = [&](const LoopTable& t) {
    ++stats.solutions_found;
    sink(t);
  };

  std::vector<Partial> parts;
  if (spec.jobs <= 1) {
    Partial part;
    if (spec.mode == SearchMode::up_to_isomorphism) {
      run_subtree(spec, {}, budget, collector(spec, part));
    } else {
      // Labeled modes stream straight to the sink.
      run_subtree(spec, {}, budget, [&](const LoopTable& t) {
        if (!accepts(spec, t)) return true;
        emit(t);
        return spec.mode != SearchMode::first_only;
      });
    }
    parts.push_back(std::move(part));
  } else {
    parts = run_parallel(spec, budget);
  }

  if (spec.mode == SearchMode::up_to_isomorphism) {
    std::set<LoopTable> classes;
    std::uint64_t labeled = 0;
    for (auto& p : parts) {
      labeled += p.labeled;
      classes.merge(p.classes);
    }
    stats.isomorphism_rejections = labeled - classes.size();
    for (const auto& t : classes) {
      if (accepts(spec, t)) emit(t);
    }
  } else {
    for (const auto& p : parts) {
      for (const auto& t : p.tables) {
        emit(t);
        if (spec.mode == SearchMode::first_only) break;
      }
      if (spec.mode == SearchMode::first_only && stats.solutions_found > 0) break;
    }
  }

  outcome.complete = !budget.exhausted();
  stats.nodes_expanded = budget.nodes();
  stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return outcome;
}

std::vector<LoopTable> enumerate_all(const SearchSpec& spec, SearchStats* stats) {
  std::vector<LoopTable> out;
  const auto outcome = enumerate(spec, [&](const LoopTable& t) { out.push_back(t); });
  if (stats) *stats = outcome.stats;
  if (!outcome.complete) throw BudgetExceeded("search budget exhausted after " + std::to_string(out.size()) + " tables");
  return out;
}

std::uint64_t count(const SearchSpec& spec) {
  std::uint64_t n = 0;
  const auto outcome = enumerate(spec, [&](const LoopTable&) { ++n; });
  if (!outcome.complete) throw BudgetExceeded("search budget exhausted after " + std::to_string(n) + " tables");
  return n;
}

std::optional<MinimalWitness> find_minimal(const std::vector<Identity>& constraints, const LoopPredicate& predicate,
                                           int max_order, const SearchLimits& limits) {
  if (max_order > kMaxOrder) throw std::invalid_argument("max_order exceeds the configured bound");
  for (int n = 1; n <= max_order; ++n) {
    SearchSpec spec;
    spec.order = n;
    spec.constraints = constraints;
    spec.mode = SearchMode::first_only;
    spec.predicate = predicate;
    spec.limits = limits;
    std::optional<LoopTable> found;
    const auto outcome = enumerate(spec, [&](const LoopTable& t) { found = t; });
    if (found) return MinimalWitness{n, canonical_form(*found)};
    if (!outcome.complete) throw BudgetExceeded("search budget exhausted at order " + std::to_string(n));
  }
  return std::nullopt;
}

nlohmann::json to_json(const SearchStats& stats) {
  return {
      {"nodes_expanded", stats.nodes_expanded},
      {"solutions_found", stats.solutions_found},
      {"isomorphism_rejections", stats.isomorphism_rejections},
      {"elapsed_seconds", stats.elapsed_seconds},
  };
}

}  // namespace loopkit
