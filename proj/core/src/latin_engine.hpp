#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "loopkit/loop_table.hpp"
#include "loopkit/term.hpp"

namespace loopkit::detail {

/// Backtracking completion of a normalized Latin square (row and column 0
/// fixed to the identity) under a set of identities.
///
/// Every ground instance of every identity is evaluated against the partial
/// table. An instance whose value is not yet determined waits on one key that
/// blocks it: an unknown cell (for a product), or a row/column that does not
/// yet contain a value (for a division or inverse). When that key becomes
/// known the instance is re-evaluated and either decided, forced, or moved to
/// a new key. All moves are recorded on a trail and undone on backtrack, so
/// each instance is always either fully ground and satisfied or waiting on a
/// key that is still unknown.
///
/// If one side is known and the other is blocked only at its root operation,
/// the root's missing cell is implied and assigned directly.
class LatinEngine {
 public:
  using Decision = std::pair<int, int>;  // (cell index, value)

  LatinEngine(int order, std::span<const Identity> constraints);

  /// Assigns row and column 0 and evaluates every instance once. Returns false
  /// if the constraints are already inconsistent.
  bool initialize();

  /// Applies a decision from another engine's prefix. Returns false on conflict.
  bool replay(const Decision& d);

  /// Called at every branch point before a value is tried; returning false
  /// aborts the search.
  using NodeHook = std::function<bool()>;
  /// Receives each complete table; returning false stops the search.
  using SolutionHook = std::function<bool(std::span<const std::int8_t>)>;

  /// Depth-first search in row-major cell order, values ascending. Returns
  /// false if a hook stopped it.
  bool search(const NodeHook& on_node, const SolutionHook& on_solution);

  /// Enumerates the decision sequences that complete row 1 (the split points
  /// for parallel search). Returns false if on_node stopped it.
  bool split_after_row1(const NodeHook& on_node, std::vector<std::vector<Decision>>& prefixes);

  int order() const noexcept { return n_; }

 private:
  static constexpr int kMaxVars = 8;

  enum class Op : std::uint8_t { Var, One, Mul, LDiv, RDiv, Rho, Lambda };

  struct Node {
    Op op;
    std::uint8_t a;  // child node index, or variable slot for Var
    std::uint8_t b;
  };

  struct Program {
    std::vector<Node> nodes;  // postfix; lhs nodes then rhs nodes
    int lhs_root = 0;
    int rhs_root = 0;
  };

  struct Instance {
    std::uint16_t program;
    std::array<std::uint8_t, kMaxVars> vars;
  };

  struct SideResult {
    int value;        // -1 when unknown
    int blocked_key;  // key of some blocked node when unknown
    bool root_blocked;
  };

  struct Mark {
    std::size_t trail;
    std::size_t watch_trail;
  };

  static int compile(const Term& t, const std::vector<char>& vars, std::vector<Node>& out);

  int cell_key(int r, int c) const { return r * n_ + c; }
  int row_value_key(int r, int v) const { return n2_ + r * n_ + v; }
  int col_value_key(int c, int v) const { return 2 * n2_ + c * n_ + v; }

  SideResult eval_side(const Program& p, int root, const Instance& inst, std::array<int, 64>& vals) const;
  /// Evaluates an instance and decides, forces, or re-registers it.
  bool process(std::uint32_t instance_index);
  void watch(int key, std::uint32_t instance_index);
  bool force_root(const Program& p, int root, std::array<int, 64>& vals, int value, int key, std::uint32_t idx);

  bool assign(int cell, int value);
  bool propagate();
  Mark mark() const { return {trail_.size(), watch_trail_.size()}; }
  void undo(const Mark& m);
  int next_unknown(std::size_t& cursor) const;

  bool dfs(std::size_t cursor, const NodeHook& on_node, const SolutionHook& on_solution);
  bool dfs_split(std::size_t cursor, const NodeHook& on_node, std::vector<Decision>& path,
                 std::vector<std::vector<Decision>>& prefixes);

  int n_;
  int n2_;
  std::uint64_t full_mask_;
  std::vector<Program> programs_;
  std::vector<Instance> instances_;

  std::vector<std::int8_t> cells_;
  std::vector<std::int8_t> row_pos_;  // row_pos_[r*n+v] = column holding v in row r
  std::vector<std::int8_t> col_pos_;  // col_pos_[c*n+v] = row holding v in column c
  std::vector<std::uint64_t> row_used_;
  std::vector<std::uint64_t> col_used_;
  std::vector<std::uint16_t> trail_;
  std::size_t queue_head_ = 0;

  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<std::uint32_t> watch_trail_;

  std::vector<int> order_cells_;  // free cells in row-major order
};

}  // namespace loopkit::detail
