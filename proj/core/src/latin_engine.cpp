#include "latin_engine.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace loopkit::detail {

namespace {

constexpr std::size_t kMaxInstances = std::size_t{1} << 22;

}  // namespace

int LatinEngine::compile(const Term& t, const std::vector<char>& vars, std::vector<Node>& out) {
  Node node{};
  switch (t.kind()) {
    case Term::Kind::Var: {
      std::size_t slot = 0;
      while (slot < vars.size() && vars[slot] != t.name()) ++slot;
      if (slot == vars.size()) throw std::invalid_argument(std::string("unquantified variable '") + t.name() + "'");
      node = {Op::Var, static_cast<std::uint8_t>(slot), 0};
      break;
    }
    case Term::Kind::One:
      node = {Op::One, 0, 0};
      break;
    case Term::Kind::RhoInv:
    case Term::Kind::LambdaInv: {
      const int a = compile(t.left(), vars, out);
      node = {t.kind() == Term::Kind::RhoInv ? Op::Rho : Op::Lambda, static_cast<std::uint8_t>(a), 0};
      break;
    }
    default: {
      const int a = compile(t.left(), vars, out);
      const int b = compile(t.right(), vars, out);
      const Op op = t.kind() == Term::Kind::Mul ? Op::Mul : (t.kind() == Term::Kind::LDiv ? Op::LDiv : Op::RDiv);
      node = {op, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
      break;
    }
  }
  if (out.size() >= 64) throw std::invalid_argument("identity too large for the search engine (64 nodes)");
  out.push_back(node);
  return static_cast<int>(out.size()) - 1;
}

LatinEngine::LatinEngine(int order, std::span<const Identity> constraints)
    : n_(order),
      n2_(order * order),
      full_mask_(order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1) {
  if (order < 1 || order > kMaxOrder) throw std::invalid_argument("search order out of range");

  std::size_t total = 0;
  for (const auto& id : constraints) {
    if (id.vars.size() > static_cast<std::size_t>(kMaxVars)) {
      throw std::invalid_argument("identity has more than " + std::to_string(kMaxVars) + " variables");
    }
    Program p;
    p.lhs_root = compile(id.lhs, id.vars, p.nodes);
    p.rhs_root = compile(id.rhs, id.vars, p.nodes);
    const auto prog = static_cast<std::uint16_t>(programs_.size());
    programs_.push_back(std::move(p));

    std::size_t count = 1;
    for (std::size_t i = 0; i < id.vars.size(); ++i) count *= static_cast<std::size_t>(n_);
    total += count;
    if (total > kMaxInstances) throw std::invalid_argument("too many ground instances for the search engine");
    for (std::size_t code = 0; code < count; ++code) {
      Instance inst{prog, {}};
      auto rest = code;
      for (std::size_t i = id.vars.size(); i-- > 0;) {
        inst.vars[i] = static_cast<std::uint8_t>(rest % static_cast<std::size_t>(n_));
        rest /= static_cast<std::size_t>(n_);
      }
      instances_.push_back(inst);
    }
  }

  cells_.assign(static_cast<std::size_t>(n2_), -1);
  row_pos_.assign(static_cast<std::size_t>(n2_), -1);
  col_pos_.assign(static_cast<std::size_t>(n2_), -1);
  row_used_.assign(static_cast<std::size_t>(n_), 0);
  col_used_.assign(static_cast<std::size_t>(n_), 0);
  watches_.resize(static_cast<std::size_t>(3 * n2_));
  for (int r = 1; r < n_; ++r) {
    for (int c = 1; c < n_; ++c) order_cells_.push_back(cell_key(r, c));
  }
}

bool LatinEngine::initialize() {
  for (int x = 0; x < n_; ++x) {
    if (!assign(cell_key(0, x), x)) return false;
    if (x && !assign(cell_key(x, 0), x)) return false;
  }
  // Nothing is watched yet, so the identity cells need no event processing.
  queue_head_ = trail_.size();
  for (std::uint32_t i = 0; i < instances_.size(); ++i) {
    if (!process(i)) return false;
  }
  return propagate();
}

bool LatinEngine::replay(const Decision& d) { return assign(d.first, d.second) && propagate(); }

bool LatinEngine::assign(int cell, int value) {
  const auto c = static_cast<std::size_t>(cell);
  if (cells_[c] >= 0) return cells_[c] == value;
  const int r = cell / n_;
  const int col = cell % n_;
  const std::uint64_t bit = std::uint64_t{1} << value;
  if ((row_used_[r] | col_used_[col]) & bit) return false;
  cells_[c] = static_cast<std::int8_t>(value);
  row_used_[r] |= bit;
  col_used_[col] |= bit;
  row_pos_[static_cast<std::size_t>(r * n_ + value)] = static_cast<std::int8_t>(col);
  col_pos_[static_cast<std::size_t>(col * n_ + value)] = static_cast<std::int8_t>(r);
  trail_.push_back(static_cast<std::uint16_t>(cell));
  return true;
}

void LatinEngine::undo(const Mark& m) {
  while (watch_trail_.size() > m.watch_trail) {
    watches_[watch_trail_.back()].pop_back();
    watch_trail_.pop_back();
  }
  while (trail_.size() > m.trail) {
    const int cell = trail_.back();
    trail_.pop_back();
    const int r = cell / n_;
    const int col = cell % n_;
    const int value = cells_[static_cast<std::size_t>(cell)];
    const std::uint64_t bit = std::uint64_t{1} << value;
    row_used_[r] &= ~bit;
    col_used_[col] &= ~bit;
    row_pos_[static_cast<std::size_t>(r * n_ + value)] = -1;
    col_pos_[static_cast<std::size_t>(col * n_ + value)] = -1;
    cells_[static_cast<std::size_t>(cell)] = -1;
  }
  queue_head_ = trail_.size();
}

void LatinEngine::watch(int key, std::uint32_t instance_index) {
  watches_[static_cast<std::size_t>(key)].push_back(instance_index);
  watch_trail_.push_back(static_cast<std::uint32_t>(key));
}

bool LatinEngine::propagate() {
  while (queue_head_ < trail_.size()) {
    const int cell = trail_[queue_head_++];
    const int r = cell / n_;
    const int c = cell % n_;
    const int v = cells_[static_cast<std::size_t>(cell)];
    for (const int key : {cell_key(r, c), row_value_key(r, v), col_value_key(c, v)}) {
      // An instance only waits on unknown keys and this key is now known, so
      // the list does not grow while it is scanned. Entries stay in place; the
      // ones that move elsewhere are stale until this assignment is undone.
      auto& list = watches_[static_cast<std::size_t>(key)];
      const std::size_t size = list.size();
      for (std::size_t i = 0; i < size; ++i) {
        if (!process(list[i])) return false;
      }
    }
  }
  return true;
}

LatinEngine::SideResult LatinEngine::eval_side(const Program& p, int root, const Instance& inst,
                                               std::array<int, 64>& vals) const {
  const int first = root == p.lhs_root ? 0 : p.lhs_root + 1;
  int blocked = -1;
  for (int i = first; i <= root; ++i) {
    const Node& node = p.nodes[static_cast<std::size_t>(i)];
    int out = -1;
    int key = -1;
    switch (node.op) {
      case Op::Var:
        out = inst.vars[node.a];
        break;
      case Op::One:
        out = 0;
        break;
      case Op::Mul: {
        const int a = vals[node.a];
        const int b = vals[node.b];
        if (a < 0 || b < 0) break;
        out = cells_[static_cast<std::size_t>(a * n_ + b)];
        if (out < 0) key = cell_key(a, b);
        break;
      }
      case Op::LDiv: {
        const int a = vals[node.a];
        const int b = vals[node.b];
        if (a < 0 || b < 0) break;
        out = row_pos_[static_cast<std::size_t>(a * n_ + b)];
        if (out < 0) key = row_value_key(a, b);
        break;
      }
      case Op::RDiv: {
        const int a = vals[node.a];
        const int b = vals[node.b];
        if (a < 0 || b < 0) break;
        out = col_pos_[static_cast<std::size_t>(b * n_ + a)];
        if (out < 0) key = col_value_key(b, a);
        break;
      }
      case Op::Rho: {
        const int a = vals[node.a];
        if (a < 0) break;
        out = row_pos_[static_cast<std::size_t>(a * n_)];
        if (out < 0) key = row_value_key(a, 0);
        break;
      }
      case Op::Lambda: {
        const int a = vals[node.a];
        if (a < 0) break;
        out = col_pos_[static_cast<std::size_t>(a * n_)];
        if (out < 0) key = col_value_key(a, 0);
        break;
      }
    }
    vals[static_cast<std::size_t>(i)] = out;
    if (key >= 0 && blocked < 0) blocked = key;
  }
  const int value = vals[static_cast<std::size_t>(root)];
  if (value >= 0) return {value, -1, false};
  // The root is blocked on its own lookup iff its operands are known.
  const Node& r = p.nodes[static_cast<std::size_t>(root)];
  bool root_blocked = false;
  switch (r.op) {
    case Op::Mul:
    case Op::LDiv:
    case Op::RDiv:
      root_blocked = vals[r.a] >= 0 && vals[r.b] >= 0;
      break;
    case Op::Rho:
    case Op::Lambda:
      root_blocked = vals[r.a] >= 0;
      break;
    default:
      break;
  }
  return {-1, blocked, root_blocked};
}

bool LatinEngine::force_root(const Program& p, int root, std::array<int, 64>& vals, int value, int key,
                             std::uint32_t idx) {
  const Node& r = p.nodes[static_cast<std::size_t>(root)];
  const int a = vals[r.a];
  int cell = -1;
  int entry = -1;
  switch (r.op) {
    case Op::Mul:  // a * b = value
      cell = cell_key(a, vals[r.b]);
      entry = value;
      break;
    case Op::LDiv:  // a \ b = value  <=>  a * value = b
      cell = cell_key(a, value);
      entry = vals[r.b];
      break;
    case Op::RDiv:  // a / b = value  <=>  value * b = a
      cell = cell_key(value, vals[r.b]);
      entry = a;
      break;
    case Op::Rho:  // a * value = 0
      cell = cell_key(a, value);
      entry = 0;
      break;
    case Op::Lambda:  // value * a = 0
      cell = cell_key(value, a);
      entry = 0;
      break;
    default:
      return false;
  }
  watch(key, idx);
  return assign(cell, entry);
}

bool LatinEngine::process(std::uint32_t idx) {
  const Instance& inst = instances_[idx];
  const Program& p = programs_[inst.program];
  std::array<int, 64> vals;
  const SideResult lhs = eval_side(p, p.lhs_root, inst, vals);
  const SideResult rhs = eval_side(p, p.rhs_root, inst, vals);
  if (lhs.value >= 0 && rhs.value >= 0) return lhs.value == rhs.value;
  if (lhs.value >= 0 && rhs.root_blocked) return force_root(p, p.rhs_root, vals, lhs.value, rhs.blocked_key, idx);
  if (rhs.value >= 0 && lhs.root_blocked) return force_root(p, p.lhs_root, vals, rhs.value, lhs.blocked_key, idx);
  watch(lhs.value < 0 ? lhs.blocked_key : rhs.blocked_key, idx);
  return true;
}

int LatinEngine::next_unknown(std::size_t& cursor) const {
  while (cursor < order_cells_.size() && cells_[static_cast<std::size_t>(order_cells_[cursor])] >= 0) ++cursor;
  return cursor < order_cells_.size() ? order_cells_[cursor] : -1;
}

bool LatinEngine::search(const NodeHook& on_node, const SolutionHook& on_solution) {
  return dfs(0, on_node, on_solution);
}

bool LatinEngine::dfs(std::size_t cursor, const NodeHook& on_node, const SolutionHook& on_solution) {
  const int cell = next_unknown(cursor);
  if (cell < 0) return on_solution(cells_);
  const int r = cell / n_;
  const int c = cell % n_;
  std::uint64_t candidates = full_mask_ & ~(row_used_[r] | col_used_[c]);
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (!on_node()) return false;
    const Mark m = mark();
    if (assign(cell, v) && propagate()) {
      if (!dfs(cursor + 1, on_node, on_solution)) {
        undo(m);
        return false;
      }
    }
    undo(m);
  }
  return true;
}

bool LatinEngine::split_after_row1(const NodeHook& on_node, std::vector<std::vector<Decision>>& prefixes) {
  std::vector<Decision> path;
  return dfs_split(0, on_node, path, prefixes);
}

bool LatinEngine::dfs_split(std::size_t cursor, const NodeHook& on_node, std::vector<Decision>& path,
                            std::vector<std::vector<Decision>>& prefixes) {
  const int cell = next_unknown(cursor);
  if (cell < 0 || cell / n_ >= 2) {
    prefixes.push_back(path);
    return true;
  }
  const int r = cell / n_;
  const int c = cell % n_;
  std::uint64_t candidates = full_mask_ & ~(row_used_[r] | col_used_[c]);
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (!on_node()) return false;
    const Mark m = mark();
    if (assign(cell, v) && propagate()) {
      path.emplace_back(cell, v);
      const bool keep_going = dfs_split(cursor + 1, on_node, path, prefixes);
      path.pop_back();
      if (!keep_going) {
        undo(m);
        return false;
      }
    }
    undo(m);
  }
  return true;
}

}  // namespace loopkit::detail
