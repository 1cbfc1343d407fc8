#pragma once

#include "loopkit/loop_table.hpp"

namespace loopkit {

/// Relabeling (old label -> new label, fixing 0) that turns `loop` into its
/// canonical form.
Permutation canonical_labeling(const LoopTable& loop);

/// Lexicographically least table, rows concatenated, over all relabelings
/// that fix 0. Two loops are isomorphic iff their canonical forms are equal.
/// Exhaustive with prefix pruning: fast up to order 10 or so, but highly
/// symmetric tables of larger order (e.g. groups of order 27) can take very long.
LoopTable canonical_form(const LoopTable& loop);

bool is_isomorphic(const LoopTable& a, const LoopTable& b);

/// f(x) *2 g(y) = h(x *1 y) for all x, y. Throws OrderMismatch.
bool is_isotopism(const Permutation& f, const Permutation& g, const Permutation& h, const LoopTable& from,
                  const LoopTable& to);

}  // namespace loopkit
