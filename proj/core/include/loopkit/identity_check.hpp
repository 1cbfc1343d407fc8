#pragma once

#include <map>
#include <optional>

#include "loopkit/loop_table.hpp"
#include "loopkit/term.hpp"

namespace loopkit {

using Assignment = std::map<char, Element>;

/// Evaluates `term` in `loop`; One is element 0. Throws UnboundVariable.
Element eval_term(const Term& term, const Assignment& assignment, const LoopTable& loop);

/// True iff the identity holds for every assignment of its variables.
bool holds(const LoopTable& loop, const Identity& identity);

/// First falsifying assignment in lexicographic order (variables in
/// `identity.vars` order, the first one most significant), if any.
std::optional<Assignment> counterexample(const LoopTable& loop, const Identity& identity);

}  // namespace loopkit
