#include "loopkit/identity_check.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace loopkit {

namespace {

constexpr int kUnset = -1;
using Slots = std::array<Element, 128>;

Element eval(const Term& t, const Slots& slots, const LoopTable& loop) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      const Element v = slots[static_cast<unsigned char>(t.name()) & 0x7f];
      if (v == kUnset) throw UnboundVariable(t.name());
      return v;
    }
    case Term::Kind::One:
      return 0;
    case Term::Kind::Mul:
      return loop.mul(eval(t.left(), slots, loop), eval(t.right(), slots, loop));
    case Term::Kind::LDiv:
      return loop.ldiv(eval(t.left(), slots, loop), eval(t.right(), slots, loop));
    case Term::Kind::RDiv:
      return loop.rdiv(eval(t.left(), slots, loop), eval(t.right(), slots, loop));
    case Term::Kind::RhoInv:
      return loop.right_inverse(eval(t.left(), slots, loop));
    case Term::Kind::LambdaInv:
      return loop.left_inverse(eval(t.left(), slots, loop));
  }
  return 0;
}

/// Walks all n^k assignments in lexicographic order; stops at the first
/// falsifying one and leaves it in `values`.
bool find_failure(const LoopTable& loop, const Identity& id, std::vector<Element>& values) {
  Slots slots;
  slots.fill(kUnset);
  const int n = loop.order();
  const std::size_t k = id.vars.size();
  values.assign(k, 0);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) slots[static_cast<unsigned char>(id.vars[i]) & 0x7f] = values[i];
    if (eval(id.lhs, slots, loop) != eval(id.rhs, slots, loop)) return true;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return false;
    }
    if (k == 0) return false;
  }
}

}  // namespace

Element eval_term(const Term& term, const Assignment& assignment, const LoopTable& loop) {
  Slots slots;
  slots.fill(kUnset);
  for (const auto& [name, value] : assignment) {
    if (value < 0 || value >= loop.order()) throw std::out_of_range("assignment value outside the loop");
    slots[static_cast<unsigned char>(name) & 0x7f] = value;
  }
  return eval(term, slots, loop);
}

bool holds(const LoopTable& loop, const Identity& identity) { return !counterexample(loop, identity).has_value(); }

std::optional<Assignment> counterexample(const LoopTable& loop, const Identity& identity) {
  std::vector<Element> values;
  if (!find_failure(loop, identity, values)) return std::nullopt;
  Assignment out;
  for (std::size_t i = 0; i < identity.vars.size(); ++i) out[identity.vars[i]] = values[i];
  return out;
}

}  // namespace loopkit
