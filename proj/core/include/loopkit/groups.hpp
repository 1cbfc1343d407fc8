#pragma once

#include <functional>

#include "loopkit/loop_table.hpp"

namespace loopkit::groups {

/// Table of an operation on {0..n-1} whose identity is 0.
LoopTable from_operation(int n, const std::function<Element(Element, Element)>& op);

/// Z_n with a*b = (a + b) mod n.
LoopTable cyclic(int n);

/// (a, b) is labeled a * B.order() + b.
LoopTable direct_product(const LoopTable& a, const LoopTable& b);

/// Dihedral group of order 2m: r^k is k, s r^k is m + k.
LoopTable dihedral(int m);

/// Quaternion group: 1, i, j, k are 0..3 and their negatives 4..7.
LoopTable quaternion();

/// Symmetric group on 3 letters; permutations of {0,1,2} in lexicographic
/// order of their image lists, product (pq)(i) = p(q(i)).
LoopTable symmetric3();

}  // namespace loopkit::groups
