#pragma once

#include "loopkit/loop_table.hpp"

namespace loopkit::models {

/// Order-8 left Cheban loop in which element 1 is nuclear but not central.
LoopTable example_3_3();

/// Upper unitriangular 3x3 matrices over GF(3): the nonabelian group of
/// order 27, exponent 3 and nilpotency class 2. The matrix with
/// superdiagonal (a, b) and corner c is labeled 9a + 3b + c.
LoopTable heisenberg_27();

}  // namespace loopkit::models
