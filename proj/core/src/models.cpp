#include "loopkit/models.hpp"

#include "loopkit/groups.hpp"

namespace loopkit::models {

LoopTable example_3_3() {
  return LoopTable({
      {0, 1, 2, 3, 4, 5, 6, 7},
      {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 4, 0, 6, 1, 7, 3, 5},
      {3, 5, 1, 7, 0, 6, 2, 4},
      {4, 2, 6, 0, 7, 1, 5, 3},
      {5, 3, 7, 1, 6, 0, 4, 2},
      {6, 7, 4, 5, 2, 3, 0, 1},
      {7, 6, 5, 4, 3, 2, 1, 0},
  });
}

LoopTable heisenberg_27() {
  // [1 a c; 0 1 b; 0 0 1] * [1 a' c'; 0 1 b'; 0 0 1] has corner c + c' + a b'.
  return groups::from_operation(27, [](Element x, Element y) {
    const int a = x / 9, b = (x / 3) % 3, c = x % 3;
    const int a2 = y / 9, b2 = (y / 3) % 3, c2 = y % 3;
    return ((a + a2) % 3) * 9 + ((b + b2) % 3) * 3 + (c + c2 + a * b2) % 3;
  });
}

}  // namespace loopkit::models
