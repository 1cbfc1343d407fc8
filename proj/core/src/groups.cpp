#include "loopkit/groups.hpp"

#include <algorithm>
#include <array>

namespace loopkit::groups {

LoopTable from_operation(int n, const std::function<Element(Element, Element)>& op) {
  std::vector<std::vector<Element>> rows(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rows[a][b] = op(a, b);
  }
  return LoopTable(rows);
}

LoopTable cyclic(int n) {
  return from_operation(n, [n](Element a, Element b) { return (a + b) % n; });
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  const int m = b.order();
  return from_operation(a.order() * m, [&](Element x, Element y) {
    return a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  });
}

LoopTable dihedral(int m) {
  return from_operation(2 * m, [m](Element x, Element y) {
    const bool xs = x >= m;
    const bool ys = y >= m;
    const int a = x % m;
    const int b = y % m;
    if (!xs && !ys) return (a + b) % m;
    if (!xs && ys) return m + (b - a + m) % m;
    if (xs && !ys) return m + (a + b) % m;
    return (b - a + m) % m;
  });
}

LoopTable quaternion() {
  // unit products: sign bit and unit index for 1, i, j, k
  static constexpr std::array<std::array<int, 4>, 4> kUnit = {{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> kNeg = {{
      {0, 0, 0, 0},
      {0, 1, 0, 1},
      {0, 1, 1, 0},
      {0, 0, 1, 1},
  }};
  return from_operation(8, [](Element x, Element y) {
    const int ux = x % 4;
    const int uy = y % 4;
    const int sign = (x / 4) ^ (y / 4) ^ kNeg[ux][uy];
    return kUnit[ux][uy] + 4 * sign;
  });
}

LoopTable symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  return from_operation(6, [&](Element x, Element y) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = perms[x][perms[y][i]];
    return index_of(r);
  });
}

}  // namespace loopkit::groups
