#include "support.hpp"

#include <loopkit/groups.hpp>

namespace loopkit::testing {

std::vector<LoopTable> small_abelian_groups() {
  using namespace groups;
  const auto z2 = cyclic(2);
  return {cyclic(1), z2,     cyclic(3), cyclic(4), direct_product(z2, z2), cyclic(5), cyclic(6), cyclic(7),
          cyclic(8), direct_product(cyclic(4), z2), direct_product(direct_product(z2, z2), z2)};
}

std::vector<LoopTable> small_groups() {
  auto out = small_abelian_groups();
  out.push_back(groups::dihedral(3));
  out.push_back(groups::dihedral(4));
  out.push_back(groups::quaternion());
  return out;
}

}  // namespace loopkit::testing
