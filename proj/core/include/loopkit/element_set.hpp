#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "loopkit/loop_table.hpp"

namespace loopkit {

/// Subset of {0..order-1}, stored as a 64-bit mask (kMaxOrder is 64).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int order) : order_(order) {}
  ElementSet(int order, std::initializer_list<Element> members) : order_(order) {
    for (Element x : members) insert(x);
  }

  static ElementSet full(int order) {
    ElementSet s(order);
    s.bits_ = order >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << order) - 1);
    return s;
  }

  int order() const noexcept { return order_; }
  bool contains(Element x) const noexcept { return (bits_ >> x) & 1U; }
  void insert(Element x) noexcept { bits_ |= std::uint64_t{1} << x; }
  void erase(Element x) noexcept { bits_ &= ~(std::uint64_t{1} << x); }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return *this == full(order_); }
  std::uint64_t bits() const noexcept { return bits_; }

  bool subset_of(const ElementSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  /// Members in ascending order.
  std::vector<Element> members() const {
    std::vector<Element> out;
    for (auto b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    a.bits_ &= b.bits_;
    return a;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int order_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace loopkit
