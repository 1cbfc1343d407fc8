#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "loopkit/errors.hpp"

namespace loopkit {

/// Index of a loop element. Element 0 is the identity of every LoopTable.
using Element = int;

/// Largest order any table, set or search in loopkit accepts.
inline constexpr int kMaxOrder = 64;

/// A bijection on {0, ..., n-1}.
class Permutation {
 public:
  /// Identity permutation of degree n.
  static Permutation identity(int n);

  /// Throws std::invalid_argument unless `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Element> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Element operator()(Element x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const Element> images() const noexcept { return images_; }

  Permutation inverse() const;

  /// (*this * rhs)(x) = (*this)(rhs(x)); rhs is applied first.
  Permutation operator*(const Permutation& rhs) const;

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

/// Cayley table of a finite loop with identity element 0, plus the two
/// division tables. Immutable once constructed.
class LoopTable {
 public:
  /// Builds a loop from rows that already have 0 as identity.
  /// Throws ValidationError when the rows are not a normalized loop table.
  explicit LoopTable(const std::vector<std::vector<Element>>& rows);

  int order() const noexcept { return order_; }

  Element mul(Element a, Element b) const { return mul_[index(a, b)]; }
  /// The unique c with a*c = b.
  Element ldiv(Element a, Element b) const { return ldiv_[index(a, b)]; }
  /// The unique c with c*b = a.
  Element rdiv(Element a, Element b) const { return rdiv_[index(a, b)]; }

  /// y^rho: the unique c with y*c = 0.
  Element right_inverse(Element y) const { return ldiv(y, 0); }
  /// y^lambda: the unique c with c*y = 0.
  Element left_inverse(Element y) const { return rdiv(0, y); }

  Permutation left_translation(Element x) const;
  Permutation right_translation(Element x) const;

  std::vector<std::vector<Element>> rows() const;

  /// Row-major entries of the multiplication table.
  std::span<const std::uint8_t> entries() const noexcept { return mul_; }

  /// Table with every label mapped through `relabel` (relabel(0) must be 0).
  LoopTable relabeled(const Permutation& relabel) const;

  /// The opposite loop, x *op y = y * x.
  LoopTable opposite() const;

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }
  /// Lexicographic on the row-concatenated entries; shorter orders first.
  friend std::strong_ordering operator<=>(const LoopTable& a, const LoopTable& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.mul_ <=> b.mul_;
  }

 private:
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b);
  }

  int order_ = 0;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> ldiv_;
  std::vector<std::uint8_t> rdiv_;
};

/// A validated loop plus the relabeling that moved its identity to 0.
struct ValidatedTable {
  LoopTable table;
  /// Maps each input label to its label in `table`.
  Permutation relabel;
};

/// Checks a raw square array for the loop axioms. An identity element other
/// than 0 is swapped with 0; the swap is returned in `relabel`.
ValidatedTable validate(const std::vector<std::vector<int>>& raw);

}  // namespace loopkit
