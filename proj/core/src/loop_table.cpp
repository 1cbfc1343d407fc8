#include "loopkit/loop_table.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace loopkit {

namespace {

std::string describe_duplicate(const char* what, int line, int value) {
  return std::string("not a Latin square: ") + what + " " + std::to_string(line) + " contains " +
         std::to_string(value) + " more than once";
}

void check_shape(const std::vector<std::vector<int>>& raw) {
  const auto n = raw.size();
  if (n == 0) throw ValidationError(ValidationError::Kind::NonSquareInput, "empty table");
  if (n > static_cast<std::size_t>(kMaxOrder)) {
    throw ValidationError(ValidationError::Kind::NonSquareInput,
                          "order " + std::to_string(n) + " exceeds the maximum of " + std::to_string(kMaxOrder));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw ValidationError(ValidationError::Kind::NonSquareInput,
                            "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                                " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i][j] < 0 || static_cast<std::size_t>(raw[i][j]) >= n) {
        throw ValidationError(ValidationError::Kind::EntryOutOfRange,
                              "entry at row " + std::to_string(i) + ", column " + std::to_string(j) + " is " +
                                  std::to_string(raw[i][j]) + ", outside 0.." + std::to_string(n - 1));
      }
    }
  }
}

void check_latin(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      const auto v = static_cast<std::size_t>(raw[i][j]);
      if (seen[v]) throw ValidationError(ValidationError::Kind::NotLatinSquare, describe_duplicate("row", i, raw[i][j]));
      seen[v] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      const auto v = static_cast<std::size_t>(raw[i][j]);
      if (seen[v]) {
        throw ValidationError(ValidationError::Kind::NotLatinSquare, describe_duplicate("column", j, raw[i][j]));
      }
      seen[v] = true;
    }
  }
}

bool is_identity_element(const std::vector<std::vector<int>>& raw, int e) {
  const int n = static_cast<int>(raw.size());
  for (int x = 0; x < n; ++x) {
    if (raw[e][x] != x || raw[x][e] != x) return false;
  }
  return true;
}

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<Element> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Element x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<Element>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<Element> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = (*this)(rhs(static_cast<Element>(i)));
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Element>(i)) return false;
  }
  return true;
}

LoopTable::LoopTable(const std::vector<std::vector<Element>>& rows) {
  check_shape(rows);
  check_latin(rows);
  if (!is_identity_element(rows, 0)) {
    throw ValidationError(ValidationError::Kind::NoIdentityElement, "element 0 is not a two-sided identity");
  }
  order_ = static_cast<int>(rows.size());
  const auto cells = static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_);
  mul_.resize(cells);
  ldiv_.resize(cells);
  rdiv_.resize(cells);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int c = rows[a][b];
      mul_[index(a, b)] = static_cast<std::uint8_t>(c);
      ldiv_[index(a, c)] = static_cast<std::uint8_t>(b);
      rdiv_[index(c, b)] = static_cast<std::uint8_t>(a);
    }
  }
}

Permutation LoopTable::left_translation(Element x) const {
  std::vector<Element> images(static_cast<std::size_t>(order_));
  for (int y = 0; y < order_; ++y) images[static_cast<std::size_t>(y)] = mul(x, y);
  return Permutation(std::move(images));
}

Permutation LoopTable::right_translation(Element x) const {
  std::vector<Element> images(static_cast<std::size_t>(order_));
  for (int y = 0; y < order_; ++y) images[static_cast<std::size_t>(y)] = mul(y, x);
  return Permutation(std::move(images));
}

std::vector<std::vector<Element>> LoopTable::rows() const {
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(order_), std::vector<Element>(static_cast<std::size_t>(order_)));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  }
  return out;
}

LoopTable LoopTable::relabeled(const Permutation& relabel) const {
  if (relabel.degree() != order_) throw OrderMismatch("relabeling degree differs from table order");
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(order_), std::vector<Element>(static_cast<std::size_t>(order_)));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) out[relabel(a)][relabel(b)] = relabel(mul(a, b));
  }
  return LoopTable(out);
}

LoopTable LoopTable::opposite() const {
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(order_), std::vector<Element>(static_cast<std::size_t>(order_)));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) out[a][b] = mul(b, a);
  }
  return LoopTable(out);
}

ValidatedTable validate(const std::vector<std::vector<int>>& raw) {
  check_shape(raw);
  check_latin(raw);
  const int n = static_cast<int>(raw.size());
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    if (is_identity_element(raw, x)) e = x;
  }
  if (e < 0) throw ValidationError(ValidationError::Kind::NoIdentityElement, "no two-sided identity element");

  std::vector<Element> swap(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[static_cast<std::size_t>(e)]);
  Permutation relabel(std::move(swap));

  std::vector<std::vector<Element>> rows(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rows[relabel(a)][relabel(b)] = relabel(raw[a][b]);
  }
  return ValidatedTable{LoopTable(rows), std::move(relabel)};
}

}  // namespace loopkit
