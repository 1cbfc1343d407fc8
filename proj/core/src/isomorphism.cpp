#include "loopkit/isomorphism.hpp"

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

namespace loopkit {

namespace {

// Builds the lex-least relabeled table cell by cell in row-major order over
// rows and columns 1..n-1 (row and column 0 are fixed by any relabeling that
// fixes 0). A product whose label is still free always takes the next unused
// label, since any other choice yields a larger entry at that cell. The only
// real choices are which element receives the next label when a row or
// column index is still unlabeled; those are branched on, with the partial
// table compared against the best one found so far.
class Canonizer {
 public:
  explicit Canonizer(const LoopTable& loop) : loop_(loop), n_(loop.order()) {
    label_.fill(-1);
    elem_.fill(-1);
    label_[0] = 0;
    elem_[0] = 0;
    next_label_ = 1;
    current_.assign(cell_count(), 0);
  }

  void run() {
    if (n_ <= 1) {
      best_relabel_.assign(static_cast<std::size_t>(n_), 0);
      return;
    }
    search(0, false);
  }

  std::vector<Element> best_relabel() const { return best_relabel_; }

 private:
  std::size_t cell_count() const { return static_cast<std::size_t>(n_ - 1) * static_cast<std::size_t>(n_ - 1); }

  void search(std::size_t pos, bool better) {
    if (pos == cell_count()) {
      if (better || best_.empty()) {
        best_ = current_;
        ++improvements_;
        best_relabel_.assign(label_.begin(), label_.begin() + n_);
      }
      return;
    }
    const int row = static_cast<int>(pos) / (n_ - 1) + 1;
    const int col = static_cast<int>(pos) % (n_ - 1) + 1;
    if (elem_[row] < 0) {
      branch(pos, better, row);
      return;
    }
    if (elem_[col] < 0) {
      branch(pos, better, col);
      return;
    }
    const Element product = loop_.mul(elem_[row], elem_[col]);
    bool fresh = false;
    if (label_[product] < 0) {
      assign(product, next_label_);
      fresh = true;
    }
    const int value = label_[product];
    current_[pos] = static_cast<std::uint8_t>(value);
    bool next_better = better;
    if (!better && !best_.empty()) {
      if (value > best_[pos]) {
        if (fresh) unassign(product);
        return;
      }
      next_better = value < best_[pos];
    }
    search(pos + 1, next_better);
    if (fresh) unassign(product);
  }

  // Gives `target_label` (always the next free label) to each unlabeled element in turn.
  // After an improvement inside one choice, the shared prefix equals the new
  // best, so the remaining choices must compare against it from here on.
  void branch(std::size_t pos, bool better, int target_label) {
    for (Element x = 1; x < n_; ++x) {
      if (label_[x] >= 0) continue;
      const auto before = improvements_;
      assign(x, target_label);
      search(pos, better);
      unassign(x);
      if (improvements_ != before) better = false;
    }
  }

  void assign(Element x, int label) {
    assert(label == next_label_);
    label_[x] = label;
    elem_[label] = x;
    ++next_label_;
  }

  void unassign(Element x) {
    elem_[label_[x]] = -1;
    label_[x] = -1;
    --next_label_;
  }

  const LoopTable& loop_;
  int n_;
  std::array<int, kMaxOrder> label_{};
  std::array<int, kMaxOrder> elem_{};
  int next_label_ = 1;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  std::vector<Element> best_relabel_;
  std::size_t improvements_ = 0;
};

}  // namespace

Permutation canonical_labeling(const LoopTable& loop) {
  Canonizer c(loop);
  c.run();
  return Permutation(c.best_relabel());
}

LoopTable canonical_form(const LoopTable& loop) { return loop.relabeled(canonical_labeling(loop)); }

bool is_isomorphic(const LoopTable& a, const LoopTable& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

bool is_isotopism(const Permutation& f, const Permutation& g, const Permutation& h, const LoopTable& from,
                  const LoopTable& to) {
  const int n = from.order();
  if (to.order() != n || f.degree() != n || g.degree() != n || h.degree() != n) {
    throw OrderMismatch("isotopism components and loops must share one order");
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (to.mul(f(x), g(y)) != h(from.mul(x, y))) return false;
    }
  }
  return true;
}

}  // namespace loopkit
