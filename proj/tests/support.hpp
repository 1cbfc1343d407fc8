#pragma once

// Reference implementations used as oracles. They share no code with the
// search engine or the canonizer.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include <loopkit/loop_table.hpp>

namespace loopkit::testing {

using Rows = std::vector<std::vector<Element>>;

inline const Rows kExampleRows = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 4, 0, 6, 1, 7, 3, 5}, {3, 5, 1, 7, 0, 6, 2, 4},
    {4, 2, 6, 0, 7, 1, 5, 3}, {5, 3, 7, 1, 6, 0, 4, 2}, {6, 7, 4, 5, 2, 3, 0, 1}, {7, 6, 5, 4, 3, 2, 1, 0},
};

// Permutations of {0,1,2} in lexicographic order, (pq)(i) = p(q(i)).
inline const Rows kS3Rows = {
    {0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
    {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0},
};

/// Every normalized Latin square of order n, in lexicographic order, by
/// plain cell-by-cell backtracking.
inline std::vector<LoopTable> all_loops_naive(int n) {
  Rows t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::vector<LoopTable> out;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == n) {
      out.emplace_back(t);
      return;
    }
    if (c == n) return fill(r + 1, 1);
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int k = 0; k < c && !used; ++k) used = t[r][k] == v;
      for (int k = 0; k < r && !used; ++k) used = t[k][c] == v;
      if (used) continue;
      t[r][c] = v;
      fill(r, c + 1);
      t[r][c] = -1;
    }
  };
  if (n == 1) return {LoopTable(t)};
  fill(1, 1);
  return out;
}

/// Least relabeling over all (n-1)! permutations fixing 0.
inline LoopTable canonical_form_naive(const LoopTable& t) {
  std::vector<Element> p(static_cast<std::size_t>(t.order()));
  std::iota(p.begin(), p.end(), 0);
  LoopTable best = t;
  do {
    auto r = t.relabeled(Permutation(p));
    if (r < best) best = r;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return best;
}

inline bool associative_naive(const LoopTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) return false;
  return true;
}

inline bool commutative_naive(const LoopTable& t) {
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b)
      if (t.mul(a, b) != t.mul(b, a)) return false;
  return true;
}

/// Every group of order <= 8 up to isomorphism, built from their standard
/// presentations.
std::vector<LoopTable> small_groups();

/// The abelian ones among small_groups().
std::vector<LoopTable> small_abelian_groups();

}  // namespace loopkit::testing
