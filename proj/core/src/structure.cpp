#include "loopkit/structure.hpp"

#include <array>

namespace loopkit {

namespace {

template <class Pred>
ElementSet collect(const LoopTable& loop, Pred pred) {
  ElementSet out(loop.order());
  for (Element a = 0; a < loop.order(); ++a) {
    if (pred(a)) out.insert(a);
  }
  return out;
}

template <class Pred>
bool for_all_pairs(int n, Pred pred) {
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!pred(x, y)) return false;
    }
  }
  return true;
}

Element square(const LoopTable& loop, Element x) { return loop.mul(x, x); }

}  // namespace

ElementSet left_nucleus(const LoopTable& loop) {
  return collect(loop, [&](Element a) {
    return for_all_pairs(loop.order(), [&](Element x, Element y) {
      return loop.mul(a, loop.mul(x, y)) == loop.mul(loop.mul(a, x), y);
    });
  });
}

ElementSet middle_nucleus(const LoopTable& loop) {
  return collect(loop, [&](Element a) {
    return for_all_pairs(loop.order(), [&](Element x, Element y) {
      return loop.mul(x, loop.mul(a, y)) == loop.mul(loop.mul(x, a), y);
    });
  });
}

ElementSet right_nucleus(const LoopTable& loop) {
  return collect(loop, [&](Element a) {
    return for_all_pairs(loop.order(), [&](Element x, Element y) {
      return loop.mul(x, loop.mul(y, a)) == loop.mul(loop.mul(x, y), a);
    });
  });
}

ElementSet nucleus(const LoopTable& loop) {
  return left_nucleus(loop) & middle_nucleus(loop) & right_nucleus(loop);
}

ElementSet commutant(const LoopTable& loop) {
  return collect(loop, [&](Element c) {
    for (Element x = 0; x < loop.order(); ++x) {
      if (loop.mul(c, x) != loop.mul(x, c)) return false;
    }
    return true;
  });
}

ElementSet center(const LoopTable& loop) { return nucleus(loop) & commutant(loop); }

ElementSet wip_elements(const LoopTable& loop) {
  return collect(loop, [&](Element c) {
    for (Element x = 0; x < loop.order(); ++x) {
      if (loop.mul(c, loop.right_inverse(loop.mul(x, c))) != loop.right_inverse(x)) return false;
    }
    return true;
  });
}

bool is_lcc(const LoopTable& loop) {
  const int n = loop.order();
  // z -> x \ (y * (x * z)) must equal L(w) for w = its image of 0.
  return for_all_pairs(n, [&](Element x, Element y) {
    const Element w = loop.ldiv(x, loop.mul(y, x));
    for (Element z = 0; z < n; ++z) {
      if (loop.ldiv(x, loop.mul(y, loop.mul(x, z))) != loop.mul(w, z)) return false;
    }
    return true;
  });
}

bool is_rcc(const LoopTable& loop) {
  const int n = loop.order();
  // z -> ((z * x) * y) / x must equal R(w) for w = its image of 0.
  return for_all_pairs(n, [&](Element x, Element y) {
    const Element w = loop.rdiv(loop.mul(x, y), x);
    for (Element z = 0; z < n; ++z) {
      if (loop.rdiv(loop.mul(loop.mul(z, x), y), x) != loop.mul(z, w)) return false;
    }
    return true;
  });
}

bool is_cc(const LoopTable& loop) { return is_lcc(loop) && is_rcc(loop); }

bool squares_translation(const LoopTable& loop) {
  return for_all_pairs(loop.order(), [&](Element x, Element y) {
    return loop.mul(loop.mul(y, x), x) == loop.mul(x, loop.mul(x, y));
  });
}

bool square_central_translation(const LoopTable& loop) {
  return for_all_pairs(loop.order(), [&](Element x, Element y) {
    const Element s = square(loop, x);
    return loop.mul(y, s) == loop.mul(s, y);
  });
}

bool is_associative(const LoopTable& loop) { return is_associative_on(loop, ElementSet::full(loop.order())); }

bool is_commutative(const LoopTable& loop) { return commutant(loop).is_full(); }

bool is_group(const LoopTable& loop) { return is_associative(loop); }

bool is_associative_on(const LoopTable& loop, const ElementSet& subset) {
  const auto members = subset.members();
  for (Element x : members) {
    for (Element y : members) {
      const Element xy = loop.mul(x, y);
      for (Element z : members) {
        if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_power_associative(const LoopTable& loop) {
  for (Element x = 0; x < loop.order(); ++x) {
    if (!is_associative_on(loop, subloop_generated(loop, ElementSet(loop.order(), {x})))) return false;
  }
  return true;
}

ElementSet subloop_generated(const LoopTable& loop, const ElementSet& generators) {
  ElementSet closure = generators;
  closure.insert(0);
  for (;;) {
    ElementSet next = closure;
    const auto members = closure.members();
    for (Element a : members) {
      for (Element b : members) {
        next.insert(loop.mul(a, b));
        next.insert(loop.ldiv(a, b));
        next.insert(loop.rdiv(a, b));
      }
    }
    if (next == closure) return closure;
    closure = next;
  }
}

bool is_subloop(const LoopTable& loop, const ElementSet& subset) {
  return subset.order() == loop.order() && subset.contains(0) && subloop_generated(loop, subset) == subset;
}

bool is_normal(const LoopTable& loop, const ElementSet& subloop) {
  if (!is_subloop(loop, subloop)) throw NotASubloop("set is not a subloop");
  const int n = loop.order();
  const auto members = subloop.members();
  for (Element x = 0; x < n; ++x) {
    for (Element h : members) {
      if (!subloop.contains(loop.ldiv(x, loop.mul(h, x)))) return false;
    }
    for (Element y = 0; y < n; ++y) {
      const Element xy = loop.mul(x, y);
      const Element yx = loop.mul(y, x);
      for (Element h : members) {
        if (!subloop.contains(loop.ldiv(xy, loop.mul(x, loop.mul(y, h))))) return false;
        if (!subloop.contains(loop.rdiv(loop.mul(loop.mul(h, y), x), yx))) return false;
      }
    }
  }
  return true;
}

std::vector<ElementSet> cosets(const LoopTable& loop, const ElementSet& normal_subloop) {
  const int n = loop.order();
  std::vector<ElementSet> out;
  ElementSet seen(n);
  const auto members = normal_subloop.members();
  for (Element x = 0; x < n; ++x) {
    if (seen.contains(x)) continue;
    ElementSet coset(n);
    for (Element h : members) coset.insert(loop.mul(x, h));
    seen = seen | coset;
    out.push_back(coset);
  }
  return out;
}

LoopTable quotient(const LoopTable& loop, const ElementSet& normal_subloop) {
  if (!is_normal(loop, normal_subloop)) throw NotNormal("subloop is not normal");
  const auto parts = cosets(loop, normal_subloop);
  std::array<Element, kMaxOrder> coset_of{};
  std::vector<Element> rep;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Element x : parts[i].members()) coset_of[static_cast<std::size_t>(x)] = static_cast<Element>(i);
    rep.push_back(parts[i].members().front());
  }
  const auto m = parts.size();
  std::vector<std::vector<Element>> rows(m, std::vector<Element>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = coset_of[static_cast<std::size_t>(loop.mul(rep[i], rep[j]))];
  }
  return LoopTable(rows);
}

CentralSeries central_series(const LoopTable& loop) {
  CentralSeries series{ElementSet(loop.order(), {0})};
  while (!series.back().is_full()) {
    const auto parts = cosets(loop, series.back());
    const ElementSet top = center(quotient(loop, series.back()));
    ElementSet next(loop.order());
    for (Element i : top.members()) next = next | parts[static_cast<std::size_t>(i)];
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

std::optional<int> nilpotency_class(const LoopTable& loop) {
  const auto series = central_series(loop);
  if (!series.back().is_full()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

}  // namespace loopkit
