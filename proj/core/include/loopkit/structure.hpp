#pragma once

#include <optional>
#include <vector>

#include "loopkit/element_set.hpp"
#include "loopkit/loop_table.hpp"

namespace loopkit {

/// {a : a*(x*y) = (a*x)*y for all x, y}
ElementSet left_nucleus(const LoopTable& loop);
/// {a : x*(a*y) = (x*a)*y for all x, y}
ElementSet middle_nucleus(const LoopTable& loop);
/// {a : x*(y*a) = (x*y)*a for all x, y}
ElementSet right_nucleus(const LoopTable& loop);
ElementSet nucleus(const LoopTable& loop);
ElementSet commutant(const LoopTable& loop);
/// nucleus ∩ commutant
ElementSet center(const LoopTable& loop);

/// Elements c with c*(x*c)^rho = x^rho for every x.
ElementSet wip_elements(const LoopTable& loop);

/// L(x)^-1 L(y) L(x) is a left translation for all x, y.
bool is_lcc(const LoopTable& loop);
/// R(x)^-1 R(y) R(x) is a right translation for all x, y.
bool is_rcc(const LoopTable& loop);
bool is_cc(const LoopTable& loop);

/// R(x)^2 = L(x)^2 for all x, i.e. (y*x)*x = x*(x*y).
bool squares_translation(const LoopTable& loop);
/// R(x*x) = L(x*x) for all x, i.e. every square commutes with everything.
bool square_central_translation(const LoopTable& loop);

bool is_associative(const LoopTable& loop);
bool is_commutative(const LoopTable& loop);
bool is_group(const LoopTable& loop);

/// Associativity restricted to a subset (assumed closed under *).
bool is_associative_on(const LoopTable& loop, const ElementSet& subset);

/// Every subloop generated by one element is associative.
bool is_power_associative(const LoopTable& loop);

/// Least superset of `generators` ∪ {0} closed under *, \ and /.
ElementSet subloop_generated(const LoopTable& loop, const ElementSet& generators);

bool is_subloop(const LoopTable& loop, const ElementSet& subset);

/// Invariance under L(xy)^-1 L(x) L(y), R(yx)^-1 R(x) R(y) and L(x)^-1 R(x).
/// Throws NotASubloop.
bool is_normal(const LoopTable& loop, const ElementSet& subloop);

/// Cosets of a normal subloop, ordered by least member.
std::vector<ElementSet> cosets(const LoopTable& loop, const ElementSet& normal_subloop);

/// Loop on the cosets of `normal_subloop`; coset i is the i-th entry of
/// cosets(). Throws NotNormal (or NotASubloop).
LoopTable quotient(const LoopTable& loop, const ElementSet& normal_subloop);

/// Z_0 = {0}, Z_{i+1} = preimage of Z(Q/Z_i); stops when the series stops
/// growing or reaches the whole loop.
using CentralSeries = std::vector<ElementSet>;
CentralSeries central_series(const LoopTable& loop);

/// Least n with Z_n = Q; nullopt when the upper central series stalls.
std::optional<int> nilpotency_class(const LoopTable& loop);

}  // namespace loopkit
