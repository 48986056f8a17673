#pragma once

#include <cstddef>

#include "conjlang/automata.hpp"
#include "conjlang/benois.hpp"

namespace conjlang {

struct GrowthTable {
  std::size_t max_n = 0;
  /// strict[n]: conjugacy classes meeting U with |g|_c = n.
  CountVector strict;
  /// cumulative[n]: classes with |g|_c <= n.
  CountVector cumulative;
};

/// Positive-letter subset of F_2 whose relative conjugacy growth is
/// polynomial of degree d.
struct UdSubset {
  int degree = 0;
  /// Number of blocks a^i b^i; block i replaces letter a_i of the base.
  int block_count = 0;
  /// Base language a_1^* ... a_d^* over d generators.
  Nfa base;
  /// Base with each a_i replaced by a^i b^i, over {a, b}.
  Nfa k_d;
};

/// Throws std::invalid_argument for d < 1 or d > 26.
UdSubset build_ud(int d);

GrowthTable relative_growth(const RationalSubset& u, std::size_t max_n);

/// Least-squares slope of log cc(n) against log n for n in [n0, n1].
/// Throws std::domain_error when the window is invalid or contains cc = 0.
double degree_estimate(const GrowthTable& t, std::size_t n0, std::size_t n1);

}  // namespace conjlang
