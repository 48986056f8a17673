#pragma once

#include <cstddef>
#include <optional>

#include "conjlang/benois.hpp"
#include "conjlang/word.hpp"

namespace conjlang {

struct GcpInstance {
  Word g;
  RationalSubset u;
  /// Constraint set for the conjugators.
  RationalSubset v;
};

/// u in U and v in V with reduce(v^{-1} u v) = reduce(g).
struct GcpWitness {
  Word u;
  Word v;
};

struct GcpResult {
  bool conjugate = false;
  /// Set only when requested and found within the search bound.
  std::optional<GcpWitness> witness;
};

struct GcpOptions {
  bool want_witness = false;
  /// Longest conjugator tried by the witness search.
  std::size_t witness_max_len = 16;
};

/// Does g = v^{-1} u v for some u in U and v in V?
GcpResult decide_gcp(const GcpInstance& instance, const GcpOptions& options = {});

/// Do U and V meet a common conjugacy class?
bool decide_double_gcp(const RationalSubset& u, const RationalSubset& v);

}  // namespace conjlang
