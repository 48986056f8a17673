#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "conjlang/semilinear.hpp"

namespace conjlang {

/// G = Z^m extended by a finite transversal T = {0, ..., k-1}, coset 0 the
/// identity. An element is written n.s with n in Z^m and s in T, and
///   s^{-1} n s = n.Q_s,
///   s.t        = c(s,t).r(s,t),
/// so that (m.s)(n.t) = (m + n.Q_s^{-1} + c(s,t)).r(s,t).
struct VAPresentation {
  std::size_t m = 0;
  std::vector<std::string> names;
  std::vector<Matrix> q;
  std::vector<std::vector<std::size_t>> coset_product;
  std::vector<std::vector<Vec>> cocycle;

  std::size_t cosets() const noexcept { return q.size(); }
};

/// JSON object with keys m, cosets, Q, coset_product, cocycle and optional
/// names. Throws ParseError on malformed input and PreconditionError when
/// the tables do not define a group (see validate).
VAPresentation parse_presentation(std::string_view json_text);
VAPresentation load_presentation(const std::filesystem::path& path);

/// Q_0 = I, det Q_t = +-1, coset 0 neutral, every coset invertible,
/// Q_s Q_t = Q_{r(s,t)}, and associativity on sampled elements.
void validate(const VAPresentation& g);

struct VAElement {
  Vec n;
  std::size_t coset = 0;
  friend auto operator<=>(const VAElement&, const VAElement&) = default;
};

struct VAComponent {
  SemilinearSet set;
  std::size_t coset = 0;
};

/// Union of set.coset over its components.
struct VASubset {
  std::vector<VAComponent> components;
};

/// Subset file: {"components": [{"coset": c, "base": [...], "periods": [[...], ...]}, ...]}
/// where coset is an index or a name. Linear sets sharing a coset are united.
VASubset parse_subset(std::string_view json_text, const VAPresentation& g);
VASubset load_subset(const std::filesystem::path& path, const VAPresentation& g);

VAElement va_multiply(const VAPresentation& g, const VAElement& a, const VAElement& b);
VAElement va_inverse(const VAPresentation& g, const VAElement& a);
/// h^{-1} x h.
VAElement va_conjugate(const VAPresentation& g, const VAElement& x, const VAElement& h);

bool va_member(const VASubset& u, const VAElement& e);

/// All conjugates of U, one component per (component of U, coset), merged
/// per coset and ordered by coset.
VASubset alpha_va(const VAPresentation& g, const VASubset& u);

/// alpha(U) for U inside Z^m: the union of the images U.Q_t.
SemilinearSet alpha_abelian_subset(const VAPresentation& g, const SemilinearSet& u);

/// Elements of U with vector part in [-r, r]^m.
std::set<VAElement> va_box(const VAPresentation& g, const VASubset& u, std::int64_t r);

/// h^{-1} x h for x in U with vector part in [-source_r, source_r]^m and
/// h ranging over [-conj_r, conj_r]^m x T.
std::set<VAElement> va_brute_ball(const VAPresentation& g, const VASubset& u, std::int64_t source_r,
                                  std::int64_t conj_r);
inline std::set<VAElement> va_brute_ball(const VAPresentation& g, const VASubset& u, std::int64_t r) {
  return va_brute_ball(g, u, r, r);
}

std::string to_string(const VAPresentation& g, const VAElement& e);

}  // namespace conjlang
