#pragma once

#include <optional>
#include <vector>

#include "conjlang/benois.hpp"
#include "conjlang/dfa.hpp"
#include "conjlang/word.hpp"

namespace conjlang {

/// Which way the conjugators sit against the conjugated words.
///  - kLeft:  every u.v (u in U-bar, v in V-bar) is reduced;
///  - kRight: every v^{-1}.u is reduced.
enum class Side { kLeft, kRight };

enum class Provenance { kReducedPair, kGeneral, kCycredClosure };

const char* to_string(Provenance p);

struct ConjLangResult {
  /// Cyclically reduced words representing conjugates v^{-1} u v.
  Dfa conjgeo;
  /// conjgeo intersected with the shortlex normal forms of F_X.
  Dfa conjminlensl;
  Provenance provenance;
};

/// Cyclically reduced words (geodesics of minimal length in their class).
Dfa cycgeo_all(const Alphabet& alphabet);

/// Permutation language of K by L.
///  - kLeft:  { u l : l in L, l u in K }, built as the union over states p
///            of the minimal automaton of K of L_{p,T} (L_{q0,p} & L);
///  - kRight: { l^{-1} u : u l^{-1} in K, l in L }, built as the union of
///            (L_{p,T} & L^{-1}) L_{q0,p}.
Dfa perm_language(const Dfa& k, const Dfa& l, Side side);

/// { r l : l r in K, (l r)^m l in L for some m >= 0 }.
///
/// The m = 0 term is perm_language(K, L, kLeft). Larger m account for
/// conjugators that begin with a power of the conjugated word: with
/// K = {a} and L = {aa}, (aa)^{-1} a (aa) = a, although no word of L is a
/// prefix of a. Built by tracking, along r, the transformation r induces on
/// the states of L's automaton.
Dfa power_rotations(const Dfa& k, const Dfa& l);

/// Side on which U-bar and V-bar concatenate without cancellation, if any.
std::optional<Side> reduced_pair_side(const Dfa& u_bar, const Dfa& v_bar);

/// ConjGeo(U, V) for reduced languages satisfying the `side` condition.
/// Throws PreconditionError naming a cancelling pair when it does not hold.
Dfa conjgeo_reduced_pair(const Dfa& u_bar, const Dfa& v_bar, Side side);

/// As above on rational subsets; `side` is auto-detected when empty.
ConjLangResult conjgeo_reduced_pair(const RationalSubset& u, const RationalSubset& v,
                                    std::optional<Side> side = std::nullopt);

/// ConjGeo(U, V) for arbitrary rational U (conjugated) and V (conjugators),
/// assembled from reduced-pair pieces over the S-triples of the two
/// minimal automata.
ConjLangResult conjgeo_general(const RationalSubset& u, const RationalSubset& v);

/// Every word obtainable by repeatedly stripping x...x^{-1} from the two
/// ends of words of U-bar (including U-bar itself).
Dfa cycred_closure(const Dfa& u_bar);

/// ConjGeo(U) = ConjGeo(U, F_X), built independently of conjgeo_general as
/// Cyc(cycred_closure(U-bar) & CycGeo).
ConjLangResult conjgeo_unconstrained(const RationalSubset& u);

Dfa conjminlensl(const RationalSubset& u, const RationalSubset& v);

/// One shortlex conjugacy normal form per class meeting U with |g|_c <= n,
/// shortlex sorted.
std::vector<Word> conjsl_enum(const RationalSubset& u, std::size_t max_len);

}  // namespace conjlang
