#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "conjlang/dfa.hpp"
#include "conjlang/nfa.hpp"
#include "conjlang/word.hpp"

namespace conjlang {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of accepted words of each length 0..n.
using CountVector = std::vector<BigInt>;

// --- construction ---------------------------------------------------------

Dfa determinize(const Nfa& a);

/// Minimal trimmed automaton with states numbered in breadth-first order
/// from the initial state (letters in shortlex order). Two automata accept
/// the same language iff their minimized forms compare equal.
Dfa minimize(const Dfa& a);

Dfa determinize_minimize(const Nfa& a);

/// All of X~*.
Dfa universal_dfa(const Alphabet& alphabet);
/// The empty language.
Dfa empty_dfa(const Alphabet& alphabet);
/// Exactly the given words.
Nfa finite_language(const Alphabet& alphabet, std::span<const Word> words);
Dfa word_dfa(const Alphabet& alphabet, const Word& w);

// --- boolean algebra ------------------------------------------------------

enum class BoolOp { kUnion, kIntersection, kDifference };

/// Product construction followed by minimization.
Dfa combine(const Dfa& a, const Dfa& b, BoolOp op);
Dfa complement(const Dfa& a);

inline Dfa unite(const Dfa& a, const Dfa& b) { return combine(a, b, BoolOp::kUnion); }
inline Dfa intersect(const Dfa& a, const Dfa& b) { return combine(a, b, BoolOp::kIntersection); }
inline Dfa subtract(const Dfa& a, const Dfa& b) { return combine(a, b, BoolOp::kDifference); }

// --- rational operations --------------------------------------------------

enum class RationalOp { kConcat, kStar, kReverse, kInvert };

/// `kConcat` needs `b`; the unary operations ignore it. Throws
/// PreconditionError if `b` is missing for `kConcat`.
Nfa rational_op(const Nfa& a, const Nfa* b, RationalOp op);

Nfa concat(const Nfa& a, const Nfa& b);
Nfa star(const Nfa& a);
Nfa reverse(const Nfa& a);
/// Maps each accepted word to its formal inverse.
Nfa invert(const Nfa& a);
Nfa union_of(std::span<const Nfa> parts, const Alphabet& alphabet);

Dfa invert(const Dfa& a);

/// Rotation closure Cyc(L) = { vu : uv in L }.
Dfa cyc_closure(const Dfa& a);

/// Words labelling a path from some state in `from` to some state in `to`.
/// Throws std::out_of_range on an invalid state id.
Nfa state_slice(const Nfa& a, std::span<const State> from, std::span<const State> to);
Nfa state_slice(const Dfa& a, std::span<const State> from, std::span<const State> to);
/// Deterministic slice L_{p,F}; cheaper than going through an Nfa.
Dfa dfa_slice(const Dfa& a, State from, std::span<const State> to);

// --- queries --------------------------------------------------------------

bool accepts(const Dfa& a, const Word& w);
bool accepts(const Nfa& a, const Word& w);
bool is_empty(const Dfa& a);
bool equivalent(const Dfa& a, const Dfa& b);
/// Accepted words of length <= max_len, shortlex sorted.
std::vector<Word> enumerate(const Dfa& a, std::size_t max_len);
/// Accepted words of exactly length `len`, shortlex sorted.
std::vector<Word> enumerate_length(const Dfa& a, std::size_t len);
/// Transfer-matrix count per length 0..max_len.
CountVector count(const Dfa& a, std::size_t max_len);
/// Shortlex-least accepted word.
std::optional<Word> shortest_word(const Dfa& a);

/// Letters that start / end some nonempty accepted word.
std::vector<bool> first_letters(const Dfa& a);
std::vector<bool> last_letters(const Dfa& a);

/// Removes states unreachable from the initial state or unable to reach
/// a final state (keeps at least the initial state).
Dfa trim(const Dfa& a);

}  // namespace conjlang
