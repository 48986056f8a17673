#pragma once

#include <string_view>

#include "conjlang/dfa.hpp"
#include "conjlang/nfa.hpp"
#include "conjlang/word.hpp"

namespace conjlang {

/// Automaton of all freely reduced words: state 0 is the start, state 1+x
/// means "last letter was x". 2*rank+1 states, all accepting.
Dfa reduced_words_dfa(const Alphabet& alphabet);

/// Reduced representatives of the group elements named by `a`.
///
/// Saturates the automaton with epsilon shortcuts p->q whenever some word
/// freely equal to 1 labels a path p->q (closure under x.w.x^{-1} nesting
/// and concatenation, computed on state pairs), eliminates the shortcuts,
/// then keeps only reduced words. The result is minimized.
Dfa benois_reduce(const Nfa& a);

/// A rational subset of the free group: any representative language plus
/// the minimal automaton of its reduced representatives.
class RationalSubset {
 public:
  explicit RationalSubset(Nfa source);

  static RationalSubset from_regex(std::string_view expr, const Alphabet& alphabet);
  static RationalSubset from_words(const Alphabet& alphabet, std::span<const Word> words);
  /// The whole free group F_X.
  static RationalSubset whole_group(const Alphabet& alphabet);

  const Alphabet& alphabet() const noexcept { return source_.alphabet(); }
  const Nfa& source() const noexcept { return source_; }
  const Dfa& reduced() const noexcept { return reduced_; }

 private:
  Nfa source_;
  Dfa reduced_;
};

/// Membership of the group element w in U.
bool member(const RationalSubset& u, const Word& w);

}  // namespace conjlang
