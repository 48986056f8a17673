#pragma once

#include <limits>
#include <vector>

#include "conjlang/alphabet.hpp"
#include "conjlang/nfa.hpp"

namespace conjlang {

/// Deterministic automaton with a partial transition function; a missing
/// transition goes to an implicit dead state. Always has at least one state.
class Dfa {
 public:
  static constexpr State kNone = std::numeric_limits<State>::max();

  /// Single non-accepting state: the empty language.
  explicit Dfa(Alphabet alphabet);
  Dfa(Alphabet alphabet, std::size_t states, State initial = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return final_.size(); }
  State initial() const noexcept { return initial_; }

  State add_state();
  void set_transition(State from, Letter x, State to);
  void set_final(State s, bool on = true);
  void set_initial(State s);

  bool is_final(State s) const { return final_.at(s); }
  State next(State s, Letter x) const { return delta_[s * stride() + x]; }
  std::vector<State> final_states() const;

  Nfa to_nfa() const;

  /// Structural equality; on minimized automata this is language equality.
  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t stride() const noexcept { return static_cast<std::size_t>(alphabet_.size()); }

  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<bool> final_;
  std::vector<State> delta_;
};

}  // namespace conjlang
