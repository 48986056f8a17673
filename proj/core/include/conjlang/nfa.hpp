#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "conjlang/alphabet.hpp"

namespace conjlang {

using State = std::uint32_t;

struct Transition {
  State from;
  Letter letter;
  State to;
  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic automaton without epsilon transitions.
class Nfa {
 public:
  explicit Nfa(Alphabet alphabet, std::size_t states = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return delta_.size(); }

  State add_state();
  void add_transition(State from, Letter x, State to);
  void set_initial(State s, bool on = true);
  void set_final(State s, bool on = true);

  bool is_initial(State s) const { return initial_.at(s); }
  bool is_final(State s) const { return final_.at(s); }
  std::vector<State> initial_states() const;
  std::vector<State> final_states() const;

  /// Sorted successor list for (s, x).
  std::span<const State> next(State s, Letter x) const { return delta_.at(s).at(x); }
  std::vector<Transition> transitions() const;

 private:
  void check_state(State s) const;

  Alphabet alphabet_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
  std::vector<std::vector<std::vector<State>>> delta_;
};

/// Construction-time automaton that may hold epsilon moves; `build()`
/// eliminates them so that no Nfa ever stores one.
class NfaBuilder {
 public:
  explicit NfaBuilder(Alphabet alphabet) : alphabet_(alphabet) {}

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return letter_moves_.size(); }

  State add_state();
  void add_transition(State from, Letter x, State to);
  void add_epsilon(State from, State to);
  void set_initial(State s);
  void set_final(State s);

  /// Embeds `a` and returns the offset of its state 0. Initial and final
  /// flags are not copied.
  State embed(const Nfa& a);

  Nfa build() const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::pair<Letter, State>>> letter_moves_;
  std::vector<std::vector<State>> epsilon_moves_;
  std::vector<State> initial_;
  std::vector<State> final_;
};

}  // namespace conjlang
