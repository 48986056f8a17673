#include "conjlang/dfa.hpp"

#include <stdexcept>

namespace conjlang {

Dfa::Dfa(Alphabet alphabet) : Dfa(alphabet, 1, 0) {}

Dfa::Dfa(Alphabet alphabet, std::size_t states, State initial)
    : alphabet_(alphabet), initial_(initial), final_(states, false), delta_(states * stride(), kNone) {
  if (states == 0) throw std::invalid_argument("a Dfa needs at least one state");
  if (initial >= states) throw std::out_of_range("initial state out of range");
}

State Dfa::add_state() {
  final_.push_back(false);
  delta_.resize(delta_.size() + stride(), kNone);
  return static_cast<State>(final_.size() - 1);
}

void Dfa::set_transition(State from, Letter x, State to) {
  if (from >= state_count() || (to != kNone && to >= state_count())) {
    throw std::out_of_range("Dfa transition state out of range");
  }
  if (!alphabet_.contains(x)) throw std::out_of_range("letter outside alphabet");
  delta_[from * stride() + x] = to;
}

void Dfa::set_final(State s, bool on) { final_.at(s) = on; }

void Dfa::set_initial(State s) {
  if (s >= state_count()) throw std::out_of_range("initial state out of range");
  initial_ = s;
}

std::vector<State> Dfa::final_states() const {
  std::vector<State> out;
  for (State s = 0; s < state_count(); ++s) {
    if (final_[s]) out.push_back(s);
  }
  return out;
}

Nfa Dfa::to_nfa() const {
  Nfa out(alphabet_, state_count());
  out.set_initial(initial_);
  for (State s = 0; s < state_count(); ++s) {
    if (final_[s]) out.set_final(s);
    for (Letter x = 0; x < alphabet_.size(); ++x) {
      if (State t = next(s, x); t != kNone) out.add_transition(s, x, t);
    }
  }
  return out;
}

}  // namespace conjlang
