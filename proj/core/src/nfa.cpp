#include "conjlang/nfa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace conjlang {

Nfa::Nfa(Alphabet alphabet, std::size_t states) : alphabet_(alphabet) {
  for (std::size_t i = 0; i < states; ++i) add_state();
}

State Nfa::add_state() {
  initial_.push_back(false);
  final_.push_back(false);
  delta_.emplace_back(static_cast<std::size_t>(alphabet_.size()));
  return static_cast<State>(delta_.size() - 1);
}

void Nfa::check_state(State s) const {
  if (s >= state_count()) {
    throw std::out_of_range("state " + std::to_string(s) + " out of range (" +
                            std::to_string(state_count()) + " states)");
  }
}

void Nfa::add_transition(State from, Letter x, State to) {
  check_state(from);
  check_state(to);
  if (!alphabet_.contains(x)) throw std::out_of_range("letter outside alphabet");
  auto& targets = delta_[from][x];
  auto it = std::lower_bound(targets.begin(), targets.end(), to);
  if (it == targets.end() || *it != to) targets.insert(it, to);
}

void Nfa::set_initial(State s, bool on) {
  check_state(s);
  initial_[s] = on;
}

void Nfa::set_final(State s, bool on) {
  check_state(s);
  final_[s] = on;
}

std::vector<State> Nfa::initial_states() const {
  std::vector<State> out;
  for (State s = 0; s < state_count(); ++s) {
    if (initial_[s]) out.push_back(s);
  }
  return out;
}

std::vector<State> Nfa::final_states() const {
  std::vector<State> out;
  for (State s = 0; s < state_count(); ++s) {
    if (final_[s]) out.push_back(s);
  }
  return out;
}

std::vector<Transition> Nfa::transitions() const {
  std::vector<Transition> out;
  for (State s = 0; s < state_count(); ++s) {
    for (Letter x = 0; x < alphabet_.size(); ++x) {
      for (State t : delta_[s][x]) out.push_back({s, x, t});
    }
  }
  return out;
}

State NfaBuilder::add_state() {
  letter_moves_.emplace_back();
  epsilon_moves_.emplace_back();
  return static_cast<State>(letter_moves_.size() - 1);
}

void NfaBuilder::add_transition(State from, Letter x, State to) {
  if (!alphabet_.contains(x)) throw std::out_of_range("letter outside alphabet");
  letter_moves_.at(from).emplace_back(x, to);
  (void)letter_moves_.at(to);
}

void NfaBuilder::add_epsilon(State from, State to) {
  epsilon_moves_.at(from).push_back(to);
  (void)epsilon_moves_.at(to);
}

void NfaBuilder::set_initial(State s) {
  (void)letter_moves_.at(s);
  initial_.push_back(s);
}

void NfaBuilder::set_final(State s) {
  (void)letter_moves_.at(s);
  final_.push_back(s);
}

State NfaBuilder::embed(const Nfa& a) {
  require_same(alphabet_, a.alphabet());
  const auto offset = static_cast<State>(state_count());
  for (std::size_t i = 0; i < a.state_count(); ++i) add_state();
  for (const auto& t : a.transitions()) add_transition(offset + t.from, t.letter, offset + t.to);
  return offset;
}

Nfa NfaBuilder::build() const {
  const std::size_t n = state_count();
  // Epsilon closure of every state by DFS.
  std::vector<std::vector<State>> closure(n);
  for (State s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<State> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      State p = stack.back();
      stack.pop_back();
      closure[s].push_back(p);
      for (State q : epsilon_moves_[p]) {
        if (!seen[q]) {
          seen[q] = true;
          stack.push_back(q);
        }
      }
    }
  }
  std::vector<bool> is_final(n, false);
  for (State f : final_) is_final[f] = true;

  Nfa out(alphabet_, n);
  for (State s : initial_) out.set_initial(s);
  for (State s = 0; s < n; ++s) {
    for (State p : closure[s]) {
      if (is_final[p]) out.set_final(s);
      for (auto [x, q] : letter_moves_[p]) out.add_transition(s, x, q);
    }
  }
  return out;
}

}  // namespace conjlang
