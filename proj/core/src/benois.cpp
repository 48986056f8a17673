#include "conjlang/benois.hpp"

#include <utility>
#include <vector>

#include "conjlang/automata.hpp"
#include "conjlang/regex.hpp"

namespace conjlang {

Dfa reduced_words_dfa(const Alphabet& alphabet) {
  const int k = alphabet.size();
  Dfa out(alphabet, static_cast<std::size_t>(k) + 1, 0);
  for (State s = 0; s <= static_cast<State>(k); ++s) {
    out.set_final(s);
    for (Letter x = 0; x < k; ++x) {
      if (s > 0 && x == Alphabet::inverse(static_cast<Letter>(s - 1))) continue;
      out.set_transition(s, x, static_cast<State>(x + 1));
    }
  }
  return out;
}

namespace {

// trivial[p][q]: some word freely equal to 1 labels a path p -> q.
std::vector<std::vector<bool>> trivial_paths(const Nfa& a) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<std::pair<Letter, State>>> preds(n);
  for (const auto& t : a.transitions()) preds[t.to].emplace_back(t.letter, t.from);

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  std::vector<std::vector<State>> out_rel(n);
  std::vector<std::vector<State>> in_rel(n);
  std::vector<std::pair<State, State>> work;
  auto add = [&](State p, State q) {
    if (rel[p][q]) return;
    rel[p][q] = true;
    out_rel[p].push_back(q);
    in_rel[q].push_back(p);
    work.emplace_back(p, q);
  };
  for (State s = 0; s < n; ++s) add(s, s);

  while (!work.empty()) {
    const auto [r, s] = work.back();
    work.pop_back();
    // Nesting: p -x-> r ~> s -x^{-1}-> q.
    for (auto [x, p] : preds[r]) {
      for (State q : a.next(s, Alphabet::inverse(x))) add(p, q);
    }
    // Concatenation on both sides. Index loops: `add` may grow the lists.
    for (std::size_t i = 0; i < in_rel[r].size(); ++i) add(in_rel[r][i], s);
    for (std::size_t i = 0; i < out_rel[s].size(); ++i) add(r, out_rel[s][i]);
  }
  return rel;
}

}  // namespace

Dfa benois_reduce(const Nfa& a) {
  const auto rel = trivial_paths(a);
  NfaBuilder builder(a.alphabet());
  const State offset = builder.embed(a);
  for (State s : a.initial_states()) builder.set_initial(offset + s);
  for (State s : a.final_states()) builder.set_final(offset + s);
  for (State p = 0; p < a.state_count(); ++p) {
    for (State q = 0; q < a.state_count(); ++q) {
      if (p != q && rel[p][q]) builder.add_epsilon(offset + p, offset + q);
    }
  }
  return intersect(determinize(builder.build()), reduced_words_dfa(a.alphabet()));
}

RationalSubset::RationalSubset(Nfa source) : source_(std::move(source)), reduced_(benois_reduce(source_)) {}

RationalSubset RationalSubset::from_regex(std::string_view expr, const Alphabet& alphabet) {
  return RationalSubset(parse_regex(expr, alphabet));
}

RationalSubset RationalSubset::from_words(const Alphabet& alphabet, std::span<const Word> words) {
  return RationalSubset(finite_language(alphabet, words));
}

RationalSubset RationalSubset::whole_group(const Alphabet& alphabet) {
  return RationalSubset(universal_dfa(alphabet).to_nfa());
}

bool member(const RationalSubset& u, const Word& w) { return accepts(u.reduced(), reduce(w)); }

}  // namespace conjlang
