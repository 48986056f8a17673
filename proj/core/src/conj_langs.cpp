#include "conjlang/conj_langs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "conjlang/automata.hpp"
#include "conjlang/error.hpp"

namespace conjlang {

namespace {

constexpr State kNone = Dfa::kNone;

Dfa ends_with(const Alphabet& alphabet, Letter x) {
  Dfa out(alphabet, 2, 0);
  out.set_final(1);
  for (Letter y = 0; y < alphabet.size(); ++y) {
    out.set_transition(0, y, y == x ? 1 : 0);
    out.set_transition(1, y, y == x ? 1 : 0);
  }
  return out;
}

Dfa starts_with(const Alphabet& alphabet, Letter x) {
  Dfa out(alphabet, 2, 0);
  out.set_final(1);
  out.set_transition(0, x, 1);
  for (Letter y = 0; y < alphabet.size(); ++y) out.set_transition(1, y, 1);
  return out;
}

Dfa identity_only(const Alphabet& alphabet) { return word_dfa(alphabet, Word{}); }

ConjLangResult make_result(Dfa conjgeo, Provenance provenance) {
  Dfa minlen = intersect(conjgeo, reduced_words_dfa(conjgeo.alphabet()));
  return {std::move(conjgeo), std::move(minlen), provenance};
}

[[noreturn]] void throw_cancelling(const Dfa& u_bar, const Dfa& v_bar, Side side) {
  const Alphabet& alphabet = u_bar.alphabet();
  for (Letter x = 0; x < alphabet.size(); ++x) {
    // left: u ends in x, v starts with x^{-1}; right: u and v both start with x.
    const Dfa u_part = intersect(u_bar, side == Side::kLeft ? ends_with(alphabet, x) : starts_with(alphabet, x));
    const Letter vx = side == Side::kLeft ? Alphabet::inverse(x) : x;
    const Dfa v_part = intersect(v_bar, starts_with(alphabet, vx));
    auto u = shortest_word(u_part);
    auto v = shortest_word(v_part);
    if (u && v) {
      const std::string shape = side == Side::kLeft ? "U.V" : "V^-1.U";
      throw PreconditionError(shape + " is not reduced: u=" + to_string(*u) + ", v=" + to_string(*v) +
                              " cancel on letter " + alphabet.symbol(x));
    }
  }
  throw PreconditionError("reduced-pair precondition violated");
}

// Transformation induced by a word on the states of a Dfa, plus a dead
// state (index n) that absorbs missing transitions.
using Transform = std::vector<State>;

Transform identity_transform(std::size_t n) {
  Transform t(n + 1);
  for (State s = 0; s <= n; ++s) t[s] = s;
  return t;
}

Transform then_letter(const Transform& f, const Dfa& a, Letter x) {
  const auto dead = static_cast<State>(a.state_count());
  Transform out(f.size());
  for (std::size_t s = 0; s < f.size(); ++s) {
    const State t = f[s];
    const State next = t == dead ? dead : a.next(t, x);
    out[s] = next == kNone ? dead : next;
  }
  return out;
}

bool orbit_meets_final(State start, const Transform& f, const Dfa& a) {
  const auto dead = static_cast<State>(a.state_count());
  std::vector<bool> seen(f.size(), false);
  for (State s = start; !seen[s]; s = f[s]) {
    if (s == dead) return false;
    if (a.is_final(s)) return true;
    seen[s] = true;
  }
  return false;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kReducedPair:
      return "reduced-pair";
    case Provenance::kGeneral:
      return "general";
    case Provenance::kCycredClosure:
      return "cycred-closure";
  }
  return "?";
}

Dfa cycgeo_all(const Alphabet& alphabet) {
  const int k = alphabet.size();
  // State 0 = start; 1 + f*k + l = (first letter f, last letter l).
  Dfa out(alphabet, 1 + static_cast<std::size_t>(k * k), 0);
  out.set_final(0);
  for (Letter x = 0; x < k; ++x) out.set_transition(0, x, static_cast<State>(1 + x * k + x));
  for (Letter f = 0; f < k; ++f) {
    for (Letter l = 0; l < k; ++l) {
      const auto s = static_cast<State>(1 + f * k + l);
      out.set_final(s, l != Alphabet::inverse(f));
      for (Letter y = 0; y < k; ++y) {
        if (y != Alphabet::inverse(l)) out.set_transition(s, y, static_cast<State>(1 + f * k + y));
      }
    }
  }
  return minimize(out);
}

Dfa perm_language(const Dfa& k, const Dfa& l, Side side) {
  require_same(k.alphabet(), l.alphabet());
  const Dfa a = minimize(k);
  const std::vector<State> finals = a.final_states();
  const Dfa l_side = side == Side::kLeft ? minimize(l) : invert(l);
  std::vector<Nfa> parts;
  for (State p = 0; p < a.state_count(); ++p) {
    const std::vector<State> at_p{p};
    const Dfa tail = dfa_slice(a, p, finals);    // L_{p,T}
    const Dfa head = dfa_slice(a, a.initial(), at_p);  // L_{q0,p}
    if (side == Side::kLeft) {
      parts.push_back(concat(tail.to_nfa(), intersect(head, l_side).to_nfa()));
    } else {
      parts.push_back(concat(intersect(tail, l_side).to_nfa(), head.to_nfa()));
    }
  }
  return determinize_minimize(union_of(parts, a.alphabet()));
}

Dfa power_rotations(const Dfa& k_in, const Dfa& l_in) {
  require_same(k_in.alphabet(), l_in.alphabet());
  const Dfa k = minimize(k_in);
  const Dfa l = minimize(l_in);
  const Alphabet& alphabet = k.alphabet();
  if (is_empty(k) || is_empty(l)) return empty_dfa(alphabet);

  // Reading r = u.l1 where l1.u is in K:
  //   phase A reads u from a guessed split state p of K to a final state;
  //   phase B reads l1 from K's initial state back to p, while running L's
  //   automaton from its initial state (g = state after l1).
  // Throughout, f is the transformation of L's states induced by r so far.
  // Accept when (l1 u)^m l1 = l1 r^m is in L for some m, i.e. the orbit of g
  // under f meets a final state of L.
  NfaBuilder builder(alphabet);
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> configs;
  auto intern = [&](std::vector<State> key) {
    auto [it, inserted] = ids.try_emplace(key, 0);
    if (inserted) {
      it->second = builder.add_state();
      configs.push_back(std::move(key));
    }
    return it->second;
  };
  auto key_a = [](State p, State ks, const Transform& f) {
    std::vector<State> key{0, p, ks};
    key.insert(key.end(), f.begin(), f.end());
    return key;
  };
  auto key_b = [](State p, State ks, State g, const Transform& f) {
    std::vector<State> key{1, p, ks, g};
    key.insert(key.end(), f.begin(), f.end());
    return key;
  };

  const Transform id = identity_transform(l.state_count());
  for (State p = 0; p < k.state_count(); ++p) builder.set_initial(intern(key_a(p, p, id)));

  for (std::size_t i = 0; i < configs.size(); ++i) {
    const std::vector<State> key = configs[i];
    const State self = ids.at(key);
    const bool phase_b = key[0] == 1;
    const State p = key[1];
    const State ks = key[2];
    const std::size_t f_offset = phase_b ? 4 : 3;
    const Transform f(key.begin() + static_cast<std::ptrdiff_t>(f_offset), key.end());

    if (!phase_b) {
      if (k.is_final(ks)) builder.add_epsilon(self, intern(key_b(p, k.initial(), l.initial(), f)));
      for (Letter x = 0; x < alphabet.size(); ++x) {
        const State kt = k.next(ks, x);
        if (kt == kNone) continue;
        builder.add_transition(self, x, intern(key_a(p, kt, then_letter(f, l, x))));
      }
    } else {
      const State g = key[3];
      if (ks == p && orbit_meets_final(g, f, l)) builder.set_final(self);
      for (Letter x = 0; x < alphabet.size(); ++x) {
        const State kt = k.next(ks, x);
        if (kt == kNone) continue;
        const State gt = l.next(g, x);
        if (gt == kNone) continue;
        builder.add_transition(self, x, intern(key_b(p, kt, gt, then_letter(f, l, x))));
      }
    }
  }
  return determinize_minimize(builder.build());
}

std::optional<Side> reduced_pair_side(const Dfa& u_bar, const Dfa& v_bar) {
  require_same(u_bar.alphabet(), v_bar.alphabet());
  const auto u_first = first_letters(u_bar);
  const auto u_last = last_letters(u_bar);
  const auto v_first = first_letters(v_bar);
  bool left = true;
  bool right = true;
  for (Letter x = 0; x < u_bar.alphabet().size(); ++x) {
    if (u_last[x] && v_first[Alphabet::inverse(x)]) left = false;
    if (u_first[x] && v_first[x]) right = false;
  }
  if (left) return Side::kLeft;
  if (right) return Side::kRight;
  return std::nullopt;
}

Dfa conjgeo_reduced_pair(const Dfa& u_bar, const Dfa& v_bar, Side side) {
  require_same(u_bar.alphabet(), v_bar.alphabet());
  const Alphabet& alphabet = u_bar.alphabet();
  {
    const auto u_first = first_letters(u_bar);
    const auto u_last = last_letters(u_bar);
    const auto v_first = first_letters(v_bar);
    for (Letter x = 0; x < alphabet.size(); ++x) {
      const bool cancels = side == Side::kLeft ? (u_last[x] && v_first[Alphabet::inverse(x)])
                                               : (u_first[x] && v_first[x]);
      if (cancels) throw_cancelling(u_bar, v_bar, side);
    }
  }
  Dfa rotations = side == Side::kLeft ? power_rotations(u_bar, v_bar)
                                      : invert(power_rotations(invert(u_bar), v_bar));
  Dfa result = intersect(rotations, cycgeo_all(alphabet));
  if (accepts(u_bar, Word{}) && !is_empty(v_bar)) result = unite(result, identity_only(alphabet));
  return result;
}

ConjLangResult conjgeo_reduced_pair(const RationalSubset& u, const RationalSubset& v, std::optional<Side> side) {
  require_same(u.alphabet(), v.alphabet());
  if (!side) side = reduced_pair_side(u.reduced(), v.reduced());
  if (!side) throw_cancelling(u.reduced(), v.reduced(), Side::kLeft);
  return make_result(conjgeo_reduced_pair(u.reduced(), v.reduced(), *side), Provenance::kReducedPair);
}

ConjLangResult conjgeo_general(const RationalSubset& u, const RationalSubset& v) {
  require_same(u.alphabet(), v.alphabet());
  const Alphabet& alphabet = u.alphabet();
  // conj: automaton of the conjugated set U-bar; cjr: of the conjugators V-bar.
  const Dfa conj = minimize(u.reduced());
  const Dfa cjr = minimize(v.reduced());
  if (is_empty(conj) || is_empty(cjr)) return make_result(empty_dfa(alphabet), Provenance::kGeneral);

  // S-triples (q, p', q'): some x reads q0 -> q in cjr, q0' -> p' in conj, and
  // x^{-1} reads q' -> T' in conj. Explored as (q, p', B) where B is the set
  // of every q' admissible for the current x.
  std::set<std::vector<State>> seen;
  std::vector<std::vector<State>> queue;
  auto push = [&](State q, State p, std::vector<State> b) {
    if (b.empty()) return;
    std::vector<State> key{q, p};
    key.insert(key.end(), b.begin(), b.end());
    if (seen.insert(key).second) queue.push_back(std::move(key));
  };
  push(cjr.initial(), conj.initial(), conj.final_states());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::vector<State> key = queue[i];
    const State q = key[0];
    const State p = key[1];
    for (Letter x = 0; x < alphabet.size(); ++x) {
      const State qn = cjr.next(q, x);
      const State pn = conj.next(p, x);
      if (qn == kNone || pn == kNone) continue;
      std::vector<State> bn;
      for (State s = 0; s < conj.state_count(); ++s) {
        const State t = conj.next(s, Alphabet::inverse(x));
        if (t != kNone && std::binary_search(key.begin() + 2, key.end(), t)) bn.push_back(s);
      }
      push(qn, pn, std::move(bn));
    }
  }

  // Group by conjugator state q: conjugated pieces are the union of the
  // slices L'_{p',q'} over the triples sharing q.
  std::map<State, std::map<State, std::set<State>>> pieces;
  for (const auto& key : seen) {
    auto& targets = pieces[key[0]][key[1]];
    targets.insert(key.begin() + 2, key.end());
  }

  const Dfa nonempty_words = complement(identity_only(alphabet));
  Dfa result = empty_dfa(alphabet);
  for (const auto& [q, by_start] : pieces) {
    std::vector<Nfa> slices;
    for (const auto& [p, targets] : by_start) {
      const std::vector<State> from{p};
      const std::vector<State> to(targets.begin(), targets.end());
      slices.push_back(state_slice(conj, from, to));
    }
    const Dfa middle = intersect(determinize(union_of(slices, alphabet)), nonempty_words);
    if (is_empty(middle)) continue;
    const Dfa tails = minimize(dfa_slice(cjr, q, cjr.final_states()));  // L_{q,T}

    for (Letter a = 0; a < alphabet.size(); ++a) {
      const Letter a_inv = Alphabet::inverse(a);
      // Y_a: conjugated piece ends in a, conjugator does not start with a^{-1}.
      const Dfa y_k = intersect(middle, ends_with(alphabet, a));
      const Dfa y_l = subtract(tails, starts_with(alphabet, a_inv));
      if (!is_empty(y_k) && !is_empty(y_l)) result = unite(result, conjgeo_reduced_pair(y_k, y_l, Side::kLeft));
      // Z_a: conjugated piece starts with a, conjugator does not start with a.
      const Dfa z_k = intersect(middle, starts_with(alphabet, a));
      const Dfa z_l = subtract(tails, starts_with(alphabet, a));
      if (!is_empty(z_k) && !is_empty(z_l)) result = unite(result, conjgeo_reduced_pair(z_k, z_l, Side::kRight));
    }
  }
  // The identity is fixed by every conjugator; the S-triples exclude it.
  if (accepts(conj, Word{})) result = unite(result, identity_only(alphabet));
  return make_result(std::move(result), Provenance::kGeneral);
}

Dfa cycred_closure(const Dfa& u_bar) {
  const Dfa a = minimize(u_bar);
  const Alphabet& alphabet = a.alphabet();
  if (is_empty(a)) return empty_dfa(alphabet);
  // Slice languages L_{p,F'} closed under T(L) = { w : x w x^{-1} in L }:
  // stripping x maps (p, F') to (delta(p, x), { s : delta(s, x^{-1}) in F' }).
  std::set<std::pair<State, std::vector<State>>> seen;
  std::vector<std::pair<State, std::vector<State>>> queue;
  auto push = [&](State p, std::vector<State> f) {
    if (f.empty()) return;
    if (seen.emplace(p, f).second) queue.emplace_back(p, std::move(f));
  };
  push(a.initial(), a.final_states());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [p, f] = queue[i];
    for (Letter x = 0; x < alphabet.size(); ++x) {
      const State pn = a.next(p, x);
      if (pn == kNone) continue;
      std::vector<State> fn;
      for (State s = 0; s < a.state_count(); ++s) {
        const State t = a.next(s, Alphabet::inverse(x));
        if (t != kNone && std::binary_search(f.begin(), f.end(), t)) fn.push_back(s);
      }
      push(pn, std::move(fn));
    }
  }
  // L_{p,F1} | L_{p,F2} = L_{p,F1|F2}: one slice per start state.
  std::map<State, std::set<State>> by_start;
  for (const auto& [p, f] : seen) by_start[p].insert(f.begin(), f.end());
  std::vector<Nfa> slices;
  for (const auto& [p, targets] : by_start) {
    const std::vector<State> from{p};
    const std::vector<State> to(targets.begin(), targets.end());
    slices.push_back(state_slice(a, from, to));
  }
  return determinize_minimize(union_of(slices, alphabet));
}

ConjLangResult conjgeo_unconstrained(const RationalSubset& u) {
  const Dfa cores = intersect(cycred_closure(u.reduced()), cycgeo_all(u.alphabet()));
  return make_result(cyc_closure(cores), Provenance::kCycredClosure);
}

Dfa conjminlensl(const RationalSubset& u, const RationalSubset& v) { return conjgeo_general(u, v).conjminlensl; }

std::vector<Word> conjsl_enum(const RationalSubset& u, std::size_t max_len) {
  const Dfa conjgeo = conjgeo_unconstrained(u).conjgeo;
  std::vector<Word> out;
  for (Word& w : enumerate(conjgeo, max_len)) {
    if (conj_canonical(w) == w) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace conjlang
