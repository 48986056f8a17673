#include "conjlang/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <string>

#include "conjlang/error.hpp"

namespace conjlang {

namespace {

constexpr State kNone = Dfa::kNone;

std::vector<bool> coreachable(const Dfa& a) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<State>> preds(n);
  for (State s = 0; s < n; ++s) {
    for (Letter x = 0; x < a.alphabet().size(); ++x) {
      if (State t = a.next(s, x); t != kNone) preds[t].push_back(s);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s) {
    if (a.is_final(s)) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State t = stack.back();
    stack.pop_back();
    for (State s : preds[t]) {
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
  }
  return seen;
}

// Renumbers the live part of `a` breadth-first from the initial state.
Dfa renumber_bfs(const Dfa& a, const std::vector<bool>& live) {
  const int k = a.alphabet().size();
  std::vector<State> id(a.state_count(), kNone);
  std::vector<State> order{a.initial()};
  id[a.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter x = 0; x < k; ++x) {
      State t = a.next(order[i], x);
      if (t != kNone && live[t] && id[t] == kNone) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  Dfa out(a.alphabet(), order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.set_final(static_cast<State>(i), a.is_final(order[i]));
    for (Letter x = 0; x < k; ++x) {
      State t = a.next(order[i], x);
      if (t != kNone && live[t]) out.set_transition(static_cast<State>(i), x, id[t]);
    }
  }
  return out;
}

}  // namespace

Dfa trim(const Dfa& a) {
  std::vector<bool> live = coreachable(a);
  if (!live[a.initial()]) return Dfa(a.alphabet());
  return renumber_bfs(a, live);
}

Dfa determinize(const Nfa& a) {
  const int k = a.alphabet().size();
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State> set) -> std::pair<State, bool> {
    auto [it, inserted] = ids.try_emplace(set, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(set));
    return {it->second, inserted};
  };
  intern(a.initial_states());
  Dfa out(a.alphabet(), 1, 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const std::vector<State> current = subsets[i];
    out.set_final(static_cast<State>(i),
                  std::any_of(current.begin(), current.end(), [&](State s) { return a.is_final(s); }));
    for (Letter x = 0; x < k; ++x) {
      std::vector<State> target;
      for (State s : current) {
        auto succ = a.next(s, x);
        target.insert(target.end(), succ.begin(), succ.end());
      }
      if (target.empty()) continue;
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      auto [id, inserted] = intern(std::move(target));
      if (inserted) out.add_state();
      out.set_transition(static_cast<State>(i), x, id);
    }
  }
  return out;
}

Dfa minimize(const Dfa& input) {
  const Dfa a = trim(input);
  const std::size_t n = a.state_count();
  const int k = a.alphabet().size();
  // Moore refinement: signature = (own class, classes of successors).
  std::vector<State> cls(n);
  for (State s = 0; s < n; ++s) cls[s] = a.is_final(s) ? 1 : 0;
  std::size_t class_count = 0;
  while (true) {
    std::map<std::vector<State>, State> sig_ids;
    std::vector<State> next_cls(n);
    for (State s = 0; s < n; ++s) {
      std::vector<State> sig;
      sig.reserve(static_cast<std::size_t>(k) + 1);
      sig.push_back(cls[s]);
      for (Letter x = 0; x < k; ++x) {
        State t = a.next(s, x);
        sig.push_back(t == kNone ? kNone : cls[t]);
      }
      auto [it, inserted] = sig_ids.try_emplace(std::move(sig), static_cast<State>(sig_ids.size()));
      next_cls[s] = it->second;
    }
    const std::size_t count = sig_ids.size();
    cls = std::move(next_cls);
    if (count == class_count) break;
    class_count = count;
  }
  Dfa quotient(a.alphabet(), class_count, cls[a.initial()]);
  for (State s = 0; s < n; ++s) {
    quotient.set_final(cls[s], a.is_final(s));
    for (Letter x = 0; x < k; ++x) {
      if (State t = a.next(s, x); t != kNone) quotient.set_transition(cls[s], x, cls[t]);
    }
  }
  return renumber_bfs(quotient, std::vector<bool>(class_count, true));
}

Dfa determinize_minimize(const Nfa& a) { return minimize(determinize(a)); }

Dfa universal_dfa(const Alphabet& alphabet) {
  Dfa out(alphabet, 1, 0);
  out.set_final(0);
  for (Letter x = 0; x < alphabet.size(); ++x) out.set_transition(0, x, 0);
  return out;
}

Dfa empty_dfa(const Alphabet& alphabet) { return Dfa(alphabet); }

Nfa finite_language(const Alphabet& alphabet, std::span<const Word> words) {
  Nfa out(alphabet);
  const State start = out.add_state();
  out.set_initial(start);
  for (const Word& w : words) {
    State s = start;
    for (Letter x : w) {
      if (!alphabet.contains(x)) throw MismatchError("word letter outside alphabet");
      State t = out.add_state();
      out.add_transition(s, x, t);
      s = t;
    }
    out.set_final(s);
  }
  return out;
}

Dfa word_dfa(const Alphabet& alphabet, const Word& w) {
  Dfa out(alphabet, w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.set_transition(static_cast<State>(i), w[i], static_cast<State>(i + 1));
  }
  out.set_final(static_cast<State>(w.size()));
  return out;
}

Dfa combine(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same(a.alphabet(), b.alphabet());
  const int k = a.alphabet().size();
  auto accepting = [&](State p, State q) {
    const bool fa = p != kNone && a.is_final(p);
    const bool fb = q != kNone && b.is_final(q);
    switch (op) {
      case BoolOp::kUnion:
        return fa || fb;
      case BoolOp::kIntersection:
        return fa && fb;
      case BoolOp::kDifference:
        return fa && !fb;
    }
    return false;
  };
  // Pairs with a dead component are only worth exploring when the op can
  // still accept through the other side.
  auto keep = [&](State p, State q) {
    if (p == kNone && q == kNone) return false;
    switch (op) {
      case BoolOp::kUnion:
        return true;
      case BoolOp::kIntersection:
        return p != kNone && q != kNone;
      case BoolOp::kDifference:
        return p != kNone;
    }
    return false;
  };
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  Dfa out(a.alphabet(), 1, 0);
  ids[{a.initial(), b.initial()}] = 0;
  pairs.emplace_back(a.initial(), b.initial());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    out.set_final(static_cast<State>(i), accepting(p, q));
    for (Letter x = 0; x < k; ++x) {
      const State np = p == kNone ? kNone : a.next(p, x);
      const State nq = q == kNone ? kNone : b.next(q, x);
      if (!keep(np, nq)) continue;
      auto [it, inserted] = ids.try_emplace({np, nq}, static_cast<State>(pairs.size()));
      if (inserted) {
        pairs.emplace_back(np, nq);
        out.add_state();
      }
      out.set_transition(static_cast<State>(i), x, it->second);
    }
  }
  return minimize(out);
}

Dfa complement(const Dfa& a) {
  const int k = a.alphabet().size();
  Dfa full = a;
  const State sink = full.add_state();
  for (State s = 0; s < full.state_count(); ++s) {
    for (Letter x = 0; x < k; ++x) {
      if (full.next(s, x) == kNone) full.set_transition(s, x, sink);
    }
    full.set_final(s, !full.is_final(s));
  }
  return minimize(full);
}

Nfa concat(const Nfa& a, const Nfa& b) {
  require_same(a.alphabet(), b.alphabet());
  NfaBuilder builder(a.alphabet());
  const State oa = builder.embed(a);
  const State ob = builder.embed(b);
  for (State s : a.initial_states()) builder.set_initial(oa + s);
  for (State f : a.final_states()) {
    for (State s : b.initial_states()) builder.add_epsilon(oa + f, ob + s);
  }
  for (State f : b.final_states()) builder.set_final(ob + f);
  return builder.build();
}

Nfa star(const Nfa& a) {
  NfaBuilder builder(a.alphabet());
  const State hub = builder.add_state();
  const State oa = builder.embed(a);
  builder.set_initial(hub);
  builder.set_final(hub);
  for (State s : a.initial_states()) builder.add_epsilon(hub, oa + s);
  for (State f : a.final_states()) builder.add_epsilon(oa + f, hub);
  return builder.build();
}

Nfa reverse(const Nfa& a) {
  Nfa out(a.alphabet(), a.state_count());
  for (State s : a.initial_states()) out.set_final(s);
  for (State s : a.final_states()) out.set_initial(s);
  for (const auto& t : a.transitions()) out.add_transition(t.to, t.letter, t.from);
  return out;
}

Nfa invert(const Nfa& a) {
  Nfa out(a.alphabet(), a.state_count());
  for (State s : a.initial_states()) out.set_final(s);
  for (State s : a.final_states()) out.set_initial(s);
  for (const auto& t : a.transitions()) out.add_transition(t.to, Alphabet::inverse(t.letter), t.from);
  return out;
}

Dfa invert(const Dfa& a) { return determinize_minimize(invert(a.to_nfa())); }

Nfa union_of(std::span<const Nfa> parts, const Alphabet& alphabet) {
  Nfa out(alphabet);
  for (const Nfa& part : parts) {
    require_same(alphabet, part.alphabet());
    const auto offset = static_cast<State>(out.state_count());
    for (std::size_t i = 0; i < part.state_count(); ++i) out.add_state();
    for (State s = 0; s < part.state_count(); ++s) {
      if (part.is_initial(s)) out.set_initial(offset + s);
      if (part.is_final(s)) out.set_final(offset + s);
    }
    for (const auto& t : part.transitions()) out.add_transition(offset + t.from, t.letter, offset + t.to);
  }
  return out;
}

Nfa rational_op(const Nfa& a, const Nfa* b, RationalOp op) {
  switch (op) {
    case RationalOp::kConcat:
      if (b == nullptr) throw PreconditionError("concat needs two operands");
      return concat(a, *b);
    case RationalOp::kStar:
      return star(a);
    case RationalOp::kReverse:
      return reverse(a);
    case RationalOp::kInvert:
      return invert(a);
  }
  throw PreconditionError("unknown rational operation");
}

Dfa cyc_closure(const Dfa& input) {
  const Dfa a = minimize(input);
  const std::size_t n = a.state_count();
  const Nfa base = a.to_nfa();
  const std::vector<State> finals = a.final_states();
  // For each split state p: L_{p,T} followed by L_{q0,p}.
  NfaBuilder builder(a.alphabet());
  for (State p = 0; p < n; ++p) {
    const State head = builder.embed(base);
    const State tail = builder.embed(base);
    builder.set_initial(head + p);
    for (State f : finals) builder.add_epsilon(head + f, tail + a.initial());
    builder.set_final(tail + p);
  }
  return determinize_minimize(builder.build());
}

Nfa state_slice(const Nfa& a, std::span<const State> from, std::span<const State> to) {
  Nfa out(a.alphabet(), a.state_count());
  for (const auto& t : a.transitions()) out.add_transition(t.from, t.letter, t.to);
  for (State s : from) out.set_initial(s);
  for (State s : to) out.set_final(s);
  return out;
}

Nfa state_slice(const Dfa& a, std::span<const State> from, std::span<const State> to) {
  Nfa base = a.to_nfa();
  base.set_initial(a.initial(), false);
  for (State s = 0; s < a.state_count(); ++s) base.set_final(s, false);
  for (State s : from) base.set_initial(s);
  for (State s : to) base.set_final(s);
  return base;
}

Dfa dfa_slice(const Dfa& a, State from, std::span<const State> to) {
  Dfa out = a;
  out.set_initial(from);
  for (State s = 0; s < out.state_count(); ++s) out.set_final(s, false);
  for (State s : to) out.set_final(s);
  return out;
}

bool accepts(const Dfa& a, const Word& w) {
  State s = a.initial();
  for (Letter x : w) {
    if (!a.alphabet().contains(x)) return false;
    s = a.next(s, x);
    if (s == kNone) return false;
  }
  return a.is_final(s);
}

bool accepts(const Nfa& a, const Word& w) {
  std::vector<State> current = a.initial_states();
  for (Letter x : w) {
    if (!a.alphabet().contains(x)) return false;
    std::vector<State> next;
    for (State s : current) {
      auto succ = a.next(s, x);
      next.insert(next.end(), succ.begin(), succ.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [&](State s) { return a.is_final(s); });
}

bool is_empty(const Dfa& a) { return !coreachable(a)[a.initial()]; }

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) return false;
  return minimize(a) == minimize(b);
}

namespace {

// can[r][s]: some word of length exactly r leads from s to a final state.
std::vector<std::vector<bool>> exact_reach(const Dfa& a, std::size_t max_len) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<bool>> can(max_len + 1, std::vector<bool>(n, false));
  for (State s = 0; s < n; ++s) can[0][s] = a.is_final(s);
  for (std::size_t r = 1; r <= max_len; ++r) {
    for (State s = 0; s < n; ++s) {
      for (Letter x = 0; x < a.alphabet().size() && !can[r][s]; ++x) {
        State t = a.next(s, x);
        can[r][s] = t != kNone && can[r - 1][t];
      }
    }
  }
  return can;
}

void enumerate_exact(const Dfa& a, const std::vector<std::vector<bool>>& can, State s, std::size_t remaining,
                     Word& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (Letter x = 0; x < a.alphabet().size(); ++x) {
    State t = a.next(s, x);
    if (t == kNone || !can[remaining - 1][t]) continue;
    prefix.push_back(x);
    enumerate_exact(a, can, t, remaining - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_length(const Dfa& a, std::size_t len) {
  const auto can = exact_reach(a, len);
  std::vector<Word> out;
  if (!can[len][a.initial()]) return out;
  Word prefix;
  enumerate_exact(a, can, a.initial(), len, prefix, out);
  return out;
}

std::vector<Word> enumerate(const Dfa& a, std::size_t max_len) {
  const auto can = exact_reach(a, max_len);
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (!can[len][a.initial()]) continue;
    Word prefix;
    enumerate_exact(a, can, a.initial(), len, prefix, out);
  }
  return out;
}

CountVector count(const Dfa& a, std::size_t max_len) {
  const std::size_t n = a.state_count();
  std::vector<BigInt> paths(n, 0);
  paths[a.initial()] = 1;
  CountVector out;
  out.reserve(max_len + 1);
  for (std::size_t len = 0;; ++len) {
    BigInt total = 0;
    for (State s = 0; s < n; ++s) {
      if (a.is_final(s)) total += paths[s];
    }
    out.push_back(total);
    if (len == max_len) break;
    std::vector<BigInt> next(n, 0);
    for (State s = 0; s < n; ++s) {
      if (paths[s] == 0) continue;
      for (Letter x = 0; x < a.alphabet().size(); ++x) {
        if (State t = a.next(s, x); t != kNone) next[t] += paths[s];
      }
    }
    paths = std::move(next);
  }
  return out;
}

std::optional<Word> shortest_word(const Dfa& a) {
  // BFS in letter order yields the shortlex-least word.
  const std::size_t n = a.state_count();
  std::vector<State> parent(n, kNone);
  std::vector<Letter> via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<State> queue{a.initial()};
  seen[a.initial()] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (a.is_final(s)) {
      std::vector<Letter> letters;
      for (State c = s; c != a.initial(); c = parent[c]) letters.push_back(via[c]);
      std::reverse(letters.begin(), letters.end());
      return Word(std::move(letters));
    }
    for (Letter x = 0; x < a.alphabet().size(); ++x) {
      State t = a.next(s, x);
      if (t != kNone && !seen[t]) {
        seen[t] = true;
        parent[t] = s;
        via[t] = x;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> first_letters(const Dfa& input) {
  const Dfa a = trim(input);
  std::vector<bool> out(static_cast<std::size_t>(a.alphabet().size()), false);
  for (Letter x = 0; x < a.alphabet().size(); ++x) out[x] = a.next(a.initial(), x) != kNone;
  return out;
}

std::vector<bool> last_letters(const Dfa& input) {
  const Dfa a = trim(input);
  std::vector<bool> out(static_cast<std::size_t>(a.alphabet().size()), false);
  for (State s = 0; s < a.state_count(); ++s) {
    for (Letter x = 0; x < a.alphabet().size(); ++x) {
      State t = a.next(s, x);
      if (t != kNone && a.is_final(t)) out[x] = true;
    }
  }
  return out;
}

}  // namespace conjlang
