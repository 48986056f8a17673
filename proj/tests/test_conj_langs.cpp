#include <doctest.h>

#include <random>

#include "conjlang/automata.hpp"
#include "conjlang/conj_langs.hpp"
#include "conjlang/error.hpp"
#include "conjlang/regex.hpp"
#include "oracles.hpp"

using namespace conjlang;
using oracle::w;

namespace {

const Alphabet kAb(2);

Dfa dfa(const char* expr) { return determinize_minimize(parse_regex(expr, kAb)); }
RationalSubset rs(const char* expr) { return RationalSubset::from_regex(expr, kAb); }
RationalSubset all() { return RationalSubset::whole_group(kAb); }

std::set<Word> words_of(const Dfa& a, std::size_t n) {
  auto v = enumerate(a, n);
  return {v.begin(), v.end()};
}

std::set<Word> wordset(std::initializer_list<const char*> ws) {
  std::set<Word> out;
  for (const char* x : ws) out.insert(w(x));
  return out;
}

}  // namespace

TEST_CASE("cycgeo") {
  const Dfa c = cycgeo_all(kAb);
  CHECK(accepts(c, w("aa")));
  CHECK(accepts(c, w("ab")));
  CHECK_FALSE(accepts(c, w("abA")));
  const CountVector n = count(c, 8);
  CHECK(n[2] == 12);
  // 3^n + 1 + (1 + (-1)^n)
  for (int len = 1; len <= 8; ++len) {
    BigInt p = 1;
    for (int i = 0; i < len; ++i) p *= 3;
    CHECK(n[static_cast<std::size_t>(len)] == p + 1 + (len % 2 == 0 ? 2 : 0));
  }
  CHECK(equivalent(intersect(c, reduced_words_dfa(kAb)), c));
}

TEST_CASE("permutation language") {
  CHECK(words_of(perm_language(dfa("ab"), dfa("a"), Side::kLeft), 6) == wordset({"ba"}));
  CHECK(words_of(perm_language(dfa("ab"), dfa("1|a"), Side::kLeft), 6) == wordset({"ab", "ba"}));
  CHECK(equivalent(perm_language(dfa("(ab)*"), dfa("a"), Side::kLeft), dfa("b(ab)*a")));
  // Right side: { l^{-1} u : u l^{-1} in K, l in L }, i.e. rotate a suffix to the front.
  CHECK(words_of(perm_language(dfa("ab"), dfa("B"), Side::kRight), 6) == wordset({"ba"}));

  std::mt19937 rng(41);
  for (int i = 0; i < 10; ++i) {
    const Dfa k = determinize_minimize(oracle::random_nfa(rng, kAb, 4));
    const Dfa l = determinize_minimize(oracle::random_nfa(rng, kAb, 3));
    std::set<Word> expected;
    const auto ls = words_of(l, 6);
    for (const Word& x : enumerate(k, 6)) {
      for (std::size_t cut = 0; cut <= x.size(); ++cut) {
        if (ls.count(x.prefix(cut))) expected.insert(x.suffix_from(cut) + x.prefix(cut));
      }
    }
    CHECK(words_of(perm_language(k, l, Side::kLeft), 6) == expected);
  }
}

TEST_CASE("power rotations cover conjugators with a power prefix") {
  // (aa)^{-1} a (aa) = a although no word of L is a prefix of a.
  CHECK(is_empty(perm_language(dfa("a"), dfa("aa"), Side::kLeft)));
  CHECK(words_of(power_rotations(dfa("a"), dfa("aa")), 4) == wordset({"a"}));
  // (abab a)^{-1} ab (abab a) = ba.
  CHECK(words_of(power_rotations(dfa("ab"), dfa("ababa")), 4) == wordset({"ba"}));
  CHECK(is_empty(power_rotations(dfa("ab"), dfa("abb"))));
}

TEST_CASE("reduced pair examples") {
  ConjLangResult r = conjgeo_reduced_pair(rs("(ab)+"), rs("a"));
  CHECK(r.provenance == Provenance::kReducedPair);
  CHECK(equivalent(r.conjgeo, dfa("(ba)+")));
  CHECK(words_of(conjgeo_reduced_pair(rs("ab"), rs("1")).conjgeo, 6) == wordset({"ab"}));
  CHECK(is_empty(conjgeo_reduced_pair(rs("aa"), rs("b")).conjgeo));
  CHECK(words_of(conjgeo_reduced_pair(rs("a"), rs("aa")).conjgeo, 4) == wordset({"a"}));
}

TEST_CASE("reduced pair precondition") {
  CHECK(reduced_pair_side(dfa("ab"), dfa("a")) == Side::kLeft);
  CHECK(reduced_pair_side(dfa("ab"), dfa("B")) == Side::kRight);
  CHECK_FALSE(reduced_pair_side(dfa("ab|Ab"), dfa("B|b|A")).has_value());
  CHECK_THROWS_AS(conjgeo_reduced_pair(dfa("ab"), dfa("B"), Side::kLeft), PreconditionError);
  try {
    conjgeo_reduced_pair(dfa("ab"), dfa("B"), Side::kLeft);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("u=ab") != std::string::npos);
    CHECK(std::string(e.what()).find("v=B") != std::string::npos);
  }
}

TEST_CASE("general construction examples") {
  ConjLangResult r = conjgeo_general(rs("ab"), all());
  CHECK(r.provenance == Provenance::kGeneral);
  CHECK(words_of(r.conjgeo, 8) == wordset({"ab", "ba"}));
  CHECK(equivalent(conjgeo_general(rs("a*|A+"), all()).conjgeo, dfa("1|a+|A+")));
  CHECK(equivalent(conjgeo_general(rs("(ab)+"), rs("a")).conjgeo, conjgeo_reduced_pair(rs("(ab)+"), rs("a")).conjgeo));
  // The identity survives conjugation.
  CHECK(accepts(conjgeo_general(rs("1"), rs("ab")).conjgeo, Word{}));
  CHECK(is_empty(conjgeo_general(rs("ab"), RationalSubset(Nfa(kAb, 1))).conjgeo));
}

TEST_CASE("general construction matches brute force on finite inputs") {
  std::mt19937 rng(42);
  for (int i = 0; i < 25; ++i) {
    std::vector<Word> us, vs;
    for (int j = 0; j < 3; ++j) us.push_back(oracle::random_word(rng, kAb, 4));
    for (int j = 0; j < 3; ++j) vs.push_back(oracle::random_word(rng, kAb, 4));
    const RationalSubset u = RationalSubset::from_words(kAb, us);
    const RationalSubset v = RationalSubset::from_words(kAb, vs);
    const auto expected = oracle::brute_conjgeo(us, vs, 12);
    CHECK(words_of(conjgeo_general(u, v).conjgeo, 12) == expected);
  }
}

TEST_CASE("general construction on random rational sets") {
  std::mt19937 rng(43);
  for (int i = 0; i < 15; ++i) {
    const RationalSubset u(oracle::random_nfa(rng, kAb, 4));
    const RationalSubset v(oracle::random_nfa(rng, kAb, 3));
    const auto got = enumerate(conjgeo_general(u, v).conjgeo, 4);
    const std::set<Word> got_set(got.begin(), got.end());
    // Completeness against conjugates of short elements by short conjugators.
    const auto us = enumerate(u.reduced(), 6);
    const auto vs = enumerate(v.reduced(), 5);
    for (const Word& x : oracle::brute_conjgeo(us, vs, 4)) CHECK(got_set.count(x) == 1);
    // Soundness: every accepted word has a conjugator in V.
    const auto long_vs = enumerate(v.reduced(), 8);
    for (const Word& x : got) {
      bool witnessed = false;
      for (const Word& y : long_vs) {
        if (member(u, oracle::product({y, x, oracle::naive_inverse(y)}))) {
          witnessed = true;
          break;
        }
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("unconstrained construction") {
  CHECK(words_of(conjgeo_unconstrained(rs("Aba")).conjgeo, 6) == wordset({"b"}));
  CHECK(equivalent(conjgeo_unconstrained(rs("(abA)*")).conjgeo, dfa("1|b+")));
  CHECK(conjgeo_unconstrained(rs("ab")).provenance == Provenance::kCycredClosure);
  CHECK(equivalent(cycred_closure(dfa("aabAA")), dfa("aabAA|abA|b")));
}

TEST_CASE("minimal-length shortlex sublanguage") {
  const ConjLangResult r = conjgeo_general(rs("ab"), all());
  CHECK(equivalent(r.conjminlensl, r.conjgeo));
  CHECK(words_of(conjminlensl(rs("ab"), all()), 4) == wordset({"ab", "ba"}));
  CHECK(is_empty(conjminlensl(RationalSubset(Nfa(kAb, 1)), all())));
}

TEST_CASE("conjugacy normal forms") {
  CHECK(conjsl_enum(rs("ab"), 2) == std::vector<Word>{w("ab")});
  CHECK(conjsl_enum(all(), 1) == std::vector<Word>{Word{}, w("a"), w("A"), w("b"), w("B")});
  const auto forms = conjsl_enum(all(), 4);
  std::set<Word> reps;
  for (const Word& f : forms) reps.insert(oracle::naive_class_rep(f));
  CHECK(reps.size() == forms.size());
  CHECK(std::is_sorted(forms.begin(), forms.end()));
}
