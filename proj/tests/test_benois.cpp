#include <doctest.h>

#include <random>

#include "conjlang/automata.hpp"
#include "conjlang/benois.hpp"
#include "conjlang/regex.hpp"
#include "oracles.hpp"

using namespace conjlang;
using oracle::w;

namespace {

const Alphabet kAb(2);

std::set<Word> words_of(const Dfa& a, std::size_t n) {
  auto v = enumerate(a, n);
  return {v.begin(), v.end()};
}

RationalSubset rs(const char* expr) { return RationalSubset::from_regex(expr, kAb); }

}  // namespace

TEST_CASE("benois_reduce examples") {
  CHECK(words_of(rs("abB").reduced(), 6) == std::set<Word>{w("a")});
  CHECK(words_of(rs("aA").reduced(), 6) == std::set<Word>{Word{}});

  // (abA)* = 1 | a b^n A.
  std::set<Word> expected{Word{}};
  for (int n = 1; n <= 8; ++n) {
    Word x = w("a");
    for (int i = 0; i < n; ++i) x.push_back(2);
    x.push_back(1);
    if (x.size() <= 10) expected.insert(x);
  }
  CHECK(words_of(rs("(abA)*").reduced(), 10) == expected);
}

TEST_CASE("membership") {
  const RationalSubset u = rs("(abA)*");
  CHECK(member(u, w("abbA")));
  CHECK(member(u, w("abAabA")));
  CHECK_FALSE(member(rs("ab"), w("ba")));
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Word x = oracle::random_word(rng, kAb, 8);
    CHECK(member(u, x) == member(u, reduce(x)));
  }
}

TEST_CASE("reduced words automaton") {
  const Alphabet one(1);
  const Dfa r1 = reduced_words_dfa(one);
  CHECK(accepts(r1, w("aaa", 1)));
  CHECK(accepts(r1, w("AA", 1)));
  CHECK_FALSE(accepts(r1, w("aA", 1)));
  const Dfa r2 = reduced_words_dfa(kAb);
  CHECK(accepts(r2, w("abAB")));
  const CountVector c = count(r2, 8);
  BigInt expected = 4;
  for (std::size_t n = 1; n <= 8; ++n, expected *= 3) CHECK(c[n] == expected);
}

TEST_CASE("benois agrees with reduction of enumerated words") {
  std::mt19937 rng(32);
  for (int i = 0; i < 20; ++i) {
    const Nfa n = oracle::random_nfa(rng, kAb, 4);
    const RationalSubset u(n);
    CHECK(words_of(u.reduced(), 5) == oracle::reduced_images(n, 9, 5));
  }
}

TEST_CASE("whole group and finite subsets") {
  const RationalSubset all = RationalSubset::whole_group(kAb);
  CHECK(equivalent(all.reduced(), reduced_words_dfa(kAb)));
  const std::vector<Word> ws{w("aA"), w("abB"), w("b")};
  const RationalSubset fin = RationalSubset::from_words(kAb, ws);
  CHECK(words_of(fin.reduced(), 5) == std::set<Word>{Word{}, w("a"), w("b")});
}
