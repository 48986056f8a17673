#include "conjlang/regex.hpp"

#include <string>

#include "conjlang/error.hpp"

namespace conjlang {

namespace {

// Thompson fragments over an NfaBuilder; epsilons are removed at the end.
struct Fragment {
  State start;
  State accept;
};

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet) : text_(text), builder_(alphabet) {}

  Nfa parse() {
    skip_spaces();
    if (at_end()) fail("empty expression");
    Fragment f = alternation();
    skip_spaces();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    builder_.set_initial(f.start);
    builder_.set_final(f.accept);
    return builder_.build();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("regex syntax error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_spaces() {
    while (!at_end() && text_[pos_] == ' ') ++pos_;
  }

  char peek() {
    skip_spaces();
    return at_end() ? '\0' : text_[pos_];
  }

  Fragment epsilon() {
    Fragment f{builder_.add_state(), builder_.add_state()};
    builder_.add_epsilon(f.start, f.accept);
    return f;
  }

  Fragment alternation() {
    Fragment left = concatenation();
    if (peek() != '|') return left;
    Fragment f{builder_.add_state(), builder_.add_state()};
    builder_.add_epsilon(f.start, left.start);
    builder_.add_epsilon(left.accept, f.accept);
    while (peek() == '|') {
      ++pos_;
      Fragment right = concatenation();
      builder_.add_epsilon(f.start, right.start);
      builder_.add_epsilon(right.accept, f.accept);
    }
    return f;
  }

  static bool starts_atom(char c) { return c == '(' || c == '1' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

  Fragment concatenation() {
    if (!starts_atom(peek())) fail(at_end() ? "unexpected end of expression" : std::string("expected a letter, '1' or '(' but found '") + text_[pos_] + "'");
    Fragment f = postfix();
    while (starts_atom(peek())) {
      Fragment next = postfix();
      builder_.add_epsilon(f.accept, next.start);
      f.accept = next.accept;
    }
    return f;
  }

  Fragment postfix() {
    Fragment f = atom();
    for (char c = peek(); c == '*' || c == '+' || c == '?'; c = peek()) {
      ++pos_;
      Fragment g{builder_.add_state(), builder_.add_state()};
      builder_.add_epsilon(g.start, f.start);
      builder_.add_epsilon(f.accept, g.accept);
      if (c != '+') builder_.add_epsilon(g.start, g.accept);
      if (c != '?') builder_.add_epsilon(f.accept, f.start);
      f = g;
    }
    return f;
  }

  Fragment atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      if (peek() == ')') fail("empty group");
      Fragment f = alternation();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return f;
    }
    if (c == '1') {
      ++pos_;
      return epsilon();
    }
    auto x = builder_.alphabet().letter(c);
    if (!x) {
      throw ParseError("letter '" + std::string(1, c) + "' at position " + std::to_string(pos_) +
                           " is outside alphabet rank " + std::to_string(builder_.alphabet().rank()),
                       pos_);
    }
    ++pos_;
    Fragment f{builder_.add_state(), builder_.add_state()};
    builder_.add_transition(f.start, *x, f.accept);
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  NfaBuilder builder_;
};

}  // namespace

Nfa parse_regex(std::string_view expr, const Alphabet& alphabet) { return RegexParser(expr, alphabet).parse(); }

}  // namespace conjlang
