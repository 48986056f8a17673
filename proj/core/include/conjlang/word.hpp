#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjlang/alphabet.hpp"

namespace conjlang {

/// A word over an involutive alphabet. Words are plain letter sequences;
/// they are compared in shortlex order (length first, then letter ids).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }

  /// Prefix of length i (w^{[i]}).
  Word prefix(std::size_t i) const;
  Word suffix_from(std::size_t i) const;

  /// Literal concatenation; no cancellation.
  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Parses letters a-z (generators) and A-Z (inverses); "1" is the empty word.
/// Throws ParseError naming the offending position.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Letters as text; the empty word prints as "1".
std::string to_string(const Word& w);

/// Formal inverse: reversed order, each letter involuted.
Word formal_inverse(const Word& w);

bool is_reduced(const Word& w);
Word reduce(const Word& w);

/// Free product of two words, reduced.
Word multiply(const Word& a, const Word& b);

/// `input =_G conjugator^{-1} * core * conjugator` with `core` cyclically
/// reduced and `conjugator` reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& w);

/// Reduced, and the first letter is not the inverse of the last.
bool is_cyclically_reduced(const Word& w);

/// Distinct cyclic permutations of w, in order of rotation offset.
std::vector<Word> rotations(const Word& w);

/// Rotation starting at offset k: w[k..] w[..k].
Word rotate(const Word& w, std::size_t k);

/// Shortlex-least rotation (Booth's algorithm).
Word least_rotation(const Word& w);

/// A witness z with reduce(z^{-1} u z) == reduce(v), if u and v are conjugate.
std::optional<Word> conjugacy_test(const Word& u, const Word& v);

/// Shortlex conjugacy normal form: least rotation of the cyclic core.
Word conj_canonical(const Word& w);

}  // namespace conjlang

template <>
struct std::hash<conjlang::Word> {
  std::size_t operator()(const conjlang::Word& w) const noexcept {
    std::size_t h = w.size();
    for (auto x : w) h = h * 1099511628211ULL ^ x;
    return h;
  }
};
