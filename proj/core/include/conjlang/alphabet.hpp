#pragma once

#include <cstdint>
#include <optional>

namespace conjlang {

using Letter = std::uint8_t;

/// Generators x_0..x_{r-1} together with their formal inverses.
///
/// Letter ids interleave generators and inverses: generator i is 2i and its
/// inverse is 2i+1, so the involution is `id ^ 1`. The id order is also the
/// fixed shortlex order a < A < b < B < ... used throughout the library.
/// Generators print as lowercase letters, inverses as uppercase.
class Alphabet {
 public:
  static constexpr int kMaxRank = 26;

  explicit Alphabet(int rank);

  int rank() const noexcept { return rank_; }
  int size() const noexcept { return 2 * rank_; }

  static constexpr Letter inverse(Letter x) noexcept { return static_cast<Letter>(x ^ 1U); }
  static constexpr bool is_generator(Letter x) noexcept { return (x & 1U) == 0; }
  static constexpr Letter generator(int i) noexcept { return static_cast<Letter>(2 * i); }

  bool contains(Letter x) const noexcept { return x < size(); }

  char symbol(Letter x) const;
  /// Letter for a symbol, or nullopt when the symbol is not a letter of
  /// this alphabet (wrong case-class or beyond the rank).
  std::optional<Letter> letter(char symbol) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int rank_;
};

/// Throws MismatchError unless both alphabets are equal.
void require_same(const Alphabet& a, const Alphabet& b);

}  // namespace conjlang
