#include "conjlang/alphabet.hpp"

#include <stdexcept>
#include <string>

#include "conjlang/error.hpp"

namespace conjlang {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("alphabet rank must be in [1, 26], got " + std::to_string(rank));
  }
}

char Alphabet::symbol(Letter x) const {
  if (!contains(x)) throw std::out_of_range("letter id outside alphabet");
  const char base = is_generator(x) ? 'a' : 'A';
  return static_cast<char>(base + x / 2);
}

std::optional<Letter> Alphabet::letter(char symbol) const noexcept {
  if (symbol >= 'a' && symbol <= 'z' && symbol - 'a' < rank_) {
    return static_cast<Letter>(2 * (symbol - 'a'));
  }
  if (symbol >= 'A' && symbol <= 'Z' && symbol - 'A' < rank_) {
    return static_cast<Letter>(2 * (symbol - 'A') + 1);
  }
  return std::nullopt;
}

void require_same(const Alphabet& a, const Alphabet& b) {
  if (a != b) {
    throw MismatchError("alphabet mismatch: rank " + std::to_string(a.rank()) + " vs rank " +
                        std::to_string(b.rank()));
  }
}

}  // namespace conjlang
