#include "conjlang/word.hpp"

#include <algorithm>

#include "conjlang/error.hpp"

namespace conjlang {

Word Word::prefix(std::size_t i) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(i)));
}

Word Word::suffix_from(std::size_t i) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i), letters_.end()));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  if (text == "1") return {};
  if (text.empty()) throw ParseError("empty word text (use \"1\" for the identity)", 0);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto x = alphabet.letter(text[i]);
    if (!x) {
      throw ParseError(std::string("invalid letter '") + text[i] + "' at position " + std::to_string(i) +
                           " for rank " + std::to_string(alphabet.rank()),
                       i);
    }
    letters.push_back(*x);
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (auto x : w) s.push_back(static_cast<char>((Alphabet::is_generator(x) ? 'a' : 'A') + x / 2));
  return s;
}

Word formal_inverse(const Word& w) {
  std::vector<Letter> out(w.size());
  std::transform(w.letters().rbegin(), w.letters().rend(), out.begin(), Alphabet::inverse);
  return Word(std::move(out));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == Alphabet::inverse(w[i - 1])) return false;
  }
  return true;
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (auto x : w) {
    if (!stack.empty() && stack.back() == Alphabet::inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

Word multiply(const Word& a, const Word& b) { return reduce(a + b); }

CyclicReduction cyclic_reduce(const Word& w) {
  const Word r = reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[hi - 1] == Alphabet::inverse(r[lo])) {
    ++lo;
    --hi;
  }
  // r = x core x^{-1} with x = r[0..lo); conjugator = x^{-1}.
  CyclicReduction out;
  out.core = Word(std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(lo),
                                      r.begin() + static_cast<std::ptrdiff_t>(hi)));
  out.conjugator = formal_inverse(r.prefix(lo));
  return out;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != Alphabet::inverse(w.back());
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Letter> out(w.letters());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), out.end());
  return Word(std::move(out));
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
    Word r = rotate(w, k);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

Word least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return w;
  // Booth's least-rotation algorithm on the doubled word.
  std::vector<Letter> s(2 * n);
  std::copy(w.begin(), w.end(), s.begin());
  std::copy(w.begin(), w.end(), s.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    while (i != -1 && s[j] != s[k + static_cast<std::size_t>(i) + 1]) {
      if (s[j] < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && s[j] != s[k]) {
      if (s[j] < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return rotate(w, k);
}

std::optional<Word> conjugacy_test(const Word& u, const Word& v) {
  const CyclicReduction cu = cyclic_reduce(u);
  const CyclicReduction cv = cyclic_reduce(v);
  if (cu.core.size() != cv.core.size()) return std::nullopt;
  const std::size_t n = cu.core.size();
  for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) {
    if (n > 0 && rotate(cu.core, k) != cv.core) continue;
    // cu.core = s t, cv.core = t s = s^{-1} cu.core s with s = cu.core[0..k).
    const Word s = cu.core.prefix(n == 0 ? 0 : k);
    return reduce(formal_inverse(cu.conjugator) + s + cv.conjugator);
  }
  return std::nullopt;
}

Word conj_canonical(const Word& w) { return least_rotation(cyclic_reduce(w).core); }

}  // namespace conjlang
