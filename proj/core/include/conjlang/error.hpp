#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conjlang {

/// Malformed textual input (regex, word, automaton or group file).
/// `position` is a 0-based character offset for regexes and words, and a
/// 1-based line number for file formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Two automata or sets were combined over incompatible alphabets/dimensions.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction was called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace conjlang
