#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "conjlang/dfa.hpp"
#include "conjlang/nfa.hpp"

namespace conjlang {

/// Line-oriented automaton text format:
///
///     rank: 2          (optional; must not exceed the reader's alphabet)
///     states: 3
///     initial: 0       (one or more ids)
///     final: 1 2       (zero or more ids)
///     trans: 0 a 1     (source, letter symbol, target)
///
/// Blank lines and lines starting with '#' are ignored. Errors throw
/// ParseError carrying the 1-based line number.
Nfa read_automaton(std::string_view text, const Alphabet& alphabet);
Nfa read_automaton_file(const std::string& path, const Alphabet& alphabet);

/// Writes the format above; transitions in (source, letter) order.
void write_automaton(std::ostream& out, const Dfa& a);
void write_automaton(std::ostream& out, const Nfa& a);
std::string automaton_text(const Dfa& a);

}  // namespace conjlang
