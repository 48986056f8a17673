#pragma once

#include <string_view>

#include "conjlang/nfa.hpp"

namespace conjlang {

/// Parses a rational expression over the alphabet into an epsilon-free Nfa.
///
/// Syntax: letters a-z are generators and A-Z their inverses; `1` is the
/// empty word; juxtaposition concatenates; `|` is union; postfix `*`, `+`
/// and `?` are Kleene star, plus and option; parentheses group. Spaces are
/// ignored. Throws ParseError with the character offset of the problem.
Nfa parse_regex(std::string_view expr, const Alphabet& alphabet);

}  // namespace conjlang
