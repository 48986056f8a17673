#include "conjlang/automaton_io.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "conjlang/error.hpp"

namespace conjlang {

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw ParseError("automaton line " + std::to_string(line) + ": " + what, line);
}

std::vector<long long> read_ids(std::istringstream& in, std::size_t line) {
  std::vector<long long> ids;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(token, &used);
      if (used != token.size() || v < 0) throw std::invalid_argument(token);
      ids.push_back(v);
    } catch (const std::exception&) {
      fail_line(line, "expected a non-negative state id, got '" + token + "'");
    }
  }
  return ids;
}

}  // namespace

Nfa read_automaton(std::string_view text, const Alphabet& alphabet) {
  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> states;
  std::vector<std::pair<std::size_t, long long>> initial;
  std::vector<std::pair<std::size_t, long long>> finals;
  struct PendingTransition {
    std::size_t line;
    long long from;
    Letter letter;
    long long to;
  };
  std::vector<PendingTransition> transitions;

  while (std::getline(lines, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    const auto colon = raw.find(':');
    if (colon == std::string::npos) fail_line(line_no, "missing ':' in '" + raw + "'");
    std::string key = raw.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::istringstream rest(raw.substr(colon + 1));

    if (key == "states") {
      auto ids = read_ids(rest, line_no);
      if (ids.size() != 1) fail_line(line_no, "'states:' takes exactly one count");
      if (states) fail_line(line_no, "duplicate 'states:' declaration");
      states = static_cast<std::size_t>(ids[0]);
    } else if (key == "rank") {
      auto ids = read_ids(rest, line_no);
      if (ids.size() != 1) fail_line(line_no, "'rank:' takes exactly one value");
      if (ids[0] > alphabet.rank()) {
        fail_line(line_no, "automaton rank " + std::to_string(ids[0]) + " exceeds alphabet rank " +
                               std::to_string(alphabet.rank()));
      }
    } else if (key == "initial") {
      for (auto id : read_ids(rest, line_no)) initial.emplace_back(line_no, id);
    } else if (key == "final") {
      for (auto id : read_ids(rest, line_no)) finals.emplace_back(line_no, id);
    } else if (key == "trans") {
      std::string from;
      std::string symbol;
      std::string to;
      std::string extra;
      if (!(rest >> from >> symbol >> to) || (rest >> extra)) {
        fail_line(line_no, "'trans:' expects 'source letter target'");
      }
      if (symbol.size() != 1 || !alphabet.letter(symbol[0])) {
        fail_line(line_no, "invalid letter '" + symbol + "' for rank " + std::to_string(alphabet.rank()));
      }
      std::istringstream ids(from + " " + to);
      auto pair = read_ids(ids, line_no);
      transitions.push_back({line_no, pair[0], *alphabet.letter(symbol[0]), pair[1]});
    } else {
      fail_line(line_no, "unknown declaration '" + key + "'");
    }
  }
  if (!states) throw ParseError("automaton is missing a 'states:' declaration", line_no);

  auto check = [&](std::size_t line, long long id) {
    if (static_cast<std::size_t>(id) >= *states) {
      fail_line(line, "state " + std::to_string(id) + " out of range (" + std::to_string(*states) + " states)");
    }
    return static_cast<State>(id);
  };
  Nfa out(alphabet, *states);
  for (auto [line, id] : initial) out.set_initial(check(line, id));
  for (auto [line, id] : finals) out.set_final(check(line, id));
  for (const auto& t : transitions) out.add_transition(check(t.line, t.from), t.letter, check(t.line, t.to));
  return out;
}

Nfa read_automaton_file(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open automaton file '" + path + "'", 0);
  std::ostringstream text;
  text << in.rdbuf();
  return read_automaton(text.str(), alphabet);
}

void write_automaton(std::ostream& out, const Nfa& a) {
  out << "rank: " << a.alphabet().rank() << '\n';
  out << "states: " << a.state_count() << '\n';
  out << "initial:";
  for (State s : a.initial_states()) out << ' ' << s;
  out << "\nfinal:";
  for (State s : a.final_states()) out << ' ' << s;
  out << '\n';
  for (const auto& t : a.transitions()) {
    out << "trans: " << t.from << ' ' << a.alphabet().symbol(t.letter) << ' ' << t.to << '\n';
  }
}

void write_automaton(std::ostream& out, const Dfa& a) { write_automaton(out, a.to_nfa()); }

std::string automaton_text(const Dfa& a) {
  std::ostringstream out;
  write_automaton(out, a);
  return out.str();
}

}  // namespace conjlang
