#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <sstream>

#include "conjlang/automata.hpp"
#include "conjlang/automaton_io.hpp"
#include "conjlang/benois.hpp"
#include "conjlang/conj_langs.hpp"
#include "conjlang/error.hpp"
#include "conjlang/gcp.hpp"
#include "conjlang/growth.hpp"
#include "conjlang/regex.hpp"
#include "conjlang/virtually_abelian.hpp"

namespace conjlang::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

constexpr const char* kFormats = R"(
Languages (--u, --v):
  A rational expression over a..z (generators) and A..Z (inverses):
  juxtaposition, |, *, +, ?, parentheses, 1 for the empty word.
    conjlang conjgeo --u "(ab)+" --v a --emit enum 6
  Or @path for an automaton file:
    rank: 2
    states: 2
    initial: 0
    final: 1
    trans: 0 a 1
    trans: 1 b 0
  Lines starting with # are comments. --v defaults to the whole free group.

Words: letters as above, 1 for the empty word.
    conjlang reduce abB           -> a
    conjlang gcp --g Aba --u b --v "a*"

Group files (va): JSON with m, cosets, Q (one m x m integer matrix per
coset, acting on row vectors), coset_product (k x k table), cocycle
(k x k table of vectors), optional names. Coset 0 is the identity.
  {"m":1,"cosets":2,"names":["id","flip"],"Q":[[[1]],[[-1]]],
   "coset_product":[[0,1],[1,0]],"cocycle":[[[0],[0]],[[0],[0]]]}
Subset files: {"components":[{"coset":"flip","base":[1],"periods":[]}]}

Exit codes: 0 success or yes, 1 no, 2 usage or input error.
)";

RationalSubset load_language(const std::string& arg, const Alphabet& alphabet) {
  if (!arg.empty() && arg.front() == '@') return RationalSubset(read_automaton_file(arg.substr(1), alphabet));
  return RationalSubset(parse_regex(arg, alphabet));
}

struct Emit {
  std::vector<std::string> mode{"dfa"};

  void attach(CLI::App* cmd) {
    cmd->add_option("--emit", mode, "dfa (automaton dump) or enum N (accepted words up to length N)")
        ->expected(1, 2);
  }

  void validate() const {
    if (mode.empty() || mode.size() > 2) throw CLI::ValidationError("--emit", "expected dfa or enum N");
    if (mode[0] == "dfa" && mode.size() == 1) return;
    if (mode[0] == "enum") return;
    throw CLI::ValidationError("--emit", "expected dfa or enum N");
  }

  void write(std::ostream& out, const Dfa& a, const std::string& comment = {}) const {
    if (mode[0] == "dfa") {
      if (!comment.empty()) out << "# " << comment << "\n";
      write_automaton(out, a);
      return;
    }
    const std::size_t max_len = mode.size() == 2 ? std::stoul(mode[1]) : 8;
    for (const Word& w : enumerate(a, max_len)) out << to_string(w) << "\n";
  }
};

std::string format_vec(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void write_subset(std::ostream& out, const VAPresentation& g, const VASubset& u) {
  for (const VAComponent& c : u.components) {
    for (const LinearSet& l : c.set.components) {
      out << g.names[c.coset] << "\t" << format_vec(l.base);
      for (const Vec& p : l.periods) out << " +N" << format_vec(p);
      out << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy languages relative to rational subsets of free groups", "conjlang"};
  app.footer(kFormats);
  app.require_subcommand(1);
  int rank = 2;
  app.add_option("--rank", rank, "number of free generators (1-26)")->check(CLI::Range(1, 26));

  auto sub = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  std::string word_a, word_b, lang_u, lang_v;
  std::size_t max_n = 8;

  CLI::App* reduce_cmd = sub("reduce", "print the reduced form of a word");
  reduce_cmd->add_option("word", word_a, "word")->required();

  CLI::App* conjtest_cmd = sub("conjtest", "test whether two words are conjugate; prints z with z^-1 u z = v");
  conjtest_cmd->add_option("u", word_a, "word")->required();
  conjtest_cmd->add_option("v", word_b, "word")->required();

  Emit benois_emit;
  CLI::App* benois_cmd = sub("benois", "reduced representatives of a rational subset");
  benois_cmd->add_option("--u", lang_u, "language")->required();
  benois_emit.attach(benois_cmd);

  Emit conjgeo_emit;
  std::string method = "auto";
  bool minlen = false;
  CLI::App* conjgeo_cmd = sub("conjgeo", "cyclically reduced conjugates of U by V");
  conjgeo_cmd->add_option("--u", lang_u, "conjugated language")->required();
  conjgeo_cmd->add_option("--v", lang_v, "conjugator language (default: the whole group)");
  conjgeo_cmd->add_option("--method", method, "auto, general, reduced or unconstrained")
      ->check(CLI::IsMember({"auto", "general", "reduced", "unconstrained"}));
  conjgeo_cmd->add_flag("--minlen", minlen, "emit the shortlex-reduced sublanguage");
  conjgeo_emit.attach(conjgeo_cmd);

  CLI::App* conjsl_cmd = sub("conjsl", "shortlex conjugacy normal forms of classes meeting U");
  conjsl_cmd->add_option("--u", lang_u, "language")->required();
  conjsl_cmd->add_option("--max", max_n, "maximal |g|_c")->required();

  bool tsv = false;
  CLI::App* growth_cmd = sub("growth", "relative conjugacy growth c(n), cc(n)");
  growth_cmd->add_option("--u", lang_u, "language")->required();
  growth_cmd->add_option("--max", max_n, "largest n")->required();
  growth_cmd->add_flag("--tsv", tsv, "rows n=1..max as n<TAB>c<TAB>cc");

  int degree = 1;
  std::optional<std::size_t> from, to;
  bool show_table = false;
  CLI::App* ud_cmd = sub("ud", "growth-degree fit for the subsets U_d");
  ud_cmd->add_option("--degree", degree, "d >= 1")->required()->check(CLI::Range(1, 26));
  ud_cmd->add_option("--max", max_n, "largest n")->required();
  ud_cmd->add_option("--from", from, "window start (default ceil(max/3))");
  ud_cmd->add_option("--to", to, "window end (default max)");
  ud_cmd->add_flag("--table", show_table, "also print the growth table");

  bool witness = false;
  CLI::App* gcp_cmd = sub("gcp", "is g = v^-1 u v for some u in U, v in V?");
  gcp_cmd->add_option("--g", word_a, "word")->required();
  gcp_cmd->add_option("--u", lang_u, "language")->required();
  gcp_cmd->add_option("--v", lang_v, "conjugator language (default: the whole group)");
  gcp_cmd->add_flag("--witness", witness, "print u and v");

  CLI::App* double_cmd = sub("doublegcp", "do U and V meet a common conjugacy class?");
  double_cmd->add_option("--u", lang_u, "language")->required();
  double_cmd->add_option("--v", lang_v, "language")->required();

  std::string group_file, subset_file;
  std::optional<std::int64_t> box;
  std::int64_t radius = 3;
  std::optional<std::int64_t> conj_radius;
  CLI::App* va_cmd = sub("va", "virtually abelian groups");
  va_cmd->require_subcommand(1);
  CLI::App* alpha_cmd = va_cmd->add_subcommand("alpha", "all conjugates of a subset");
  alpha_cmd->fallthrough();
  alpha_cmd->add_option("--group", group_file, "group file")->required();
  alpha_cmd->add_option("--subset", subset_file, "subset file")->required();
  alpha_cmd->add_option("--box", box, "list the elements with vector part in [-r,r]^m instead");
  CLI::App* brute_cmd = va_cmd->add_subcommand("brute", "conjugates by explicit conjugation in a ball");
  brute_cmd->fallthrough();
  brute_cmd->add_option("--group", group_file, "group file")->required();
  brute_cmd->add_option("--subset", subset_file, "subset file")->required();
  brute_cmd->add_option("--radius", radius, "source and conjugator radius");
  brute_cmd->add_option("--conj-radius", conj_radius, "conjugator radius (default --radius)");

  std::vector<std::string> argv_store{"conjlang"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    benois_emit.validate();
    conjgeo_emit.validate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    const Alphabet alphabet(rank);

    if (*reduce_cmd) {
      out << to_string(reduce(parse_word(word_a, alphabet))) << "\n";
      return kYes;
    }
    if (*conjtest_cmd) {
      const auto z = conjugacy_test(parse_word(word_a, alphabet), parse_word(word_b, alphabet));
      if (!z) {
        out << "no\n";
        return kNo;
      }
      out << "yes " << to_string(*z) << "\n";
      return kYes;
    }
    if (*benois_cmd) {
      benois_emit.write(out, load_language(lang_u, alphabet).reduced());
      return kYes;
    }
    if (*conjgeo_cmd) {
      const RationalSubset u = load_language(lang_u, alphabet);
      const bool has_v = !lang_v.empty();
      const RationalSubset v = has_v ? load_language(lang_v, alphabet) : RationalSubset::whole_group(alphabet);
      ConjLangResult r = [&] {
        if (method == "reduced") return conjgeo_reduced_pair(u, v);
        if (method == "unconstrained" || (method == "auto" && !has_v)) {
          if (has_v) throw std::invalid_argument("--method unconstrained takes no --v");
          return conjgeo_unconstrained(u);
        }
        return conjgeo_general(u, v);
      }();
      conjgeo_emit.write(out, minlen ? r.conjminlensl : r.conjgeo, std::string("construction: ") + to_string(r.provenance));
      return kYes;
    }
    if (*conjsl_cmd) {
      for (const Word& w : conjsl_enum(load_language(lang_u, alphabet), max_n)) out << to_string(w) << "\n";
      return kYes;
    }
    if (*growth_cmd) {
      const GrowthTable t = relative_growth(load_language(lang_u, alphabet), max_n);
      if (!tsv) out << "n\tc\tcc\n";
      for (std::size_t n = tsv ? 1 : 0; n <= max_n; ++n) out << n << "\t" << t.strict[n] << "\t" << t.cumulative[n] << "\n";
      return kYes;
    }
    if (*ud_cmd) {
      const UdSubset ud = build_ud(degree);
      const GrowthTable t = relative_growth(RationalSubset(ud.k_d), max_n);
      const std::size_t n1 = to.value_or(max_n);
      const std::size_t n0 = from.value_or((max_n + 2) / 3);
      if (show_table) {
        for (std::size_t n = 0; n <= max_n; ++n) out << n << "\t" << t.strict[n] << "\t" << t.cumulative[n] << "\n";
      }
      out << "degree " << degree << " window [" << n0 << "," << n1 << "] slope " << std::fixed << std::setprecision(4)
          << degree_estimate(t, n0, n1) << "\n";
      return kYes;
    }
    if (*gcp_cmd) {
      GcpInstance inst{parse_word(word_a, alphabet), load_language(lang_u, alphabet),
                       lang_v.empty() ? RationalSubset::whole_group(alphabet) : load_language(lang_v, alphabet)};
      GcpOptions opts;
      opts.want_witness = witness;
      const GcpResult r = decide_gcp(inst, opts);
      out << (r.conjugate ? "yes" : "no");
      if (r.witness) out << " u=" << to_string(r.witness->u) << " v=" << to_string(r.witness->v);
      else if (r.conjugate && witness) out << " (no witness within the search bound)";
      out << "\n";
      return r.conjugate ? kYes : kNo;
    }
    if (*double_cmd) {
      const bool yes = decide_double_gcp(load_language(lang_u, alphabet), load_language(lang_v, alphabet));
      out << (yes ? "yes" : "no") << "\n";
      return yes ? kYes : kNo;
    }
    if (*va_cmd) {
      const VAPresentation g = load_presentation(group_file);
      const VASubset u = load_subset(subset_file, g);
      if (*alpha_cmd) {
        const VASubset a = alpha_va(g, u);
        if (box) {
          for (const VAElement& e : va_box(g, a, *box)) out << to_string(g, e) << "\n";
        } else {
          write_subset(out, g, a);
        }
        return kYes;
      }
      for (const VAElement& e : va_brute_ball(g, u, radius, conj_radius.value_or(radius))) out << to_string(g, e) << "\n";
      return kYes;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace conjlang::cli
