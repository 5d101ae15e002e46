#include "finitary/cli.hpp"

#include <fstream>
#include <sstream>

#include "finitary/completion.hpp"
#include "finitary/errors.hpp"
#include "finitary/modal.hpp"
#include "finitary/parse.hpp"
#include "finitary/universe.hpp"

namespace finitary {
namespace {

const char* kUsage =
    "usage: finitary VERB ARGS...\n"
    "\n"
    "sets and equation systems\n"
    "  eval EXPR               canonical form of a set expression\n"
    "  solve SYSTEM [--all|--var NAME]\n"
    "                          solve a guarded equation system\n"
    "  minimize EXPR           alias of eval (values are always minimal)\n"
    "  bisim A B               bisimilarity of two sets\n"
    "  dist A B                exact distance as a dyadic fraction\n"
    "  member A B              is A a member of B\n"
    "  trunc K EXPR            depth-K truncation\n"
    "  dot EXPR                DOT rendering of the canonical graph\n"
    "  process TERM            set denoted by a one-action process term\n"
    "\n"
    "modal logic\n"
    "  sat EXPR FORMULA        does the set satisfy the formula\n"
    "  master EXPR             master formula of an HF set\n"
    "  nf FORMULA              semantic normal form over the level space\n"
    "  valid FORMULA           validity over the universe\n"
    "  satisfiable FORMULA     satisfiability over the universe\n"
    "  levels K                enumerate the level space D_K\n"
    "  algebra-size K          cardinality of the free modal algebra layer\n"
    "  atoms K                 characteristic formulas of D_K\n"
    "\n"
    "set theory\n"
    "  sep EXPR FORMULA        separation {y in x | y |= f}\n"
    "  replace EXPR TERMFN     replacement {f(y) | y in x}\n"
    "  choice EXPR TERMFN      canonical choice set\n"
    "  axioms                  run the axiom suite\n"
    "\n"
    "partial sets and limits\n"
    "  em-leq P Q              Egli-Milner order between partial sets\n"
    "  bot-trunc K EXPR        depth-K approximant with bottom leaves\n"
    "  point NAME --k K        approximant of omega | infinity | universe\n"
    "  iterate STEP START N    guarded iteration with consecutive distances\n"
    "\n"
    "Arguments may be literal text, @file, or - for the previous command's\n"
    "output (stdin).\n";

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Args {
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> flags;  // --name value

  const std::string* flag(const std::string& name) const {
    for (const auto& [k, v] : flags)
      if (k == name) return &v;
    return nullptr;
  }
  bool has_flag(const std::string& name) const {
    for (const auto& [k, v] : flags)
      if (k == name) return true;
    return false;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

uint32_t parse_nat(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(what + " must be a natural number, got '" + s + "'");
  return static_cast<uint32_t>(std::stoul(s));
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

int dispatch(const std::string& verb, const Args& a, std::ostream& out) {
  auto need = [&](size_t n) {
    if (a.positional.size() != n)
      throw UsageError("verb '" + verb + "' takes " + std::to_string(n) + " argument(s), got " +
                       std::to_string(a.positional.size()));
  };

  if (verb == "eval" || verb == "minimize") {
    need(1);
    out << canonical_text(read_rational(a.positional[0])) << "\n";
  } else if (verb == "solve") {
    need(1);
    auto solutions = solve(parse_system(a.positional[0]));
    if (a.has_flag("all")) {
      for (const auto& [name, value] : solutions) out << name << " = " << canonical_text(value) << "\n";
    } else if (const std::string* var = a.flag("var")) {
      for (const auto& [name, value] : solutions)
        if (name == *var) {
          out << canonical_text(value) << "\n";
          return 0;
        }
      throw DomainError("no equation defines '" + *var + "'");
    } else {
      out << canonical_text(solutions.front().second) << "\n";
    }
  } else if (verb == "bisim") {
    need(2);
    out << bool_text(bisim(read_rational(a.positional[0]), read_rational(a.positional[1]))) << "\n";
  } else if (verb == "dist") {
    need(2);
    out << strat_level(read_rational(a.positional[0]), read_rational(a.positional[1])).to_fraction()
        << "\n";
  } else if (verb == "member") {
    need(2);
    out << bool_text(member(read_rational(a.positional[0]), read_rational(a.positional[1]))) << "\n";
  } else if (verb == "trunc") {
    need(2);
    uint32_t k = parse_nat(a.positional[0], "K");
    out << to_text(trunc_hf(k, read_rational(a.positional[1]))) << "\n";
  } else if (verb == "dot") {
    need(1);
    out << to_dot(read_rational(a.positional[0]));
  } else if (verb == "process") {
    need(1);
    out << to_text(process_to_set(parse_process(a.positional[0]))) << "\n";
  } else if (verb == "sat") {
    need(2);
    out << bool_text(sat(read_rational(a.positional[0]), parse_formula(a.positional[1]))) << "\n";
  } else if (verb == "master") {
    need(1);
    out << master(to_hf(read_rational(a.positional[0]))).to_text() << "\n";
  } else if (verb == "nf") {
    need(1);
    NormalForm nf = normal_form(parse_formula(a.positional[0]));
    out << "depth=" << nf.depth << " count=" << nf.count() << "\n";
    const auto& elems = enum_level(nf.depth);
    for (size_t i = 0; i < elems.size(); ++i)
      if (nf.sat[i]) out << to_text(elems[i]) << "\n";
  } else if (verb == "valid") {
    need(1);
    out << bool_text(valid(parse_formula(a.positional[0]))) << "\n";
  } else if (verb == "satisfiable") {
    need(1);
    out << bool_text(satisfiable(parse_formula(a.positional[0]))) << "\n";
  } else if (verb == "levels") {
    need(1);
    const auto& elems = enum_level(parse_nat(a.positional[0], "K"));
    out << "size=" << elems.size() << "\n";
    for (HfSet e : elems) out << to_text(e) << "\n";
  } else if (verb == "algebra-size") {
    need(1);
    out << algebra_size(parse_nat(a.positional[0], "K")).text << "\n";
  } else if (verb == "atoms") {
    need(1);
    for (const Formula& f : atoms(parse_nat(a.positional[0], "K"))) out << f.to_text() << "\n";
  } else if (verb == "sep") {
    need(2);
    out << canonical_text(
               separation(read_rational(a.positional[0]), parse_formula(a.positional[1])))
        << "\n";
  } else if (verb == "replace") {
    need(2);
    out << canonical_text(
               replacement(read_rational(a.positional[0]), parse_term_fn(a.positional[1])))
        << "\n";
  } else if (verb == "choice") {
    need(2);
    out << canonical_text(choice(read_rational(a.positional[0]), parse_term_fn(a.positional[1])))
        << "\n";
  } else if (verb == "axioms") {
    need(0);
    SuiteReport report = axiom_suite();
    for (const AxiomCheck& c : report.checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.note << "\n";
    return report.all_passed() ? 0 : 1;
  } else if (verb == "em-leq") {
    need(2);
    out << bool_text(em_leq(parse_partial(a.positional[0]), parse_partial(a.positional[1])))
        << "\n";
  } else if (verb == "bot-trunc") {
    need(2);
    uint32_t k = parse_nat(a.positional[0], "K");
    out << partial_text(bot_trunc(k, read_rational(a.positional[1]))) << "\n";
  } else if (verb == "point") {
    need(1);
    const std::string* k = a.flag("k");
    if (!k) throw UsageError("point requires --k K");
    CauchyPoint p = builtin_point(a.positional[0]);
    out << to_text(p.at(parse_nat(*k, "K"))) << "\n";
  } else if (verb == "iterate") {
    need(3);
    SetExprPtr step = parse_step(a.positional[0]);
    HfSet start = parse_set(a.positional[1]);
    uint32_t n = parse_nat(a.positional[2], "N");
    Iteration it = iterate_guarded(step, start, n);
    for (size_t i = 0; i < it.approximants.size(); ++i)
      out << "S" << i << "=" << to_text(it.approximants[i]) << "\n";
    for (size_t i = 0; i < it.gaps.size(); ++i)
      out << "d(S" << i << ",S" << i + 1 << ")=" << it.gaps[i].to_fraction() << "\n";
  } else {
    throw UsageError("unknown verb '" + verb + "'");
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, const std::string& stdin_text, std::ostream& out,
        std::ostream& err) {
  try {
    if (args.empty()) throw UsageError("no verb given");
    std::string verb = args[0];
    if (verb == "help" || verb == "--help" || verb == "-h") {
      out << kUsage;
      return 0;
    }
    Args a;
    for (size_t i = 1; i < args.size(); ++i) {
      const std::string& arg = args[i];
      if (arg.rfind("--", 0) == 0) {
        std::string name = arg.substr(2);
        if (name == "all") {
          a.flags.emplace_back(name, "");
        } else {
          if (i + 1 >= args.size()) throw UsageError("flag --" + name + " needs a value");
          a.flags.emplace_back(name, args[++i]);
        }
      } else if (arg == "-") {
        a.positional.push_back(trim(stdin_text));
      } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UsageError("cannot read file '" + arg.substr(1) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        a.positional.push_back(trim(buf.str()));
      } else {
        a.positional.push_back(arg);
      }
    }
    return dispatch(verb, a, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace finitary
