// Command-line front end: parsing, derivation, closures, alternating
// automata, membership, bounded equivalence, support-law checking and
// exports.
//
// Exit codes: 0 on success, 1 on a negative verdict (match/equiv answering
// false, check-laws finding a violation), 2 on any error (syntax errors,
// exceeded budgets, unsupported shapes, unknown symbols).

#include <CLI11.hpp>

#include <cstddef>
#include <exception>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rederiv/automaton.hpp"
#include "rederiv/classic.hpp"
#include "rederiv/clausal.hpp"
#include "rederiv/expr.hpp"
#include "rederiv/formula.hpp"
#include "rederiv/oracle.hpp"
#include "rederiv/support.hpp"

namespace {

using namespace rederiv;

using AnySupport = std::variant<SupportB, SupportBAci, SupportA, SupportC>;

AnySupport make_support(const std::string& name, bool simplify) {
    if (name == "brzozowski") return SupportB(simplify);
    if (name == "dissimilar") return SupportBAci(simplify);
    if (name == "antimirov") return SupportA(simplify);
    if (name == "clausal") return SupportC(simplify);
    throw std::invalid_argument("unknown support '" + name +
                                "', expected brzozowski, dissimilar, antimirov "
                                "or clausal");
}

std::set<Symbol> parse_alphabet(const std::string& letters) {
    std::set<Symbol> out;
    for (char c : letters) {
        if (c < 'a' || c > 'z') {
            throw std::invalid_argument(
                "alphabet symbols must be lowercase letters, got '" +
                std::string(1, c) + "'");
        }
        out.insert(c);
    }
    return out;
}

// Options shared by the subcommands; each subcommand registers only the
// ones it uses.
struct Options {
    std::string support = "brzozowski";
    std::string base = "BB";
    bool simplify = true;
    std::string alphabet;
    std::size_t cap = kDefaultCap;
    std::size_t upto = oracle::kDefaultBound;
    std::string word;
    std::string format = "text";
    bool initial_base = false;
    bool prune_false = false;
    int samples = 40;
    std::string expr_text;
    std::string expr2_text;
};

void add_support_options(CLI::App* sub, Options& opt) {
    sub->add_option("--support", opt.support, "derivation support")
        ->check(CLI::IsMember({"brzozowski", "dissimilar", "antimirov", "clausal"}))
        ->capture_default_str();
    sub->add_flag("--simplify,!--no-simplify", opt.simplify,
                  "apply the unit simplifications to fabricated expressions");
}

int run_parse(const Options& opt) {
    std::cout << render(parse(opt.expr_text)) << "\n";
    return 0;
}

int run_null(const Options& opt) {
    std::cout << (nullable(parse(opt.expr_text)) ? "true" : "false") << "\n";
    return 0;
}

int run_derive(const Options& opt) {
    const Expr e = parse(opt.expr_text);
    const AnySupport sup = make_support(opt.support, opt.simplify);
    std::visit(
        [&](const auto& s) {
            std::cout << s.display(derive_word(s, opt.word, e)) << "\n";
        },
        sup);
    return 0;
}

int run_closure(const Options& opt) {
    const Expr e = parse(opt.expr_text);
    const AnySupport sup = make_support(opt.support, opt.simplify);
    std::visit(
        [&](const auto& s) {
            for (const auto& x :
                 derivative_closure(s, e, opt.cap, parse_alphabet(opt.alphabet))) {
                std::cout << s.display(x) << "\n";
            }
        },
        sup);
    return 0;
}

void print_text_automaton(const AltAutomaton& aut) {
    std::cout << "alphabet:";
    for (Symbol a : aut.alphabet) std::cout << ' ' << a;
    std::cout << "\ninitial: " << render_expr_formula(aut.initial) << "\n";
    std::cout << "states: " << aut.states.size() << "\n";
    for (std::size_t i = 0; i < aut.states.size(); ++i) {
        const Expr& q = aut.states[i];
        std::cout << "q" << i << ": " << render(q)
                  << (aut.final.at(q) ? " (final)" : "") << "\n";
        for (Symbol a : aut.alphabet) {
            std::cout << "  " << a << " -> "
                      << render_expr_formula(aut.trans.at(q).at(a)) << "\n";
        }
    }
}

int run_afa(const Options& opt) {
    const Expr e = parse(opt.expr_text);
    const AnySupport sup = make_support(opt.support, opt.simplify);
    BuildOptions build;
    build.cap = opt.cap;
    build.initial_base = opt.initial_base;
    build.prune_false = opt.prune_false;
    build.extra_alphabet = parse_alphabet(opt.alphabet);
    const BaseKind base = base_kind_from_name(opt.base);
    const AltAutomaton aut = std::visit(
        [&](const auto& s) { return build_automaton(s, base, e, build); }, sup);
    if (opt.format == "json") {
        std::cout << export_json(aut);
    } else if (opt.format == "dot") {
        std::cout << export_dot(aut);
    } else {
        print_text_automaton(aut);
    }
    return 0;
}

int run_match(const Options& opt) {
    const Expr e = parse(opt.expr_text);
    const AnySupport sup = make_support(opt.support, opt.simplify);
    const bool accepted = std::visit(
        [&](const auto& s) { return member_via(s, e, opt.word); }, sup);
    std::cout << (accepted ? "true" : "false") << "\n";
    return accepted ? 0 : 1;
}

int run_equiv(const Options& opt) {
    const Expr e1 = parse(opt.expr_text);
    const Expr e2 = parse(opt.expr2_text);
    const oracle::Alphabet extra = parse_alphabet(opt.alphabet);
    if (oracle::equiv_upto(e1, e2, opt.upto, extra)) {
        std::cout << "true" << "\n";
        return 0;
    }
    std::cout << "false" << "\n";
    if (const auto w = oracle::equiv_witness(e1, e2, opt.upto, extra)) {
        std::cout << "witness: \"" << *w << "\"" << "\n";
    }
    return 1;
}

// A deterministic sample pool for check-laws: elements are derivatives of
// fixed expressions, the connectives cycle through the four built-ins.
template <SupportLike S>
int check_laws_with(const S& sup, int count, std::size_t n) {
    const std::vector<const char*> pool{"a",      "b",  "ab", "a+b", "a*",
                                        "(ab)*a", "a&b", "!a", "a^b", "(a+b)*"};
    const std::vector<BoolFun> funs{BoolFun::Or(), BoolFun::And(), BoolFun::Xor(),
                                    BoolFun::Not()};
    std::vector<LawSample<S>> samples;
    for (int i = 0; i < count; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        samples.push_back(LawSample<S>{
            funs[k % funs.size()],
            {derive_sym(sup, 'a', parse(pool[k % pool.size()])),
             derive_sym(sup, 'b', parse(pool[(k + 3) % pool.size()]))},
            parse(pool[(k + 5) % pool.size()])});
    }
    const LawReport report = check_support_laws(sup, samples, n);
    std::cout << "conditions checked: " << report.checks << "\n";
    if (report.ok()) {
        std::cout << "all support laws hold" << "\n";
        return 0;
    }
    for (const LawFailure& failure : report.failures) {
        std::cout << "condition " << failure.condition << " violated: "
                  << failure.detail << " (witness \"" << failure.witness << "\")"
                  << "\n";
    }
    return 1;
}

int run_check_laws(const Options& opt) {
    const AnySupport sup = make_support(opt.support, opt.simplify);
    return std::visit(
        [&](const auto& s) { return check_laws_with(s, opt.samples, opt.upto); },
        sup);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"derivation of regular expressions with boolean connectives"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* cmd_parse =
        app.add_subcommand("parse", "parse an expression and print it back");
    cmd_parse->add_option("EXPR", opt.expr_text, "expression")->required();

    CLI::App* cmd_null =
        app.add_subcommand("null", "print whether the expression accepts the empty word");
    cmd_null->add_option("EXPR", opt.expr_text, "expression")->required();

    CLI::App* cmd_derive =
        app.add_subcommand("derive", "derive an expression by a word and display the structure");
    add_support_options(cmd_derive, opt);
    cmd_derive->add_option("--word", opt.word, "derivation word")->required();
    cmd_derive->add_option("EXPR", opt.expr_text, "expression")->required();

    CLI::App* cmd_closure =
        app.add_subcommand("closure", "list the closure of the expression under word derivation");
    add_support_options(cmd_closure, opt);
    cmd_closure->add_option("--cap", opt.cap, "budget for distinct structures")
        ->capture_default_str();
    cmd_closure->add_option("--alphabet", opt.alphabet, "extra alphabet symbols");
    cmd_closure->add_option("EXPR", opt.expr_text, "expression")->required();

    CLI::App* cmd_afa =
        app.add_subcommand("afa", "build the alternating automaton and export it");
    add_support_options(cmd_afa, opt);
    cmd_afa->add_option("--base", opt.base, "base decomposition")
        ->check(CLI::IsMember({"BA", "BB", "BC"}))
        ->capture_default_str();
    cmd_afa->add_option("--format", opt.format, "output encoding")
        ->check(CLI::IsMember({"dot", "json", "text"}))
        ->capture_default_str();
    cmd_afa->add_option("--cap", opt.cap, "budget for states")->capture_default_str();
    cmd_afa->add_option("--alphabet", opt.alphabet, "extra alphabet symbols");
    cmd_afa->add_flag("--initial-base", opt.initial_base,
                      "use the base of the start expression as the initial condition");
    cmd_afa->add_flag("--prune-false", opt.prune_false,
                      "replace always-false cells and drop unreachable states");
    cmd_afa->add_option("EXPR", opt.expr_text, "expression")->required();

    CLI::App* cmd_match =
        app.add_subcommand("match", "decide membership of a word via derivation");
    add_support_options(cmd_match, opt);
    cmd_match->add_option("EXPR", opt.expr_text, "expression")->required();
    cmd_match->add_option("WORD", opt.word, "word to test")->required();

    CLI::App* cmd_equiv =
        app.add_subcommand("equiv", "compare two expressions on all words up to a bound");
    cmd_equiv->add_option("--upto", opt.upto, "word-length bound")->capture_default_str();
    cmd_equiv->add_option("--alphabet", opt.alphabet, "extra alphabet symbols");
    cmd_equiv->add_option("E1", opt.expr_text, "first expression")->required();
    cmd_equiv->add_option("E2", opt.expr2_text, "second expression")->required();

    CLI::App* cmd_laws =
        app.add_subcommand("check-laws", "check the support laws on a deterministic sample");
    add_support_options(cmd_laws, opt);
    cmd_laws->add_option("--samples", opt.samples, "number of sampled tuples")
        ->capture_default_str();
    cmd_laws->add_option("--upto", opt.upto, "word-length bound for the comparisons")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return 2;
    }

    try {
        if (*cmd_parse) return run_parse(opt);
        if (*cmd_null) return run_null(opt);
        if (*cmd_derive) return run_derive(opt);
        if (*cmd_closure) return run_closure(opt);
        if (*cmd_afa) return run_afa(opt);
        if (*cmd_match) return run_match(opt);
        if (*cmd_equiv) return run_equiv(opt);
        if (*cmd_laws) return run_check_laws(opt);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
