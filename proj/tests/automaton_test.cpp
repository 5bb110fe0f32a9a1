#include <doctest.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rederiv/automaton.hpp"
#include "rederiv/classic.hpp"
#include "rederiv/clausal.hpp"
#include "rederiv/oracle.hpp"
#include "test_util.hpp"

using namespace rederiv;
using rederiv::testing::ExprGen;
using rederiv::testing::words_ab;

namespace {

// A transition value compared as a set of disjuncts, each a set of signed
// states, so tables match regardless of operand order.
using LiteralSig = std::pair<bool, std::string>;  // negated?, state text
using DisjunctSig = std::set<LiteralSig>;
using CellSig = std::set<DisjunctSig>;

void collect_and(const ExprFormula& phi, DisjunctSig& out) {
    if (phi.is_atom()) {
        out.insert({false, render(phi.atom_value())});
        return;
    }
    REQUIRE_FALSE(phi.is_falsum());
    if (phi.fun() == BoolFun::And()) {
        for (const auto& arg : phi.args()) collect_and(arg, out);
        return;
    }
    REQUIRE(phi.fun() == BoolFun::Not());
    REQUIRE(phi.args()[0].is_atom());
    out.insert({true, render(phi.args()[0].atom_value())});
}

void collect_or(const ExprFormula& phi, CellSig& out) {
    if (phi.is_falsum()) return;
    if (!phi.is_atom() && is_or_fun(phi.fun())) {
        for (const auto& arg : phi.args()) collect_or(arg, out);
        return;
    }
    DisjunctSig d;
    collect_and(phi, d);
    out.insert(std::move(d));
}

CellSig cell_sig(const AltAutomaton& aut, const char* state, char symbol) {
    CellSig out;
    collect_or(aut.trans.at(parse(state)).at(symbol), out);
    return out;
}

std::vector<std::string> state_texts(const AltAutomaton& aut) {
    std::vector<std::string> out;
    out.reserve(aut.states.size());
    for (const Expr& q : aut.states) out.push_back(render(q));
    return out;
}

AltAutomaton xor_afa(bool prune) {
    BuildOptions opts;
    opts.prune_false = prune;
    return build_automaton(SupportC(true), BaseKind::BC,
                           parse("((ab)*a)^((abab)*a)"), opts);
}

}  // namespace

TEST_CASE("base functions decompose expressions into formulas") {
    CHECK(base_A(parse("a+b")) ==
          ExprFormula::op(BoolFun::Or(),
                          {ExprFormula::atom(parse("a")), ExprFormula::atom(parse("b"))}));
    CHECK(base_A(parse("a+b+c")) ==
          ExprFormula::op(BoolFun::Or(),
                          {ExprFormula::op(BoolFun::Or(), {ExprFormula::atom(parse("a")),
                                                           ExprFormula::atom(parse("b"))}),
                           ExprFormula::atom(parse("c"))}));
    CHECK(base_A(parse("ab")) == ExprFormula::atom(parse("ab")));
    CHECK(base_A(parse("a&b")) == ExprFormula::atom(parse("a&b")));
    // Disjunction detection is by table, not by name; the formula itself is
    // rebuilt with the canonical OR.
    const BoolFun vel("vel", {false, true, true, true});
    CHECK(base_A(Expr::boolop(vel, {parse("a"), parse("b")})) ==
          ExprFormula::op(BoolFun::Or(), {ExprFormula::atom(parse("a")),
                                          ExprFormula::atom(parse("b"))}));

    CHECK(base_B(parse("a+b")) == ExprFormula::atom(parse("a+b")));
    CHECK(base_B(parse("0")) == ExprFormula::atom(Expr::zero()));

    CHECK(base_C(parse("((ab)*a)^((abab)*a)")) ==
          ExprFormula::op(BoolFun::Xor(), {ExprFormula::atom(parse("(ab)*a")),
                                           ExprFormula::atom(parse("(abab)*a"))}));
    CHECK(base_C(parse("!(ab)")) ==
          ExprFormula::op(BoolFun::Not(), {ExprFormula::atom(parse("ab"))}));
    CHECK(base_C(parse("a")) == ExprFormula::atom(parse("a")));
    CHECK(base_C(parse("a&(b+c)")) ==
          ExprFormula::op(BoolFun::And(),
                          {ExprFormula::atom(parse("a")),
                           ExprFormula::op(BoolFun::Or(), {ExprFormula::atom(parse("b")),
                                                           ExprFormula::atom(parse("c"))})}));

    CHECK(base_kind_from_name("BA") == BaseKind::BA);
    CHECK(base_kind_from_name("BB") == BaseKind::BB);
    CHECK(base_kind_from_name("BC") == BaseKind::BC);
    CHECK(base_kind_name(BaseKind::BC) == "BC");
    CHECK_THROWS_AS(base_kind_from_name("BD"), std::invalid_argument);
}

TEST_CASE("the XOR example builds the eight-state alternating automaton") {
    const AltAutomaton aut = xor_afa(true);

    CHECK(state_texts(aut) ==
          std::vector<std::string>{"(ab)*a^(abab)*a", "1", "b(ab)*a", "bab(abab)*a",
                                   "(ab)*a", "ab(abab)*a", "b(abab)*a", "(abab)*a"});
    CHECK(aut.alphabet == std::vector<Symbol>{'a', 'b'});
    CHECK(aut.initial == ExprFormula::atom(parse("((ab)*a)^((abab)*a)")));

    // Finality is exactly nullability: only the state 1 accepts the empty
    // word.  (No word of (ab)*a or (abab)*a is empty.)
    for (const Expr& q : aut.states) {
        CAPTURE(render(q));
        CHECK(aut.final.at(q) == q.is_one());
    }

    const std::string q1 = "(ab)*a^(abab)*a";
    const std::string q2 = "b(ab)*a", q3 = "1", q4 = "bab(abab)*a";
    const std::string q5 = "ab(abab)*a", q6 = "b(abab)*a";
    const std::string q7 = "(ab)*a", q8 = "(abab)*a";

    // The full transition table, cells as disjunct sets.  The a-cell of the
    // start state keeps all four disjuncts, contradictory ones included.
    CHECK(cell_sig(aut, q1.c_str(), 'a') ==
          CellSig{{{true, q2}, {true, q3}, {false, q4}},
                  {{true, q2}, {true, q3}, {false, q3}},
                  {{false, q2}, {true, q4}, {true, q3}},
                  {{false, q3}, {true, q4}, {true, q3}}});
    CHECK(cell_sig(aut, q1.c_str(), 'b') == CellSig{});
    CHECK(cell_sig(aut, q2.c_str(), 'a') == CellSig{});
    CHECK(cell_sig(aut, q2.c_str(), 'b') == CellSig{{{false, q7}}});
    CHECK(cell_sig(aut, q3.c_str(), 'a') == CellSig{});
    CHECK(cell_sig(aut, q3.c_str(), 'b') == CellSig{});
    CHECK(cell_sig(aut, q4.c_str(), 'a') == CellSig{});
    CHECK(cell_sig(aut, q4.c_str(), 'b') == CellSig{{{false, q5}}});
    CHECK(cell_sig(aut, q5.c_str(), 'a') == CellSig{{{false, q6}}});
    CHECK(cell_sig(aut, q5.c_str(), 'b') == CellSig{});
    CHECK(cell_sig(aut, q6.c_str(), 'a') == CellSig{});
    CHECK(cell_sig(aut, q6.c_str(), 'b') == CellSig{{{false, q8}}});
    CHECK(cell_sig(aut, q7.c_str(), 'a') == CellSig{{{false, q2}}, {{false, q3}}});
    CHECK(cell_sig(aut, q7.c_str(), 'b') == CellSig{});
    CHECK(cell_sig(aut, q8.c_str(), 'a') == CellSig{{{false, q4}}, {{false, q3}}});
    CHECK(cell_sig(aut, q8.c_str(), 'b') == CellSig{});
}

TEST_CASE("without pruning the dead state 0 is kept explicitly") {
    const AltAutomaton aut = xor_afa(false);
    CHECK(state_texts(aut) ==
          std::vector<std::string>{"(ab)*a^(abab)*a", "1", "b(ab)*a", "bab(abab)*a",
                                   "0", "(ab)*a", "ab(abab)*a", "b(abab)*a",
                                   "(abab)*a"});
    CHECK(aut.trans.at(parse("1")).at('a') == ExprFormula::atom(Expr::zero()));
    CHECK(aut.trans.at(parse("0")).at('b') == ExprFormula::atom(Expr::zero()));
    CHECK_FALSE(aut.final.at(Expr::zero()));

    // Pruning rewrites exactly the always-false cells and drops 0.
    AltAutomaton pruned = aut;
    detail::prune_false_cells(pruned);
    CHECK(pruned == xor_afa(true));
    CHECK(pruned.initial == aut.initial);
}

TEST_CASE("the XOR automaton accepts exactly the words the oracle admits") {
    const AltAutomaton aut = xor_afa(true);

    CHECK(run(aut, "aba"));
    CHECK(run(aut, "abababa"));
    CHECK_FALSE(run(aut, ""));
    CHECK_FALSE(run(aut, "a"));
    CHECK_FALSE(run(aut, "ab"));
    CHECK_FALSE(run(aut, "ababa"));
    CHECK_THROWS_AS(run(aut, "abc"), UnknownSymbol);
    CHECK_THROWS_AS(run_direct(aut, "zaba"), UnknownSymbol);

    const Expr e = parse("((ab)*a)^((abab)*a)");
    std::size_t accepted = 0;
    for (const std::string& w : words_ab(7)) {
        CAPTURE(w);
        const bool got = run(aut, w);
        CHECK(got == oracle::member(e, w));
        CHECK(got == run_direct(aut, w));
        if (got) ++accepted;
    }
    CHECK(accepted == 2);  // aba and abababa
}

TEST_CASE("taking the base of the initial expression shrinks the automaton") {
    BuildOptions opts;
    opts.initial_base = true;
    opts.prune_false = true;
    const Expr e = parse("((ab)*a)^((abab)*a)");
    const AltAutomaton aut = build_automaton(SupportC(true), BaseKind::BC, e, opts);

    CHECK(aut.initial ==
          ExprFormula::op(BoolFun::Xor(), {ExprFormula::atom(parse("(ab)*a")),
                                           ExprFormula::atom(parse("(abab)*a"))}));
    CHECK(aut.states.size() == 7);  // the XOR expression itself is no state
    for (const Expr& q : aut.states) CHECK_FALSE(q == e);
    for (const std::string& w : words_ab(5)) {
        CAPTURE(w);
        CHECK(run(aut, w) == oracle::member(e, w));
    }
}

TEST_CASE("the dissimilar support with the atom base is deterministic") {
    const AltAutomaton aut =
        build_automaton(SupportBAci(true), BaseKind::BB, parse("a"));
    CHECK(state_texts(aut) == std::vector<std::string>{"a", "1", "0"});
    CHECK(aut.trans.at(parse("a")).at('a') == ExprFormula::atom(parse("1")));
    CHECK(aut.trans.at(parse("1")).at('a') == ExprFormula::atom(parse("0")));
    CHECK(aut.trans.at(parse("0")).at('a') == ExprFormula::atom(parse("0")));
    CHECK(is_deterministic(aut));
    CHECK(run(aut, "a"));
    CHECK_FALSE(run(aut, ""));
    CHECK_FALSE(run(aut, "aa"));
    CHECK_FALSE(run(aut, "aaa"));

    const AltAutomaton nfa = to_nfa(aut);  // already in shape
    CHECK(nfa == aut);
    const AltAutomaton dfa = determinize(aut);
    CHECK(is_deterministic(dfa));
    CHECK(dfa.states.size() == 3);
    CHECK(run(dfa, "a"));
    CHECK_FALSE(run(dfa, "aa"));
}

TEST_CASE("the automaton of 0 is a single dead state") {
    BuildOptions opts;
    opts.extra_alphabet = {'a'};
    const AltAutomaton aut =
        build_automaton(SupportC(true), BaseKind::BC, Expr::zero(), opts);
    CHECK(state_texts(aut) == std::vector<std::string>{"0"});
    CHECK_FALSE(aut.final.at(Expr::zero()));
    CHECK(aut.trans.at(Expr::zero()).at('a') == ExprFormula::atom(Expr::zero()));
    CHECK_FALSE(run(aut, ""));
    CHECK_FALSE(run(aut, "a"));
    CHECK_FALSE(run(aut, "aa"));

    const std::string dot = export_dot(aut);
    CHECK(dot.find("digraph G") != std::string::npos);
    CHECK(dot.find("q0 [label=\"0\", shape=circle]") != std::string::npos);
    CHECK(dot.find("q0 -> q0 [label=\"a: 0\"]") != std::string::npos);

    const AltAutomaton dfa = determinize(aut);
    CHECK(dfa.states.size() == 1);
    CHECK(is_deterministic(dfa));
    CHECK_FALSE(run(dfa, "aa"));
}

TEST_CASE("both acceptance paths agree on random expressions") {
    ExprGen gen(5150);
    BuildOptions opts;
    opts.extra_alphabet = {'a', 'b'};
    for (int i = 0; i < 30; ++i) {
        const Expr e = gen.next(3);
        CAPTURE(render(e));
        const AltAutomaton aut = build_automaton(SupportC(true), BaseKind::BC, e, opts);
        for (const std::string& w : words_ab(3)) {
            CAPTURE(w);
            CHECK(run(aut, w) == run_direct(aut, w));
        }
    }
}

TEST_CASE("automaton acceptance matches the language oracle") {
    ExprGen gen(24601);
    BuildOptions opts;
    opts.extra_alphabet = {'a', 'b'};
    for (int i = 0; i < 10; ++i) {
        const Expr e = gen.next(3);
        CAPTURE(render(e));
        const AltAutomaton aut = build_automaton(SupportC(true), BaseKind::BC, e, opts);
        for (const std::string& w : words_ab(3)) {
            CAPTURE(w);
            CHECK(run(aut, w) == oracle::member(e, w, {'a', 'b'}));
        }
    }
}

TEST_CASE("atom derivability holds where the theory promises it") {
    const Expr e = parse("((ab)*a)^((abab)*a)");
    const auto clausal = check_atom_derivability(SupportC(true), BaseKind::BC, e);
    CHECK(clausal.ok());
    CHECK(clausal.checks == 2);

    // The single-atom base satisfies the property vacuously.
    ExprGen gen(31337);
    for (int i = 0; i < 20; ++i) {
        const Expr x = gen.next(3);
        CAPTURE(render(x));
        CHECK(check_atom_derivability(SupportB(true), BaseKind::BB, x).ok());
    }

    const auto antimirov =
        check_atom_derivability(SupportA(true), BaseKind::BA, parse("ab+a"));
    CHECK(antimirov.ok());
    CHECK(antimirov.checks == 2);
}

TEST_CASE("atom derivability can fail and the report carries witnesses") {
    // Simplification folds 1+0 to 1, so deriving a+b directly loses the 0
    // atom that the piecewise route keeps.
    const auto report =
        check_atom_derivability(SupportB(true), BaseKind::BA, parse("a+b"));
    CHECK_FALSE(report.ok());
    CHECK(report.checks == 2);
    REQUIRE(report.failures.size() == 2);
    CHECK(report.failures[0].find("symbol 'a' on a+b") != std::string::npos);
    CHECK(report.failures[0].find("direct atoms {1}") != std::string::npos);
    CHECK(report.failures[0].find("piecewise atoms {0,1}") != std::string::npos);
}

TEST_CASE("to_nfa validates and normalizes disjunctive automata") {
    // Partial-derivative automata only ever produce disjunctions.
    ExprGen gen(8675309);
    BuildOptions opts;
    opts.extra_alphabet = {'a', 'b'};
    for (int i = 0; i < 25; ++i) {
        const Expr e = gen.next_simple(3);
        CAPTURE(render(e));
        const AltAutomaton aut = build_automaton(SupportA(true), BaseKind::BA, e, opts);
        const AltAutomaton nfa = to_nfa(aut);
        CHECK(to_nfa(nfa) == nfa);  // normalization is idempotent
        for (const std::string& w : words_ab(3)) {
            CAPTURE(w);
            CHECK(run(nfa, w) == run(aut, w));
        }
    }

    const AltAutomaton afa = xor_afa(true);
    CHECK_FALSE(is_deterministic(afa));
    CHECK_THROWS_WITH_AS(to_nfa(afa),
                         "transition value of state (ab)*a^(abab)*a under 'a' is "
                         "not a disjunction of states",
                         NonDisjunctive);
}

TEST_CASE("determinization preserves the language of the XOR automaton") {
    const AltAutomaton afa = xor_afa(true);
    const AltAutomaton dfa = determinize(afa);
    CHECK(is_deterministic(dfa));
    for (const std::string& w : words_ab(7)) {
        CAPTURE(w);
        CHECK(run(dfa, w) == run(afa, w));
        CHECK(run(dfa, w) == oracle::member(parse("((ab)*a)^((abab)*a)"), w));
    }
    CHECK_THROWS_AS(determinize(afa, 2), BudgetExceeded);
}

TEST_CASE("JSON export and import round-trip automata exactly") {
    const AltAutomaton afa = xor_afa(true);
    CHECK(import_json(export_json(afa)) == afa);

    const AltAutomaton tiny =
        build_automaton(SupportBAci(true), BaseKind::BB, parse("a"));
    CHECK(import_json(export_json(tiny)) == tiny);

    const std::string text = export_json(tiny);
    CHECK(text.find("\"alphabet\"") != std::string::npos);
    CHECK(text.find("\"states\"") != std::string::npos);
    CHECK(text.find("\"initial\"") != std::string::npos);
}

TEST_CASE("JSON import rejects malformed documents") {
    CHECK_THROWS_AS(import_json("not json at all"), std::runtime_error);
    CHECK_THROWS_AS(import_json(R"({"alphabet": ["ab"], "states": []})"),
                    std::runtime_error);
    // A final flag contradicting the state expression is rejected.
    const std::string contradictory = R"({
      "alphabet": ["a"],
      "states": ["a"],
      "initial": {"atom": 0},
      "final": {"a": true},
      "trans": {"a": {"a": {"atom": 0}}}
    })";
    CHECK_THROWS_WITH_AS(import_json(contradictory),
                         "final flag of state a contradicts its expression",
                         std::runtime_error);
    // Out-of-range atom indices are rejected.
    const std::string out_of_range = R"({
      "alphabet": ["a"],
      "states": ["a"],
      "initial": {"atom": 3},
      "final": {"a": false},
      "trans": {"a": {"a": {"atom": 0}}}
    })";
    CHECK_THROWS_WITH_AS(import_json(out_of_range),
                         "formula atom index 3 out of range", std::runtime_error);
    // Missing transition cells are rejected.
    const std::string missing_cell = R"({
      "alphabet": ["a"],
      "states": ["a"],
      "initial": {"atom": 0},
      "final": {"a": false},
      "trans": {"a": {}}
    })";
    CHECK_THROWS_WITH_AS(import_json(missing_cell),
                         "missing transition for state a under 'a'",
                         std::runtime_error);
    // Duplicate states are rejected.
    const std::string duplicates = R"({
      "alphabet": ["a"],
      "states": ["a", "a"],
      "initial": {"atom": 0},
      "final": {"a": false},
      "trans": {"a": {"a": {"atom": 0}}}
    })";
    CHECK_THROWS_WITH_AS(import_json(duplicates), "duplicate states in automaton JSON",
                         std::runtime_error);
}

TEST_CASE("state discovery respects the budget") {
    BuildOptions opts;
    opts.cap = 5;
    CHECK_THROWS_AS(
        build_automaton(SupportB(false), BaseKind::BB, parse("a*"), opts),
        BudgetExceeded);
    try {
        build_automaton(SupportB(false), BaseKind::BB, parse("a*"), opts);
    } catch (const BudgetExceeded& err) {
        CHECK(err.cap() == 5);
    }
}

TEST_CASE("DOT export names every state and marks finals") {
    const std::string dot = export_dot(xor_afa(true));
    CHECK(dot.find("digraph G") != std::string::npos);
    CHECK(dot.find("rankdir=LR") != std::string::npos);
    CHECK(dot.find("label=\"initial: (ab)*a^(abab)*a\"") != std::string::npos);
    CHECK(dot.find("[label=\"1\", shape=doublecircle]") != std::string::npos);
    CHECK(dot.find("[label=\"b(ab)*a\", shape=circle]") != std::string::npos);
    // One edge per atom of the four-disjunct cell.
    CHECK(dot.find("q0 -> q1") != std::string::npos);
    CHECK(dot.find("q0 -> q2") != std::string::npos);
    CHECK(dot.find("q0 -> q3") != std::string::npos);
}
