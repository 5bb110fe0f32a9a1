#pragma once

// Alternating automata built from derivations: states are expressions, the
// transition value of a state under a symbol is the base decomposition of
// the readback of its derivation, and a word is accepted when the iterated
// substitution of transition values into the initial formula evaluates to
// true under the finality of the states.
//
// Also provides the three base functions, acceptance along two independent
// evaluation paths, the atom-derivability check, shape conversions to
// nondeterministic and deterministic automata, and DOT/JSON exports.

#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rederiv/expr.hpp"
#include "rederiv/formula.hpp"
#include "rederiv/support.hpp"

namespace rederiv {

/// Raised by to_nfa when a transition value (or the initial condition) is
/// not a disjunction of states.
class NonDisjunctive : public std::runtime_error {
public:
    NonDisjunctive(const std::string& state_text, Symbol symbol)
        : std::runtime_error("transition value of state " + state_text +
                             " under '" + std::string(1, symbol) +
                             "' is not a disjunction of states") {}

    explicit NonDisjunctive(const std::string& what_text)
        : std::runtime_error(what_text + " is not a disjunction of states") {}
};

/// Raised by run on a word containing symbols outside the alphabet.
class UnknownSymbol : public std::runtime_error {
public:
    explicit UnknownSymbol(Symbol symbol)
        : std::runtime_error("symbol '" + std::string(1, symbol) +
                             "' is not in the automaton alphabet") {}
};

/// The three base decompositions of expressions into boolean formulas.
enum class BaseKind {
    BA,  ///< split disjunctions recursively, atoms otherwise
    BB,  ///< the whole expression as a single atom
    BC,  ///< split every boolean operator recursively, atoms otherwise
};

/// Parses "BA"/"BB"/"BC"; throws std::invalid_argument otherwise.
BaseKind base_kind_from_name(const std::string& name);
std::string base_kind_name(BaseKind base);

ExprFormula base_A(const Expr& e);
ExprFormula base_B(const Expr& e);
ExprFormula base_C(const Expr& e);
ExprFormula apply_base(BaseKind base, const Expr& e);

/// An alternating finite automaton over expression states.
///
/// Invariants: atoms(initial) and the atoms of every transition value are
/// states; final(q) == nullable(q) for every state.  Transition values are
/// arbitrary boolean formulas over states; the constant-false marker
/// (ExprFormula::falsum()) stands for a transition that can never
/// contribute.
struct AltAutomaton {
    std::vector<Symbol> alphabet;  ///< sorted
    std::vector<Expr> states;      ///< in discovery order, no duplicates
    ExprFormula initial = ExprFormula::falsum();
    std::map<Expr, bool, ExprLess> final;
    std::map<Expr, std::map<Symbol, ExprFormula>, ExprLess> trans;

    friend bool operator==(const AltAutomaton&, const AltAutomaton&) = default;
};

struct BuildOptions {
    std::size_t cap = kDefaultCap;
    /// Use the base decomposition of the start expression as the initial
    /// condition instead of the single-atom default.
    bool initial_base = false;
    /// Replace transition values that are false under every valuation with
    /// the constant-false marker and drop states that become unreachable.
    bool prune_false = false;
    /// Extra symbols beyond those of the start expression.
    std::set<Symbol> extra_alphabet;
};

namespace detail {

/// Replaces semantically false cells by the marker and drops unreachable
/// states.  The initial condition is never rewritten; the atom Zero is
/// pinned to false, since the state Zero accepts nothing.
void prune_false_cells(AltAutomaton& aut);

}  // namespace detail

/// Builds the alternating automaton of @p e over @p sup and @p base by a
/// breadth-first worklist: the initial condition is Atom(e) (or base(e)
/// with opts.initial_base), each state q gets
/// trans(q, a) = base(h(derive_sym(sup, a, q))) and the atoms of that value
/// become states.  Throws BudgetExceeded once more than opts.cap states are
/// discovered.  The start expression is simplified first when the support
/// simplifies.
template <SupportLike S>
AltAutomaton build_automaton(const S& sup, BaseKind base, const Expr& e,
                             const BuildOptions& opts = {}) {
    AltAutomaton aut;
    std::set<Symbol> sigma = symbols(e);
    sigma.insert(opts.extra_alphabet.begin(), opts.extra_alphabet.end());
    aut.alphabet.assign(sigma.begin(), sigma.end());

    const Expr start = detail::maybe_simplify(sup, e);
    aut.initial = opts.initial_base ? apply_base(base, start) : ExprFormula::atom(start);

    std::set<Expr, ExprLess> seen;
    std::deque<Expr> queue;
    auto add_state = [&](const Expr& q) {
        if (!seen.insert(q).second) return;
        aut.states.push_back(q);
        if (aut.states.size() > opts.cap) throw BudgetExceeded(opts.cap);
        queue.push_back(q);
    };
    for (const Expr& q : expr_atoms(aut.initial)) add_state(q);

    while (!queue.empty()) {
        const Expr q = queue.front();
        queue.pop_front();
        auto& row = aut.trans[q];
        for (Symbol a : aut.alphabet) {
            const Expr back = detail::maybe_simplify(sup, sup.h(derive_sym(sup, a, q)));
            ExprFormula value = apply_base(base, back);
            for (const Expr& next : expr_atoms(value)) add_state(next);
            row.insert_or_assign(a, std::move(value));
        }
    }
    for (const Expr& q : aut.states) aut.final.emplace(q, nullable(q));
    if (opts.prune_false) detail::prune_false_cells(aut);
    return aut;
}

/// Acceptance by iterated substitution: transition values are substituted
/// for the atoms of the initial condition once per letter, and the final
/// formula is evaluated under state finality.  Throws UnknownSymbol for
/// letters outside the alphabet.
bool run(const AltAutomaton& aut, std::string_view w);

/// Acceptance along the second evaluation path: the value of every state
/// on each suffix of w is computed backwards (the value on the empty
/// suffix is finality), and the initial condition is evaluated on the
/// values for the whole word.  Agrees with run() on every input.
bool run_direct(const AltAutomaton& aut, std::string_view w);

/// Report of the atom-derivability check.
struct AtomDerivReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Checks, for every symbol of @p alphabet (defaulting to the symbols of
/// e), that the atoms of base(h(derive(a, e))) coincide with the union of
/// the atoms of base(h(derive(a, e'))) over the atoms e' of base(e).
template <SupportLike S>
AtomDerivReport check_atom_derivability(const S& sup, BaseKind base, const Expr& e,
                                        std::set<Symbol> alphabet = {}) {
    if (alphabet.empty()) alphabet = symbols(e);
    AtomDerivReport report;
    auto derived_atoms = [&](Symbol a, const Expr& q) {
        const Expr back = detail::maybe_simplify(sup, sup.h(derive_sym(sup, a, q)));
        return expr_atoms(apply_base(base, back));
    };
    for (Symbol a : alphabet) {
        ++report.checks;
        const std::set<Expr, ExprLess> lhs = derived_atoms(a, e);
        std::set<Expr, ExprLess> rhs;
        for (const Expr& piece : expr_atoms(apply_base(base, e))) {
            const std::set<Expr, ExprLess> partial = derived_atoms(a, piece);
            rhs.insert(partial.begin(), partial.end());
        }
        if (lhs != rhs) {
            std::string detail_text = "symbol '" + std::string(1, a) + "' on " +
                                      render(e) + ": direct atoms {";
            bool first = true;
            for (const Expr& x : lhs) {
                if (!first) detail_text += ',';
                detail_text += render(x);
                first = false;
            }
            detail_text += "} vs piecewise atoms {";
            first = true;
            for (const Expr& x : rhs) {
                if (!first) detail_text += ',';
                detail_text += render(x);
                first = false;
            }
            detail_text += '}';
            report.failures.push_back(std::move(detail_text));
        }
    }
    return report;
}

/// Validates that the initial condition and every transition value is an
/// atom, the constant-false marker, or a pure disjunction tree of atoms,
/// and normalizes all of them to canonical left-folded disjunctions of
/// atoms.  Throws NonDisjunctive identifying the first offender.
AltAutomaton to_nfa(const AltAutomaton& aut);

/// True iff the initial condition is a single atom and every transition
/// value is an atom or the constant-false marker.
bool is_deterministic(const AltAutomaton& aut);

/// Subset-style determinization: reachable transition formulas are
/// quotiented by truth-table equivalence over the state set (formulas are
/// identified iff they evaluate equally under every valuation); each class
/// becomes a state named by an expression with the class's language, and
/// acceptance is evaluation under finality.  The result is a complete
/// deterministic automaton over the same alphabet.  Throws BudgetExceeded
/// beyond @p budget classes.
AltAutomaton determinize(const AltAutomaton& aut, std::size_t budget = std::size_t{1} << 16);

/// DOT digraph: one node per state labeled with its rendered expression
/// (doublecircle when final), one edge per atom of each non-false
/// transition value labeled "a: formula", and the initial condition in the
/// graph label.
std::string export_dot(const AltAutomaton& aut);

/// JSON object {"alphabet", "states", "initial", "final", "trans"} with
/// formulas as trees of {"atom": state-index} and
/// {"fun": name, "table": bits, "args": [...]}.
std::string export_json(const AltAutomaton& aut);

/// Inverse of export_json.  Validates the schema, re-parses the states,
/// checks accessibility and finality invariants; throws std::runtime_error
/// (or SyntaxError for unparseable expressions) on invalid input.
AltAutomaton import_json(const std::string& text);

}  // namespace rederiv
