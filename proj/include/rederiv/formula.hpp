#pragma once

// Boolean formulas over an arbitrary atom type: plain syntax trees built
// from atoms and applications of BoolFun connectives.  Formulas are kept
// literally as constructed; no simplification is ever applied, and
// duplicated atoms are allowed.  They serve as transition values of
// alternating automata and as intermediate shapes during base decomposition.

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rederiv/expr.hpp"

namespace rederiv {

/// Raised by eval() when the valuation lacks a binding for some atom.
class MissingValuation : public std::runtime_error {
public:
    explicit MissingValuation(const std::string& atom_text)
        : std::runtime_error("valuation is not defined on atom " + atom_text) {}
};

/// An immutable boolean formula with atoms of type A.
///
/// Constructors:
///   Atom(a)       a bare atom
///   Op(fun, args) application of a boolean function; args.size() must
///                 equal fun.arity().  Arity 0 is allowed here, giving
///                 constant formulas; falsum() is the canonical constant
///                 false used as a transition marker.
template <typename A>
class Formula {
public:
    static Formula atom(A a) {
        return Formula{std::make_shared<const Node>(std::move(a))};
    }

    static Formula op(BoolFun fun, std::vector<Formula> args) {
        if (args.size() != fun.arity()) {
            throw std::invalid_argument("Op '" + fun.name() + "' expects " +
                                        std::to_string(fun.arity()) +
                                        " arguments, got " +
                                        std::to_string(args.size()));
        }
        return Formula{std::make_shared<const Node>(OpNode{std::move(fun), std::move(args)})};
    }

    /// The constant-false formula, Op(FALSE, []).
    static Formula falsum() { return op(BoolFun::Falsum(), {}); }

    bool is_atom() const { return std::holds_alternative<A>(*node_); }

    const A& atom_value() const { return std::get<A>(*node_); }

    const BoolFun& fun() const { return std::get<OpNode>(*node_).fun; }

    const std::vector<Formula>& args() const { return std::get<OpNode>(*node_).args; }

    /// True iff this formula is exactly the constant-false marker.
    bool is_falsum() const {
        return !is_atom() && fun().arity() == 0 && !fun().table()[0];
    }

    friend bool operator==(const Formula& x, const Formula& y) {
        if (x.node_ == y.node_) return true;
        if (x.is_atom() != y.is_atom()) return false;
        if (x.is_atom()) return x.atom_value() == y.atom_value();
        if (!(x.fun() == y.fun())) return false;
        const auto& xa = x.args();
        const auto& ya = y.args();
        if (xa.size() != ya.size()) return false;
        for (std::size_t i = 0; i < xa.size(); ++i) {
            if (!(xa[i] == ya[i])) return false;
        }
        return true;
    }

private:
    struct OpNode {
        BoolFun fun;
        std::vector<Formula> args;
    };
    using Node = std::variant<A, OpNode>;

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Evaluates @p phi under a total valuation given as a callable A -> bool.
template <typename A, typename V>
bool eval_with(const Formula<A>& phi, V&& valuation) {
    if (phi.is_atom()) return valuation(phi.atom_value());
    std::vector<bool> vals;
    vals.reserve(phi.args().size());
    for (const auto& sub : phi.args()) vals.push_back(eval_with(sub, valuation));
    return phi.fun().eval(vals);
}

/// Evaluates @p phi under the partial valuation @p v.  Throws
/// MissingValuation if some atom of phi has no binding.
template <typename A>
bool eval(const Formula<A>& phi, const std::map<A, bool>& v) {
    return eval_with(phi, [&](const A& a) -> bool {
        auto it = v.find(a);
        if (it == v.end()) throw MissingValuation("<unbound>");
        return it->second;
    });
}

/// Evaluation with a readable error: @p show renders the missing atom.
template <typename A, typename Show>
bool eval(const Formula<A>& phi, const std::map<A, bool>& v, const Show& show) {
    return eval_with(phi, [&](const A& a) -> bool {
        auto it = v.find(a);
        if (it == v.end()) throw MissingValuation(show(a));
        return it->second;
    });
}

namespace detail {

template <typename A, typename Cmp>
void collect_atoms(const Formula<A>& phi, std::set<A, Cmp>& out) {
    if (phi.is_atom()) {
        out.insert(phi.atom_value());
        return;
    }
    for (const auto& sub : phi.args()) collect_atoms(sub, out);
}

}  // namespace detail

/// The set of atoms occurring in @p phi, in the order of Cmp.
template <typename A, typename Cmp = std::less<A>>
std::set<A, Cmp> atoms(const Formula<A>& phi) {
    std::set<A, Cmp> out;
    detail::collect_atoms(phi, out);
    return out;
}

/// Substitutes a formula for every atom: g maps each atom to a Formula<B>.
/// The shape of phi is preserved; no simplification happens.
template <typename A, typename G>
auto map_atoms(const Formula<A>& phi, G&& g)
    -> decltype(g(std::declval<const A&>())) {
    using Out = decltype(g(std::declval<const A&>()));
    if (phi.is_atom()) return g(phi.atom_value());
    std::vector<Out> args;
    args.reserve(phi.args().size());
    for (const auto& sub : phi.args()) args.push_back(map_atoms(sub, g));
    return Out::op(phi.fun(), std::move(args));
}

namespace detail {

// Same precedence scheme as expression rendering: OR 0, XOR 1, AND 2,
// NOT 4; named calls are self-delimiting (6) and atoms report their own
// precedence through the P callback so that e.g. an atom whose display
// contains a top-level '+' gets parenthesised inside an AND.
template <typename A, typename P>
int formula_prec(const Formula<A>& phi, const P& atom_prec) {
    if (phi.is_atom()) return atom_prec(phi.atom_value());
    if (phi.fun() == BoolFun::Or()) return 0;
    if (phi.fun() == BoolFun::Xor()) return 1;
    if (phi.fun() == BoolFun::And()) return 2;
    if (phi.fun() == BoolFun::Not()) return 4;
    return 6;
}

template <typename A, typename R, typename P>
void render_formula_into(const Formula<A>& phi, const R& render_atom, const P& atom_prec,
                         std::string& out);

template <typename A, typename R, typename P>
void render_formula_child(const Formula<A>& phi, const R& render_atom, const P& atom_prec,
                          int min_prec, std::string& out) {
    if (formula_prec(phi, atom_prec) < min_prec) {
        out += '(';
        render_formula_into(phi, render_atom, atom_prec, out);
        out += ')';
    } else {
        render_formula_into(phi, render_atom, atom_prec, out);
    }
}

template <typename A, typename R, typename P>
void render_formula_into(const Formula<A>& phi, const R& render_atom, const P& atom_prec,
                         std::string& out) {
    if (phi.is_atom()) {
        out += render_atom(phi.atom_value());
        return;
    }
    const BoolFun& f = phi.fun();
    const auto& args = phi.args();
    if (f == BoolFun::Or()) {
        render_formula_child(args[0], render_atom, atom_prec, 0, out);
        out += '+';
        render_formula_child(args[1], render_atom, atom_prec, 1, out);
    } else if (f == BoolFun::Xor()) {
        render_formula_child(args[0], render_atom, atom_prec, 1, out);
        out += '^';
        render_formula_child(args[1], render_atom, atom_prec, 2, out);
    } else if (f == BoolFun::And()) {
        render_formula_child(args[0], render_atom, atom_prec, 2, out);
        out += '&';
        render_formula_child(args[1], render_atom, atom_prec, 3, out);
    } else if (f == BoolFun::Not()) {
        out += '!';
        render_formula_child(args[0], render_atom, atom_prec, 4, out);
    } else if (f.arity() == 0) {
        out += f.table()[0] ? '1' : '0';
    } else {
        out += f.name();
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i > 0) out += ',';
            render_formula_into(args[i], render_atom, atom_prec, out);
        }
        out += ')';
    }
}

}  // namespace detail

/// Renders a formula; atoms are printed via @p render_atom and treated as
/// self-delimiting, built-in connectives use the expression operators,
/// other functions render as calls and nullary constants as "0"/"1".
template <typename A, typename R>
std::string render_formula(const Formula<A>& phi, const R& render_atom) {
    std::string out;
    detail::render_formula_into(phi, render_atom, [](const A&) { return 6; }, out);
    return out;
}

/// Formulas whose atoms are expressions, the shape used by automata.
using ExprFormula = Formula<Expr>;

/// Renders an expression-atom formula using the expression syntax for atoms.
/// Note the result is for display; atoms are not re-parseable in general
/// because atom boundaries are not marked.
std::string render_expr_formula(const ExprFormula& phi);

/// Atom set of an expression formula under the structural expression order.
std::set<Expr, ExprLess> expr_atoms(const ExprFormula& phi);

}  // namespace rederiv
