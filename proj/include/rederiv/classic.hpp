#pragma once

// The three classic supports and their reference implementations:
//
//   SupportB     Brzozowski derivatives; structures are plain expressions.
//   SupportA     Antimirov partial derivatives; structures are canonical
//                sets of expressions, disjunction becomes set union.
//   SupportBAci  dissimilar Brzozowski derivatives; like SupportA but with
//                {0} as the empty-language unit and a set-collapsing dot,
//                so the readbacks are sums normalised up to associativity,
//                commutativity and idempotence.
//
// classical_brzozowski / classical_antimirov / classical_dissimilar are
// direct structural-induction implementations of the three textbook
// derivatives, used to cross-check the generic framework.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rederiv/expr.hpp"

namespace rederiv {

/// A canonical finite set of expressions: sorted by the structural order
/// and deduplicated.
class ExprSet {
public:
    ExprSet() = default;

    /// Sorts and deduplicates.
    explicit ExprSet(std::vector<Expr> elems);

    static ExprSet singleton(Expr e);

    const std::vector<Expr>& elems() const noexcept { return elems_; }
    bool empty() const noexcept { return elems_.empty(); }
    std::size_t size() const noexcept { return elems_.size(); }

    ExprSet union_with(const ExprSet& other) const;

    friend bool operator==(const ExprSet& x, const ExprSet& y) {
        return x.elems_ == y.elems_;
    }

private:
    std::vector<Expr> elems_;
};

/// Left fold of the canonical sum of a sorted element list: 0 for the empty
/// set, the single element alone, otherwise (((e1 + e2) + e3) + ...).
Expr fold_sum(const std::vector<Expr>& elems);

/// Renders a set as "{e1,e2,...}" in canonical order.
std::string display_expr_set(const ExprSet& s);

/// Brzozowski support: structures are expressions themselves, h is the
/// identity, every connective is interpreted syntactically and dot is
/// concatenation.  Satisfies the support laws but declares neither
/// finiteness hypothesis: closures of simplify-off derivations may grow
/// without bound.
class SupportB {
public:
    using Element = Expr;

    static constexpr bool declares_h1 = false;
    static constexpr bool declares_h2 = false;

    explicit SupportB(bool simplify = true) : simplify_(simplify) {}

    bool simplifies() const { return simplify_; }
    std::string name() const { return "brzozowski"; }

    Expr h(const Element& x) const { return x; }
    Element apply_fun(const BoolFun& f, const std::vector<Element>& args) const;
    Element dot(const Element& x, const Expr& f) const;
    Element one() const { return Expr::one(); }
    Element zero() const { return Expr::zero(); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    std::string display(const Element& x) const { return render(x); }

private:
    bool simplify_;
};

/// Antimirov support: structures are canonical expression sets, binary
/// disjunction is set union, any other connective collapses its argument
/// sets through the sum readback into a singleton, and dot distributes over
/// the set.  one = {1}, zero = {} — the empty set.  Declares both
/// finiteness hypotheses.
class SupportA {
public:
    using Element = ExprSet;

    static constexpr bool declares_h1 = true;
    static constexpr bool declares_h2 = true;

    explicit SupportA(bool simplify = true) : simplify_(simplify) {}

    bool simplifies() const { return simplify_; }
    std::string name() const { return "antimirov"; }

    Expr h(const Element& x) const;
    Element apply_fun(const BoolFun& f, const std::vector<Element>& args) const;
    Element dot(const Element& x, const Expr& f) const;
    Element one() const { return ExprSet::singleton(Expr::one()); }
    Element zero() const { return ExprSet(); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    std::string display(const Element& x) const { return display_expr_set(x); }

private:
    bool simplify_;
};

/// Dissimilar-Brzozowski support: like SupportA but zero = {0} (the
/// singleton of the empty-language expression) and dot first collapses the
/// set into its canonical sum: x . F = { (sum of x) . F }.  Readbacks are
/// exactly Brzozowski derivatives with every derivation-produced sum
/// flattened, sorted and deduplicated.  Declares both finiteness
/// hypotheses.
class SupportBAci {
public:
    using Element = ExprSet;

    static constexpr bool declares_h1 = true;
    static constexpr bool declares_h2 = true;

    explicit SupportBAci(bool simplify = true) : simplify_(simplify) {}

    bool simplifies() const { return simplify_; }
    std::string name() const { return "dissimilar"; }

    Expr h(const Element& x) const;
    Element apply_fun(const BoolFun& f, const std::vector<Element>& args) const;
    Element dot(const Element& x, const Expr& f) const;
    Element one() const { return ExprSet::singleton(Expr::one()); }
    Element zero() const { return ExprSet::singleton(Expr::zero()); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    std::string display(const Element& x) const { return display_expr_set(x); }

private:
    bool simplify_;
};

/// Raised by classical_antimirov on expressions that use boolean operators
/// other than binary disjunction, for which partial derivatives in their
/// classic form are not defined.
class NotSimple : public std::runtime_error {
public:
    explicit NotSimple(const std::string& what_operator)
        : std::runtime_error("partial derivatives require sums only; found " +
                             what_operator) {}
};

/// True iff every boolean operator in e is a binary disjunction.
bool is_simple(const Expr& e);

/// Textbook Brzozowski derivative of e by a, by structural induction.
/// When @p simplify is true the unit/absorption rules are applied to every
/// expression the derivative fabricates, mirroring the framework.
Expr classical_brzozowski(Symbol a, const Expr& e, bool simplify = true);

/// Textbook Antimirov partial derivative of e by a.  Requires is_simple(e);
/// throws NotSimple otherwise.
ExprSet classical_antimirov(Symbol a, const Expr& e, bool simplify = true);

/// Dissimilar (ACI-normalised) Brzozowski derivative of e by a: the
/// ordinary induction, except every sum produced by a derivation step is
/// flattened, sorted, deduplicated and refolded.  Sums already inside the
/// input are left alone.
Expr classical_dissimilar(Symbol a, const Expr& e, bool simplify = true);

}  // namespace rederiv
