#pragma once

// Clausal forms: sets of sets of signed expressions ("literals"), a carrier
// on which every boolean connective is computable while derivation-relevant
// disjunction stays a plain set union.  The algebra has three operations:
//
//   oplus   union of clause sets
//   otimes  all pairwise unions of one clause from each side
//   ominus  generalised negation: the cross product of the sign-flipped
//           literals, one from each clause
//
// h_clausal reads a form back as a sum of conjunctions of possibly
// complemented expressions; f_clausal interprets an arbitrary connective
// by summing over the true rows of its table.  SupportC packages all of
// this as a support whose distinguished disjunction is oplus.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rederiv/expr.hpp"

namespace rederiv {

/// A possibly complemented expression.  Ordered by expression first, then
/// positive before negated.
struct Literal {
    Expr expr;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;
};

/// The sign-flipped literal.
Literal negate_literal(Literal lit);

/// A canonical set of literals (sorted, deduplicated).  The empty clause is
/// a valid value: it reads back as the complement of the empty language.
class Clause {
public:
    Clause() = default;

    /// Sorts and deduplicates.
    explicit Clause(std::vector<Literal> literals);

    const std::vector<Literal>& literals() const noexcept { return literals_; }
    bool empty() const noexcept { return literals_.empty(); }

    /// Set union with another clause.
    Clause union_with(const Clause& other) const;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend std::strong_ordering operator<=>(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> literals_;
};

/// A canonical set of clauses.  The empty form (no clauses, reads back as
/// 0) and the form holding just the empty clause are different values.
class ClausalForm {
public:
    ClausalForm() = default;

    /// Sorts and deduplicates.
    explicit ClausalForm(std::vector<Clause> clauses);

    /// The form {{e}} with a single positive literal.
    static ClausalForm of_expr(Expr e);

    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    bool is_empty() const noexcept { return clauses_.empty(); }

    friend bool operator==(const ClausalForm&, const ClausalForm&) = default;
    friend std::strong_ordering operator<=>(const ClausalForm&, const ClausalForm&) = default;

private:
    std::vector<Clause> clauses_;
};

/// Union of the clause sets.
ClausalForm oplus(const ClausalForm& x, const ClausalForm& y);

/// All pairwise clause unions; the empty form absorbs.
ClausalForm otimes(const ClausalForm& x, const ClausalForm& y);

/// Generalised negation: the otimes-product over all clauses of the sums
/// of their sign-flipped literals.  In particular ominus of the empty form
/// is {{}} (the form with just the empty clause) and vice versa.  ominus is
/// not involutive on every form.
ClausalForm ominus(const ClausalForm& x);

/// Reads a form back into an expression: the empty form is 0; a clause is
/// the conjunction of its literals in canonical order (the empty clause is
/// !0); the form is the sum of its clause expressions in canonical order.
/// Single-literal clauses and single-clause forms add no operator on top.
Expr h_clausal(const ClausalForm& x);

/// Raised by f_clausal when the argument count does not match the arity.
class ArityMismatch : public std::runtime_error {
public:
    ArityMismatch(const std::string& name, std::size_t arity, std::size_t got)
        : std::runtime_error("connective '" + name + "' has arity " +
                             std::to_string(arity) + " but was applied to " +
                             std::to_string(got) + " clausal forms") {}
};

/// Interprets an arbitrary connective on clausal forms: the oplus-sum over
/// every argument tuple (b_1,...,b_k) with f(b) = 1 of the otimes-product
/// taking the j-th argument as is when b_j = 1 and its ominus otherwise.
/// An f that is never true yields the empty form.
ClausalForm f_clausal(const BoolFun& f, const std::vector<ClausalForm>& args);

/// Right concatenation: every clause is read back through h_clausal as a
/// single-clause form and concatenated with @p f, producing one positive
/// singleton clause per original clause.  Fabricated expressions are
/// simplified when @p simplify_flag is set.
ClausalForm dot_clausal(const ClausalForm& x, const Expr& f, bool simplify_flag = true);

/// Renders "{{lit,lit},{lit}}" with literals and clauses in canonical
/// order; negated literals carry a '!' prefix.
std::string display_clausal(const ClausalForm& x);

/// The clausal support: structures are clausal forms, the distinguished
/// disjunction is oplus (not the two-clause expansion of general
/// disjunction through f_clausal), every other connective goes through
/// f_clausal, dot is dot_clausal, one is {{1}} and zero is the empty form.
/// Declares both finiteness hypotheses.
class SupportC {
public:
    using Element = ClausalForm;

    static constexpr bool declares_h1 = true;
    static constexpr bool declares_h2 = true;

    explicit SupportC(bool simplify = true) : simplify_(simplify) {}

    bool simplifies() const { return simplify_; }
    std::string name() const { return "clausal"; }

    Expr h(const Element& x) const {
        Expr e = h_clausal(x);
        return simplify_ ? simplify(e) : e;
    }
    Element apply_fun(const BoolFun& f, const std::vector<Element>& args) const {
        if (is_or_fun(f)) {
            if (args.size() != 2) throw ArityMismatch(f.name(), 2, args.size());
            return oplus(args[0], args[1]);
        }
        return f_clausal(f, args);
    }
    Element dot(const Element& x, const Expr& f) const {
        return dot_clausal(x, f, simplify_);
    }
    Element one() const { return ClausalForm::of_expr(Expr::one()); }
    Element zero() const { return ClausalForm(); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
    std::string display(const Element& x) const { return display_clausal(x); }

private:
    bool simplify_;
};

}  // namespace rederiv
