#include "rederiv/clausal.hpp"

#include <algorithm>

namespace rederiv {

Literal negate_literal(Literal lit) {
    lit.negated = !lit.negated;
    return lit;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

Clause Clause::union_with(const Clause& other) const {
    std::vector<Literal> merged;
    merged.reserve(literals_.size() + other.literals_.size());
    std::merge(literals_.begin(), literals_.end(), other.literals_.begin(),
               other.literals_.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    Clause c;
    c.literals_ = std::move(merged);
    return c;
}

ClausalForm::ClausalForm(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

ClausalForm ClausalForm::of_expr(Expr e) {
    return ClausalForm({Clause({Literal{std::move(e), false}})});
}

ClausalForm oplus(const ClausalForm& x, const ClausalForm& y) {
    std::vector<Clause> merged;
    merged.reserve(x.clauses().size() + y.clauses().size());
    std::merge(x.clauses().begin(), x.clauses().end(), y.clauses().begin(),
               y.clauses().end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return ClausalForm(std::move(merged));
}

ClausalForm otimes(const ClausalForm& x, const ClausalForm& y) {
    std::vector<Clause> out;
    out.reserve(x.clauses().size() * y.clauses().size());
    for (const Clause& cx : x.clauses()) {
        for (const Clause& cy : y.clauses()) {
            out.push_back(cx.union_with(cy));
        }
    }
    return ClausalForm(std::move(out));
}

ClausalForm ominus(const ClausalForm& x) {
    // The otimes-fold over clauses of the oplus-sum of the singleton forms
    // of the flipped literals.  The fold identity {{}} and the absorbing
    // empty form give the boundary values ominus({}) = {{}} and
    // ominus({{}}) = {} without special cases.
    ClausalForm acc({Clause()});
    for (const Clause& c : x.clauses()) {
        std::vector<Clause> flipped;
        flipped.reserve(c.literals().size());
        for (const Literal& lit : c.literals()) {
            flipped.push_back(Clause({negate_literal(lit)}));
        }
        acc = otimes(acc, ClausalForm(std::move(flipped)));
    }
    return acc;
}

namespace {

Expr literal_expr(const Literal& lit) {
    return lit.negated ? Expr::boolop(BoolFun::Not(), {lit.expr}) : lit.expr;
}

Expr clause_expr(const Clause& c) {
    if (c.empty()) return Expr::boolop(BoolFun::Not(), {Expr::zero()});
    Expr acc = literal_expr(c.literals().front());
    for (std::size_t i = 1; i < c.literals().size(); ++i) {
        acc = Expr::boolop(BoolFun::And(), {std::move(acc), literal_expr(c.literals()[i])});
    }
    return acc;
}

}  // namespace

Expr h_clausal(const ClausalForm& x) {
    if (x.is_empty()) return Expr::zero();
    Expr acc = clause_expr(x.clauses().front());
    for (std::size_t i = 1; i < x.clauses().size(); ++i) {
        acc = Expr::boolop(BoolFun::Or(), {std::move(acc), clause_expr(x.clauses()[i])});
    }
    return acc;
}

ClausalForm f_clausal(const BoolFun& f, const std::vector<ClausalForm>& args) {
    const std::size_t k = f.arity();
    if (args.size() != k) throw ArityMismatch(f.name(), k, args.size());
    // Precompute the negations once per argument.
    std::vector<ClausalForm> negated;
    negated.reserve(k);
    for (const ClausalForm& c : args) negated.push_back(ominus(c));
    ClausalForm acc;  // empty oplus-sum
    for (std::size_t row = 0; row < f.table().size(); ++row) {
        if (!f.table()[row]) continue;
        ClausalForm term({Clause()});  // otimes identity {{}}
        for (std::size_t j = 0; j < k; ++j) {
            const bool bit = ((row >> (k - 1 - j)) & 1) != 0;
            term = otimes(term, bit ? args[j] : negated[j]);
        }
        acc = oplus(acc, term);
    }
    return acc;
}

ClausalForm dot_clausal(const ClausalForm& x, const Expr& f, bool simplify_flag) {
    std::vector<Clause> out;
    out.reserve(x.clauses().size());
    for (const Clause& c : x.clauses()) {
        Expr product = Expr::concat(h_clausal(ClausalForm({c})), f);
        if (simplify_flag) product = simplify(product);
        out.push_back(Clause({Literal{std::move(product), false}}));
    }
    return ClausalForm(std::move(out));
}

std::string display_clausal(const ClausalForm& x) {
    std::string out = "{";
    for (std::size_t i = 0; i < x.clauses().size(); ++i) {
        if (i > 0) out += ',';
        out += '{';
        const auto& lits = x.clauses()[i].literals();
        for (std::size_t j = 0; j < lits.size(); ++j) {
            if (j > 0) out += ',';
            if (lits[j].negated) {
                // The '!' binds the whole literal; concatenations and stars
                // stay bare (e.g. "!b(ab)*a"), only looser operators need
                // the parentheses to keep the display unambiguous.
                out += '!';
                if (display_precedence(lits[j].expr) < 3) {
                    out += '(' + render(lits[j].expr) + ')';
                } else {
                    out += render(lits[j].expr);
                }
            } else {
                out += render(lits[j].expr);
            }
        }
        out += '}';
    }
    out += '}';
    return out;
}

}  // namespace rederiv
