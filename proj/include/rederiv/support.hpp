#pragma once

// Generic derivation framework.  A *support* packages a carrier type of
// derivation structures together with the handful of operations the
// derivation algorithm needs: a readback h into expressions, an
// interpretation of every boolean connective on structures (with binary
// disjunction playing a distinguished role), a right-concatenation, the
// units for the empty-word and empty languages, equality and display.
//
// One symbol derivation, word derivation, the derivative closure, the
// derivative-based membership test and a law checker are implemented once,
// generically, and instantiated by the concrete supports (classic.hpp,
// clausal.hpp).

#include <concepts>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rederiv/expr.hpp"
#include "rederiv/oracle.hpp"

namespace rederiv {

/// Raised when an iterative construction (derivative closure, automaton
/// construction, determinisation) exceeds its budget of distinct objects.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t cap)
        : std::runtime_error("budget of " + std::to_string(cap) +
                             " distinct structures exceeded"),
          cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// Default budget for closure and automaton constructions.
inline constexpr std::size_t kDefaultCap = 10000;

/// Requirements on a support type.  Element is the carrier of derivation
/// structures; all operations are const and value-oriented.
template <typename S>
concept SupportLike = requires(const S& sup, const typename S::Element& x,
                               const std::vector<typename S::Element>& xs,
                               const BoolFun& f, const Expr& e) {
    typename S::Element;
    { sup.h(x) } -> std::same_as<Expr>;
    { sup.apply_fun(f, xs) } -> std::same_as<typename S::Element>;
    { sup.dot(x, e) } -> std::same_as<typename S::Element>;
    { sup.one() } -> std::same_as<typename S::Element>;
    { sup.zero() } -> std::same_as<typename S::Element>;
    { sup.equal(x, x) } -> std::same_as<bool>;
    { sup.display(x) } -> std::same_as<std::string>;
    { sup.simplifies() } -> std::same_as<bool>;
};

namespace detail {

template <SupportLike S>
Expr maybe_simplify(const S& sup, const Expr& e) {
    return sup.simplifies() ? simplify(e) : e;
}

}  // namespace detail

/// The derivation of @p e by the single symbol @p a inside support @p sup:
///
///   - boolean node f(E1,...,Ek): the support's interpretation of f applied
///     to the derivations of the arguments;
///   - concatenation E1.E2: derivation of E1 dotted with E2, joined by the
///     support's disjunction with the derivation of E2 when E1 is nullable;
///   - star E1*: derivation of E1 dotted with E1*;
///   - the symbol a itself: the support's empty-word unit;
///   - 0, 1 and any other symbol: the support's empty-language unit.
///
/// Expressions passed to dot are simplified first when the support's
/// simplify flag is on.
template <SupportLike S>
typename S::Element derive_sym(const S& sup, Symbol a, const Expr& e) {
    using Element = typename S::Element;
    const ExprNode& node = e.node();
    switch (node.index()) {
        case 0:
        case 1:
            return sup.zero();
        case 2:
            return std::get<Sym>(node).ch == a ? sup.one() : sup.zero();
        case 3: {
            const auto& st = std::get<Star>(node);
            return sup.dot(derive_sym(sup, a, st.inner), detail::maybe_simplify(sup, e));
        }
        case 4: {
            const auto& c = std::get<Concat>(node);
            Element left_part =
                sup.dot(derive_sym(sup, a, c.left), detail::maybe_simplify(sup, c.right));
            if (!nullable(c.left)) return left_part;
            std::vector<Element> both;
            both.push_back(std::move(left_part));
            both.push_back(derive_sym(sup, a, c.right));
            return sup.apply_fun(BoolFun::Or(), both);
        }
        default: {
            const auto& b = std::get<BoolOp>(node);
            std::vector<Element> derived;
            derived.reserve(b.args.size());
            for (const Expr& arg : b.args) derived.push_back(derive_sym(sup, a, arg));
            return sup.apply_fun(b.fun, derived);
        }
    }
}

/// The derivation of @p e by the nonempty word @p w: derive by the first
/// letter, then repeatedly read the structure back through h (simplifying
/// when enabled) and derive by the next letter.
template <SupportLike S>
typename S::Element derive_word(const S& sup, std::string_view w, const Expr& e) {
    if (w.empty()) {
        throw std::invalid_argument("derive_word requires a nonempty word");
    }
    typename S::Element x = derive_sym(sup, w[0], e);
    for (std::size_t i = 1; i < w.size(); ++i) {
        const Expr back = detail::maybe_simplify(sup, sup.h(x));
        x = derive_sym(sup, w[i], back);
    }
    return x;
}

/// All derivation structures reachable from @p e by nonempty words over
/// @p alphabet (defaults to the symbols of e when empty), in breadth-first
/// order (word length, then symbol order).  The start expression itself is
/// not included.  Duplicates are detected with the support's equality.
/// Throws BudgetExceeded once more than @p cap distinct structures appear.
template <SupportLike S>
std::vector<typename S::Element> derivative_closure(const S& sup, const Expr& e,
                                                    std::size_t cap = kDefaultCap,
                                                    std::set<Symbol> alphabet = {}) {
    using Element = typename S::Element;
    if (alphabet.empty()) alphabet = symbols(e);
    std::vector<Element> found;
    std::deque<std::size_t> queue;
    auto add = [&](Element x) {
        for (const Element& seen : found) {
            if (sup.equal(seen, x)) return;
        }
        found.push_back(std::move(x));
        if (found.size() > cap) throw BudgetExceeded(cap);
        queue.push_back(found.size() - 1);
    };
    for (Symbol a : alphabet) add(derive_sym(sup, a, e));
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        const Expr back = detail::maybe_simplify(sup, sup.h(found[i]));
        for (Symbol a : alphabet) add(derive_sym(sup, a, back));
    }
    return found;
}

/// Membership via derivation: the empty word reduces to nullability of e,
/// any other word to nullability of the readback of its word derivation.
template <SupportLike S>
bool member_via(const S& sup, const Expr& e, std::string_view w) {
    if (w.empty()) return nullable(e);
    return nullable(sup.h(derive_word(sup, w, e)));
}

// ---------------------------------------------------------------------------
// Support law checking

/// One sampled instance for the law checker: a connective with structures
/// for its arguments (condition 1) and a right factor expression applied to
/// the first structure (condition 2).
template <typename S>
struct LawSample {
    BoolFun fun;
    std::vector<typename S::Element> elems;
    Expr expr;
};

/// A violated law, with the condition number (1, 2 or 3 after the defining
/// equations of a support), a description of the two sides, and a witness
/// word on which their languages differ.
struct LawFailure {
    int condition;
    std::string detail;
    oracle::Word witness;
};

struct LawReport {
    std::size_t checks = 0;
    std::vector<LawFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Checks the three defining conditions of a support on the given samples,
/// comparing languages up to length @p n over at least @p extra:
///
///   (1) h(f_E(x1,...,xk)) ~ f(h(x1),...,h(xk)) for the sampled connective
///   (2) h(x . F) ~ h(x) . F for the sampled structure and expression
///   (3) h(one) ~ 1 and h(zero) ~ 0 (once per run)
template <SupportLike S>
LawReport check_support_laws(const S& sup, const std::vector<LawSample<S>>& samples,
                             std::size_t n,
                             const oracle::Alphabet& extra = {'a', 'b'}) {
    LawReport report;
    auto check = [&](int condition, const Expr& lhs, const Expr& rhs) {
        ++report.checks;
        auto witness = oracle::equiv_witness(lhs, rhs, n, extra);
        if (witness.has_value()) {
            report.failures.push_back(LawFailure{
                condition, render(lhs) + " vs " + render(rhs), *witness});
        }
    };
    for (const LawSample<S>& sample : samples) {
        if (sample.elems.size() >= sample.fun.arity() && sample.fun.arity() > 0) {
            std::vector<typename S::Element> args(
                sample.elems.begin(), sample.elems.begin() + sample.fun.arity());
            std::vector<Expr> readbacks;
            readbacks.reserve(args.size());
            for (const auto& x : args) readbacks.push_back(sup.h(x));
            check(1, sup.h(sup.apply_fun(sample.fun, args)),
                  Expr::boolop(sample.fun, std::move(readbacks)));
        }
        if (!sample.elems.empty()) {
            check(2, sup.h(sup.dot(sample.elems.front(), sample.expr)),
                  Expr::concat(sup.h(sample.elems.front()), sample.expr));
        }
    }
    check(3, sup.h(sup.one()), Expr::one());
    check(3, sup.h(sup.zero()), Expr::zero());
    return report;
}

}  // namespace rederiv
