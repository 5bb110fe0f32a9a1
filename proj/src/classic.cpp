#include "rederiv/classic.hpp"

#include <algorithm>

namespace rederiv {

namespace {

Expr msimp(bool flag, Expr e) { return flag ? simplify(std::move(e)) : e; }

std::vector<Expr> canonicalize(std::vector<Expr> elems) {
    std::sort(elems.begin(), elems.end(), ExprLess{});
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExprSet

ExprSet::ExprSet(std::vector<Expr> elems) : elems_(canonicalize(std::move(elems))) {}

ExprSet ExprSet::singleton(Expr e) {
    ExprSet s;
    s.elems_.push_back(std::move(e));
    return s;
}

ExprSet ExprSet::union_with(const ExprSet& other) const {
    std::vector<Expr> merged;
    merged.reserve(elems_.size() + other.elems_.size());
    std::merge(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
               std::back_inserter(merged), ExprLess{});
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    ExprSet s;
    s.elems_ = std::move(merged);
    return s;
}

Expr fold_sum(const std::vector<Expr>& elems) {
    if (elems.empty()) return Expr::zero();
    Expr acc = elems.front();
    for (std::size_t i = 1; i < elems.size(); ++i) {
        acc = Expr::boolop(BoolFun::Or(), {std::move(acc), elems[i]});
    }
    return acc;
}

std::string display_expr_set(const ExprSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.elems().size(); ++i) {
        if (i > 0) out += ',';
        out += render(s.elems()[i]);
    }
    out += '}';
    return out;
}

// ---------------------------------------------------------------------------
// SupportB

SupportB::Element SupportB::apply_fun(const BoolFun& f,
                                      const std::vector<Element>& args) const {
    if (is_or_fun(f)) {
        return msimp(simplify_, Expr::boolop(BoolFun::Or(), {args[0], args[1]}));
    }
    return msimp(simplify_, Expr::boolop(f, args));
}

SupportB::Element SupportB::dot(const Element& x, const Expr& f) const {
    return msimp(simplify_, Expr::concat(x, f));
}

// ---------------------------------------------------------------------------
// SupportA

Expr SupportA::h(const Element& x) const {
    return msimp(simplify_, fold_sum(x.elems()));
}

SupportA::Element SupportA::apply_fun(const BoolFun& f,
                                      const std::vector<Element>& args) const {
    if (is_or_fun(f)) return args[0].union_with(args[1]);
    std::vector<Expr> readbacks;
    readbacks.reserve(args.size());
    for (const Element& x : args) readbacks.push_back(h(x));
    return ExprSet::singleton(msimp(simplify_, Expr::boolop(f, std::move(readbacks))));
}

SupportA::Element SupportA::dot(const Element& x, const Expr& f) const {
    std::vector<Expr> out;
    out.reserve(x.size());
    for (const Expr& e : x.elems()) {
        out.push_back(msimp(simplify_, Expr::concat(e, f)));
    }
    return ExprSet(std::move(out));
}

// ---------------------------------------------------------------------------
// SupportBAci

Expr SupportBAci::h(const Element& x) const {
    return msimp(simplify_, fold_sum(x.elems()));
}

SupportBAci::Element SupportBAci::apply_fun(const BoolFun& f,
                                            const std::vector<Element>& args) const {
    if (is_or_fun(f)) return args[0].union_with(args[1]);
    std::vector<Expr> readbacks;
    readbacks.reserve(args.size());
    for (const Element& x : args) readbacks.push_back(h(x));
    return ExprSet::singleton(msimp(simplify_, Expr::boolop(f, std::move(readbacks))));
}

SupportBAci::Element SupportBAci::dot(const Element& x, const Expr& f) const {
    return ExprSet::singleton(msimp(simplify_, Expr::concat(h(x), f)));
}

// ---------------------------------------------------------------------------
// Classical reference derivatives

bool is_simple(const Expr& e) {
    const ExprNode& node = e.node();
    if (const auto* st = std::get_if<Star>(&node)) return is_simple(st->inner);
    if (const auto* c = std::get_if<Concat>(&node)) {
        return is_simple(c->left) && is_simple(c->right);
    }
    if (const auto* b = std::get_if<BoolOp>(&node)) {
        if (!is_or_fun(b->fun)) return false;
        return std::all_of(b->args.begin(), b->args.end(),
                           [](const Expr& a) { return is_simple(a); });
    }
    return true;
}

Expr classical_brzozowski(Symbol a, const Expr& e, bool simplify_flag) {
    const ExprNode& node = e.node();
    switch (node.index()) {
        case 0:
        case 1:
            return Expr::zero();
        case 2:
            return std::get<Sym>(node).ch == a ? Expr::one() : Expr::zero();
        case 3: {
            const auto& st = std::get<Star>(node);
            return msimp(simplify_flag,
                         Expr::concat(classical_brzozowski(a, st.inner, simplify_flag),
                                      msimp(simplify_flag, e)));
        }
        case 4: {
            const auto& c = std::get<Concat>(node);
            Expr left = msimp(
                simplify_flag,
                Expr::concat(classical_brzozowski(a, c.left, simplify_flag),
                             msimp(simplify_flag, c.right)));
            if (!nullable(c.left)) return left;
            return msimp(simplify_flag,
                         Expr::boolop(BoolFun::Or(),
                                      {std::move(left),
                                       classical_brzozowski(a, c.right, simplify_flag)}));
        }
        default: {
            const auto& b = std::get<BoolOp>(node);
            std::vector<Expr> derived;
            derived.reserve(b.args.size());
            for (const Expr& arg : b.args) {
                derived.push_back(classical_brzozowski(a, arg, simplify_flag));
            }
            const BoolFun& f = is_or_fun(b.fun) ? BoolFun::Or() : b.fun;
            return msimp(simplify_flag, Expr::boolop(f, std::move(derived)));
        }
    }
}

namespace {

const BoolFun* find_non_or(const Expr& e) {
    const ExprNode& node = e.node();
    if (const auto* st = std::get_if<Star>(&node)) return find_non_or(st->inner);
    if (const auto* c = std::get_if<Concat>(&node)) {
        if (const BoolFun* f = find_non_or(c->left)) return f;
        return find_non_or(c->right);
    }
    if (const auto* b = std::get_if<BoolOp>(&node)) {
        if (!is_or_fun(b->fun)) return &b->fun;
        for (const Expr& arg : b->args) {
            if (const BoolFun* f = find_non_or(arg)) return f;
        }
    }
    return nullptr;
}

std::vector<Expr> antimirov_parts(Symbol a, const Expr& e, bool simplify_flag) {
    const ExprNode& node = e.node();
    switch (node.index()) {
        case 0:
        case 1:
            return {};
        case 2:
            return std::get<Sym>(node).ch == a ? std::vector<Expr>{Expr::one()}
                                               : std::vector<Expr>{};
        case 3: {
            const auto& st = std::get<Star>(node);
            std::vector<Expr> out;
            const Expr tail = msimp(simplify_flag, e);
            for (Expr& g : antimirov_parts(a, st.inner, simplify_flag)) {
                out.push_back(msimp(simplify_flag, Expr::concat(std::move(g), tail)));
            }
            return out;
        }
        case 4: {
            const auto& c = std::get<Concat>(node);
            std::vector<Expr> out;
            const Expr tail = msimp(simplify_flag, c.right);
            for (Expr& g : antimirov_parts(a, c.left, simplify_flag)) {
                out.push_back(msimp(simplify_flag, Expr::concat(std::move(g), tail)));
            }
            if (nullable(c.left)) {
                for (Expr& g : antimirov_parts(a, c.right, simplify_flag)) {
                    out.push_back(std::move(g));
                }
            }
            return out;
        }
        default: {
            const auto& b = std::get<BoolOp>(node);
            std::vector<Expr> out;
            for (const Expr& arg : b.args) {
                for (Expr& g : antimirov_parts(a, arg, simplify_flag)) {
                    out.push_back(std::move(g));
                }
            }
            return out;
        }
    }
}

// The dissimilar derivative as its list of canonical summands.  Sums built
// by a derivation step are represented as the list itself (sorted and
// deduplicated); sums that were already part of the input stay opaque
// inside single summands.
std::vector<Expr> dissimilar_parts(Symbol a, const Expr& e, bool simplify_flag) {
    const ExprNode& node = e.node();
    auto refold = [&](const std::vector<Expr>& parts) {
        return msimp(simplify_flag, fold_sum(parts));
    };
    switch (node.index()) {
        case 0:
        case 1:
            return {Expr::zero()};
        case 2:
            return {std::get<Sym>(node).ch == a ? Expr::one() : Expr::zero()};
        case 3: {
            const auto& st = std::get<Star>(node);
            Expr inner_d = refold(dissimilar_parts(a, st.inner, simplify_flag));
            return {msimp(simplify_flag,
                          Expr::concat(std::move(inner_d), msimp(simplify_flag, e)))};
        }
        case 4: {
            const auto& c = std::get<Concat>(node);
            Expr left_d = refold(dissimilar_parts(a, c.left, simplify_flag));
            Expr left = msimp(simplify_flag, Expr::concat(std::move(left_d),
                                                          msimp(simplify_flag, c.right)));
            if (!nullable(c.left)) return {std::move(left)};
            std::vector<Expr> parts = dissimilar_parts(a, c.right, simplify_flag);
            parts.push_back(std::move(left));
            return canonicalize(std::move(parts));
        }
        default: {
            const auto& b = std::get<BoolOp>(node);
            if (is_or_fun(b.fun)) {
                std::vector<Expr> parts = dissimilar_parts(a, b.args[0], simplify_flag);
                std::vector<Expr> more = dissimilar_parts(a, b.args[1], simplify_flag);
                parts.insert(parts.end(), more.begin(), more.end());
                return canonicalize(std::move(parts));
            }
            std::vector<Expr> derived;
            derived.reserve(b.args.size());
            for (const Expr& arg : b.args) {
                derived.push_back(refold(dissimilar_parts(a, arg, simplify_flag)));
            }
            return {msimp(simplify_flag, Expr::boolop(b.fun, std::move(derived)))};
        }
    }
}

}  // namespace

ExprSet classical_antimirov(Symbol a, const Expr& e, bool simplify_flag) {
    if (const BoolFun* f = find_non_or(e)) throw NotSimple(f->name());
    return ExprSet(antimirov_parts(a, e, simplify_flag));
}

Expr classical_dissimilar(Symbol a, const Expr& e, bool simplify_flag) {
    return msimp(simplify_flag, fold_sum(dissimilar_parts(a, e, simplify_flag)));
}

}  // namespace rederiv
