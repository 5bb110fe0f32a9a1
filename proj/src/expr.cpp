#include "rederiv/expr.hpp"

#include <optional>
#include <utility>

namespace rederiv {

// ---------------------------------------------------------------------------
// SyntaxError

SyntaxError::SyntaxError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

// ---------------------------------------------------------------------------
// BoolFun

BoolFun::BoolFun(std::string name, std::vector<bool> table)
    : name_(std::move(name)), table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument(
            "BoolFun table size must be a power of two, got " + std::to_string(n));
    }
    arity_ = 0;
    for (std::size_t m = n; m > 1; m >>= 1) ++arity_;
}

bool BoolFun::eval(const std::vector<bool>& args) const {
    if (args.size() != arity_) {
        throw std::invalid_argument("BoolFun '" + name_ + "' expects " +
                                    std::to_string(arity_) + " arguments, got " +
                                    std::to_string(args.size()));
    }
    std::size_t index = 0;
    for (bool b : args) index = (index << 1) | static_cast<std::size_t>(b);
    return table_[index];
}

std::strong_ordering operator<=>(const BoolFun& x, const BoolFun& y) {
    if (auto c = x.name_ <=> y.name_; c != 0) return c;
    if (auto c = x.table_.size() <=> y.table_.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.table_.size(); ++i) {
        if (auto c = static_cast<int>(x.table_[i]) <=> static_cast<int>(y.table_[i]);
            c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

const BoolFun& BoolFun::Or() {
    static const BoolFun f("OR", {false, true, true, true});
    return f;
}

const BoolFun& BoolFun::And() {
    static const BoolFun f("AND", {false, false, false, true});
    return f;
}

const BoolFun& BoolFun::Not() {
    static const BoolFun f("NOT", {true, false});
    return f;
}

const BoolFun& BoolFun::Xor() {
    static const BoolFun f("XOR", {false, true, true, false});
    return f;
}

const BoolFun& BoolFun::Falsum() {
    static const BoolFun f("FALSE", {false});
    return f;
}

bool is_or_fun(const BoolFun& f) {
    return f.arity() == 2 && f.table() == BoolFun::Or().table();
}

// ---------------------------------------------------------------------------
// Expr constructors

namespace {

Symbol checked_symbol(Symbol s) {
    if (!is_symbol(s)) {
        throw std::invalid_argument(std::string("invalid symbol '") + s +
                                    "', expected 'a'..'z'");
    }
    return s;
}

}  // namespace

Expr Expr::zero() {
    static const Expr e{std::make_shared<const ExprNode>(Zero{})};
    return e;
}

Expr Expr::one() {
    static const Expr e{std::make_shared<const ExprNode>(One{})};
    return e;
}

Expr Expr::sym(Symbol s) {
    return Expr{std::make_shared<const ExprNode>(Sym{checked_symbol(s)})};
}

Expr Expr::star(Expr inner) {
    return Expr{std::make_shared<const ExprNode>(Star{std::move(inner)})};
}

Expr Expr::concat(Expr left, Expr right) {
    return Expr{std::make_shared<const ExprNode>(Concat{std::move(left), std::move(right)})};
}

Expr Expr::boolop(BoolFun fun, std::vector<Expr> args) {
    if (fun.arity() == 0) {
        throw std::invalid_argument("BoolOp expressions require positive arity");
    }
    if (args.size() != fun.arity()) {
        throw std::invalid_argument("BoolOp '" + fun.name() + "' expects " +
                                    std::to_string(fun.arity()) + " arguments, got " +
                                    std::to_string(args.size()));
    }
    return Expr{std::make_shared<const ExprNode>(BoolOp{std::move(fun), std::move(args)})};
}

bool Expr::is_zero() const { return std::holds_alternative<Zero>(node()); }
bool Expr::is_one() const { return std::holds_alternative<One>(node()); }

// ---------------------------------------------------------------------------
// compare

std::strong_ordering compare(const Expr& x, const Expr& y) {
    const ExprNode& nx = x.node();
    const ExprNode& ny = y.node();
    if (&nx == &ny) return std::strong_ordering::equal;  // shared subtree
    if (auto c = nx.index() <=> ny.index(); c != 0) return c;
    if (const auto* sx = std::get_if<Sym>(&nx)) {
        return sx->ch <=> std::get<Sym>(ny).ch;
    }
    if (const auto* tx = std::get_if<Star>(&nx)) {
        return compare(tx->inner, std::get<Star>(ny).inner);
    }
    if (const auto* cx = std::get_if<Concat>(&nx)) {
        const auto& cy = std::get<Concat>(ny);
        if (auto c = compare(cx->left, cy.left); c != 0) return c;
        return compare(cx->right, cy.right);
    }
    if (const auto* bx = std::get_if<BoolOp>(&nx)) {
        const auto& by = std::get<BoolOp>(ny);
        if (auto c = bx->fun <=> by.fun; c != 0) return c;
        for (std::size_t i = 0; i < bx->args.size(); ++i) {
            if (auto c = compare(bx->args[i], by.args[i]); c != 0) return c;
        }
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;  // Zero or One
}

// ---------------------------------------------------------------------------
// parse

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = parse_sum();
        if (peek().has_value()) throw SyntaxError("unexpected character", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    std::optional<char> peek() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r')) {
            ++pos_;
        }
        if (pos_ < text_.size()) return text_[pos_];
        return std::nullopt;
    }

    static bool starts_atom(char c) {
        return c == '0' || c == '1' || c == '(' || c == '!' || is_symbol(c);
    }

    Expr parse_sum() {
        Expr e = parse_xor();
        while (peek() == '+') {
            ++pos_;
            Expr rhs = parse_xor();
            e = Expr::boolop(BoolFun::Or(), {std::move(e), std::move(rhs)});
        }
        return e;
    }

    Expr parse_xor() {
        Expr e = parse_conj();
        while (peek() == '^') {
            ++pos_;
            Expr rhs = parse_conj();
            e = Expr::boolop(BoolFun::Xor(), {std::move(e), std::move(rhs)});
        }
        return e;
    }

    Expr parse_conj() {
        Expr e = parse_cat();
        while (peek() == '&') {
            ++pos_;
            Expr rhs = parse_cat();
            e = Expr::boolop(BoolFun::And(), {std::move(e), std::move(rhs)});
        }
        return e;
    }

    Expr parse_cat() {
        Expr e = parse_unary();
        while (true) {
            auto c = peek();
            if (!c.has_value() || !starts_atom(*c)) break;
            e = Expr::concat(std::move(e), parse_unary());
        }
        return e;
    }

    Expr parse_unary() {
        if (peek() == '!') {
            ++pos_;
            return Expr::boolop(BoolFun::Not(), {parse_unary()});
        }
        return parse_postfix();
    }

    Expr parse_postfix() {
        Expr e = parse_atom();
        while (peek() == '*') {
            ++pos_;
            e = Expr::star(std::move(e));
        }
        return e;
    }

    Expr parse_atom() {
        auto c = peek();
        if (!c.has_value()) throw SyntaxError("unexpected end of input", pos_);
        if (*c == '0') {
            ++pos_;
            return Expr::zero();
        }
        if (*c == '1') {
            ++pos_;
            return Expr::one();
        }
        if (is_symbol(*c)) {
            ++pos_;
            return Expr::sym(*c);
        }
        if (*c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            Expr e = parse_sum();
            if (peek() != ')') throw SyntaxError("unmatched '('", open);
            ++pos_;
            return e;
        }
        throw SyntaxError("unexpected character", pos_);
    }
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// render

namespace {

// Precedence levels used for minimal parenthesisation, loosest to tightest:
// OR 0, XOR 1, AND 2, concatenation 3, NOT 4, star 5, atoms 6.  Boolean
// functions without concrete syntax render as calls and are self-delimiting.
int prec(const Expr& e) {
    const ExprNode& n = e.node();
    switch (n.index()) {
        case 0:
        case 1:
        case 2:
            return 6;
        case 3:
            return 5;
        case 4:
            return 3;
        default: {
            const auto& b = std::get<BoolOp>(n);
            if (b.fun == BoolFun::Or()) return 0;
            if (b.fun == BoolFun::Xor()) return 1;
            if (b.fun == BoolFun::And()) return 2;
            if (b.fun == BoolFun::Not()) return 4;
            return 6;
        }
    }
}

void render_into(const Expr& e, std::string& out);

void render_child(const Expr& c, int min_prec, std::string& out) {
    if (prec(c) < min_prec) {
        out += '(';
        render_into(c, out);
        out += ')';
    } else {
        render_into(c, out);
    }
}

void render_into(const Expr& e, std::string& out) {
    const ExprNode& n = e.node();
    if (std::holds_alternative<Zero>(n)) {
        out += '0';
    } else if (std::holds_alternative<One>(n)) {
        out += '1';
    } else if (const auto* s = std::get_if<Sym>(&n)) {
        out += s->ch;
    } else if (const auto* t = std::get_if<Star>(&n)) {
        render_child(t->inner, 5, out);
        out += '*';
    } else if (const auto* c = std::get_if<Concat>(&n)) {
        render_child(c->left, 3, out);
        render_child(c->right, 4, out);
    } else {
        const auto& b = std::get<BoolOp>(n);
        if (b.fun == BoolFun::Or()) {
            render_child(b.args[0], 0, out);
            out += '+';
            render_child(b.args[1], 1, out);
        } else if (b.fun == BoolFun::Xor()) {
            render_child(b.args[0], 1, out);
            out += '^';
            render_child(b.args[1], 2, out);
        } else if (b.fun == BoolFun::And()) {
            render_child(b.args[0], 2, out);
            out += '&';
            render_child(b.args[1], 3, out);
        } else if (b.fun == BoolFun::Not()) {
            out += '!';
            render_child(b.args[0], 4, out);
        } else {
            out += b.fun.name();
            out += '(';
            for (std::size_t i = 0; i < b.args.size(); ++i) {
                if (i > 0) out += ',';
                render_into(b.args[i], out);
            }
            out += ')';
        }
    }
}

}  // namespace

std::string render(const Expr& e) {
    std::string out;
    render_into(e, out);
    return out;
}

int display_precedence(const Expr& e) { return prec(e); }

// ---------------------------------------------------------------------------
// nullable / symbols / simplify

bool nullable(const Expr& e) {
    const ExprNode& n = e.node();
    switch (n.index()) {
        case 0:
            return false;  // Zero
        case 1:
            return true;  // One
        case 2:
            return false;  // Sym
        case 3:
            return true;  // Star
        case 4: {
            const auto& c = std::get<Concat>(n);
            return nullable(c.left) && nullable(c.right);
        }
        default: {
            const auto& b = std::get<BoolOp>(n);
            std::vector<bool> vals;
            vals.reserve(b.args.size());
            for (const Expr& a : b.args) vals.push_back(nullable(a));
            return b.fun.eval(vals);
        }
    }
}

namespace {

void collect_symbols(const Expr& e, std::set<Symbol>& out) {
    const ExprNode& n = e.node();
    if (const auto* s = std::get_if<Sym>(&n)) {
        out.insert(s->ch);
    } else if (const auto* t = std::get_if<Star>(&n)) {
        collect_symbols(t->inner, out);
    } else if (const auto* c = std::get_if<Concat>(&n)) {
        collect_symbols(c->left, out);
        collect_symbols(c->right, out);
    } else if (const auto* b = std::get_if<BoolOp>(&n)) {
        for (const Expr& a : b->args) collect_symbols(a, out);
    }
}

}  // namespace

std::set<Symbol> symbols(const Expr& e) {
    std::set<Symbol> out;
    collect_symbols(e, out);
    return out;
}

Expr simplify(const Expr& e) {
    const ExprNode& n = e.node();
    switch (n.index()) {
        case 0:
        case 1:
        case 2:
            return e;
        case 3:
            return Expr::star(simplify(std::get<Star>(n).inner));
        case 4: {
            const auto& c = std::get<Concat>(n);
            Expr l = simplify(c.left);
            Expr r = simplify(c.right);
            if (l.is_zero() || r.is_zero()) return Expr::zero();
            if (l.is_one()) return r;
            if (r.is_one()) return l;
            return Expr::concat(std::move(l), std::move(r));
        }
        default: {
            const auto& b = std::get<BoolOp>(n);
            std::vector<Expr> args;
            args.reserve(b.args.size());
            for (const Expr& a : b.args) args.push_back(simplify(a));
            if (is_or_fun(b.fun)) {
                if (args[0].is_zero()) return args[1];
                if (args[1].is_zero()) return args[0];
            }
            return Expr::boolop(b.fun, std::move(args));
        }
    }
}

}  // namespace rederiv
