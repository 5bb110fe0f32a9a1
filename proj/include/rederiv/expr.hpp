#pragma once

// Core regular-expression data type: immutable syntax trees over a small
// alphabet, extended with arbitrary boolean connectives given by truth
// tables.  Provides parsing, rendering, nullability, light simplification
// and a total structural order.

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rederiv {

/// A single letter of the alphabet.  Only 'a'..'z' are admitted.
using Symbol = char;

/// Returns true iff @p c is a valid alphabet symbol.
constexpr bool is_symbol(char c) { return c >= 'a' && c <= 'z'; }

/// Error raised by parse() on malformed input.  Carries the 0-based byte
/// offset of the first offending character.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, std::size_t offset);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A k-ary boolean function, described by a name and a complete truth table.
///
/// The table has 2^k entries.  Entry i holds the value of the function at
/// the argument tuple (b_1, ..., b_k) where i, read as a binary number, has
/// b_1 as its most significant bit.  For example the binary OR is
/// {0, 1, 1, 1} and binary AND is {0, 0, 0, 1}.
///
/// Arity 0 (a table with a single entry) is permitted so that constant
/// functions can appear in boolean formulas; expression nodes built with
/// boolop() always require positive arity.
class BoolFun {
public:
    /// Builds a function from a name and a truth table.  The table size
    /// must be a power of two; the arity is log2 of the table size.
    BoolFun(std::string name, std::vector<bool> table);

    const std::string& name() const noexcept { return name_; }
    const std::vector<bool>& table() const noexcept { return table_; }
    std::size_t arity() const noexcept { return arity_; }

    /// Evaluates the function on @p args (size must equal arity()).
    bool eval(const std::vector<bool>& args) const;

    /// Name and table must both match.
    friend bool operator==(const BoolFun& x, const BoolFun& y) {
        return x.name_ == y.name_ && x.table_ == y.table_;
    }

    /// Orders by name first, then by table.
    friend std::strong_ordering operator<=>(const BoolFun& x, const BoolFun& y);

    /// The four built-in connectives usable from the concrete syntax.
    static const BoolFun& Or();    ///< "+"  table {0,1,1,1}
    static const BoolFun& And();   ///< "&"  table {0,0,0,1}
    static const BoolFun& Not();   ///< "!"  table {1,0}
    static const BoolFun& Xor();   ///< "^"  table {0,1,1,0}
    /// Nullary constant false, used as the constant-false transition marker
    /// in automata.  Not expressible in the concrete expression syntax.
    static const BoolFun& Falsum();

private:
    std::string name_;
    std::vector<bool> table_;
    std::size_t arity_;
};

/// True iff @p f behaves as a binary disjunction, i.e. has arity 2 and the
/// truth table of OR.  The framework treats any such function as the
/// distinguished disjunction regardless of its name.
bool is_or_fun(const BoolFun& f);

struct ExprNode;

/// An immutable regular expression.  Copies share structure; all operations
/// build fresh nodes and never mutate existing ones.
///
/// Constructors (in structural rank order):
///   Zero            the empty language
///   One             the language containing only the empty word
///   Sym(a)          a single letter
///   Star(e)         Kleene closure
///   Concat(l, r)    concatenation
///   BoolOp(f, args) application of a boolean function to argument
///                   expressions (args.size() == f.arity(), arity >= 1)
class Expr {
public:
    static Expr zero();
    static Expr one();
    static Expr sym(Symbol s);
    static Expr star(Expr inner);
    static Expr concat(Expr left, Expr right);
    static Expr boolop(BoolFun fun, std::vector<Expr> args);

    const ExprNode& node() const { return *node_; }

    bool is_zero() const;
    bool is_one() const;

    /// Total structural order: by constructor rank
    /// (Zero < One < Sym < Star < Concat < BoolOp), then by symbol, child
    /// expressions, function name, function table and argument lists.
    friend std::strong_ordering compare(const Expr& x, const Expr& y);

    friend bool operator==(const Expr& x, const Expr& y) {
        return compare(x, y) == std::strong_ordering::equal;
    }
    friend std::strong_ordering operator<=>(const Expr& x, const Expr& y) {
        return compare(x, y);
    }

private:
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const ExprNode> node_;
};

struct Zero {};
struct One {};
struct Sym {
    Symbol ch;
};
struct Star {
    Expr inner;
};
struct Concat {
    Expr left;
    Expr right;
};
struct BoolOp {
    BoolFun fun;
    std::vector<Expr> args;
};

/// The variant alternatives appear in structural rank order; compare()
/// relies on the variant index for its first comparison step.
struct ExprNode : std::variant<Zero, One, Sym, Star, Concat, BoolOp> {
    using variant::variant;
};

/// Parses the concrete syntax.  Grammar, loosest to tightest:
///
///   sum    := xor ('+' xor)*          binary OR, left associative
///   xor    := conj ('^' conj)*        binary XOR, left associative
///   conj   := cat ('&' cat)*          binary AND, left associative
///   cat    := unary unary*            concatenation by juxtaposition,
///                                     left associative
///   unary  := '!' unary | postfix     complement
///   postfix:= atom '*'*               Kleene star
///   atom   := '0' | '1' | 'a'..'z' | '(' sum ')'
///
/// Whitespace between tokens is ignored.  Boolean functions other than the
/// four built-ins cannot be written in this syntax; they are available only
/// through the library and the JSON automaton format.
/// Throws SyntaxError on malformed input.
Expr parse(std::string_view text);

/// Renders an expression back to concrete syntax with minimal parentheses.
/// parse(render(e)) reproduces e exactly for any e built from the four
/// built-in connectives.  Applications of other boolean functions are
/// rendered as "name(arg1,...,argk)" for display; such strings are not
/// parseable.
std::string render(const Expr& e);

/// Precedence level of the outermost construct as used by render():
/// OR 0, XOR 1, AND 2, concatenation 3, NOT 4, star 5, atoms and named
/// calls 6.  Exposed so embedding renderers (formula display) can decide
/// when an expression needs parentheses.
int display_precedence(const Expr& e);

/// True iff the empty word belongs to the language of @p e.  Computed by
/// structural induction; for BoolOp the function is applied to the
/// nullability of the arguments.
bool nullable(const Expr& e);

/// The set of alphabet symbols occurring in @p e.
std::set<Symbol> symbols(const Expr& e);

/// Applies the basic unit/absorption rules bottom-up until no rule applies:
///
///   E + 0 -> E     0 + E -> E     (for any function with the OR table)
///   E . 0 -> 0     0 . E -> 0
///   E . 1 -> E     1 . E -> E
///
/// No other rewriting is performed; the result is language-equivalent to
/// the input and simplify is idempotent.
Expr simplify(const Expr& e);

/// Convenience: the language-ordering key used throughout for canonical
/// sets of expressions.
struct ExprLess {
    bool operator()(const Expr& x, const Expr& y) const {
        return compare(x, y) == std::strong_ordering::less;
    }
};

}  // namespace rederiv
