#include "rederiv/oracle.hpp"

#include <algorithm>
#include <vector>

namespace rederiv::oracle {

namespace {

using WordSet = std::set<Word>;

Alphabet effective_alphabet(const Expr& e, const Alphabet& extra) {
    Alphabet sigma = symbols(e);
    sigma.insert(extra.begin(), extra.end());
    return sigma;
}

void require_alphabet(const Expr& e, const Alphabet& sigma) {
    if (sigma.empty() && contains_complement_like(e)) throw AlphabetRequired();
}

/// All words over sigma of length <= n, shortest first.
std::vector<Word> words_upto(const Alphabet& sigma, std::size_t n) {
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= n; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (Symbol a : sigma) out.push_back(out[i] + a);
        }
        layer_begin = layer_end;
    }
    return out;
}

WordSet enum_impl(const Expr& e, std::size_t n, const Alphabet& sigma);

WordSet concat_words(const WordSet& xs, const WordSet& ys, std::size_t n) {
    WordSet out;
    for (const Word& u : xs) {
        if (u.size() > n) continue;
        for (const Word& v : ys) {
            if (u.size() + v.size() <= n) out.insert(u + v);
        }
    }
    return out;
}

WordSet enum_impl(const Expr& e, std::size_t n, const Alphabet& sigma) {
    const ExprNode& node = e.node();
    switch (node.index()) {
        case 0:
            return {};
        case 1:
            return {Word{}};
        case 2:
            return n >= 1 ? WordSet{Word(1, std::get<Sym>(node).ch)} : WordSet{};
        case 3: {
            const WordSet base = enum_impl(std::get<Star>(node).inner, n, sigma);
            WordSet closure{Word{}};
            for (bool grew = true; grew;) {
                WordSet next = concat_words(closure, base, n);
                next.insert(closure.begin(), closure.end());
                grew = next.size() > closure.size();
                closure = std::move(next);
            }
            return closure;
        }
        case 4: {
            const auto& c = std::get<Concat>(node);
            return concat_words(enum_impl(c.left, n, sigma),
                                enum_impl(c.right, n, sigma), n);
        }
        default: {
            const auto& b = std::get<BoolOp>(node);
            std::vector<WordSet> arg_words;
            arg_words.reserve(b.args.size());
            for (const Expr& a : b.args) arg_words.push_back(enum_impl(a, n, sigma));
            WordSet out;
            std::vector<bool> bits(b.args.size());
            for (const Word& w : words_upto(sigma, n)) {
                for (std::size_t i = 0; i < arg_words.size(); ++i) {
                    bits[i] = arg_words[i].count(w) > 0;
                }
                if (b.fun.eval(bits)) out.insert(w);
            }
            return out;
        }
    }
}

/// Single-letter quotient (a^{-1} L(e)) truncated to length m, computed by
/// the inductive case analysis.  sigma is the ambient alphabet for
/// pointwise boolean cases.
WordSet letter_quotient(Symbol a, const Expr& e, std::size_t m, const Alphabet& sigma) {
    const ExprNode& node = e.node();
    switch (node.index()) {
        case 0:
        case 1:
            return {};
        case 2:
            return std::get<Sym>(node).ch == a ? WordSet{Word{}} : WordSet{};
        case 3: {
            // a^{-1}(L*) = (a^{-1} L) . L*
            const auto& st = std::get<Star>(node);
            return concat_words(letter_quotient(a, st.inner, m, sigma),
                                enum_impl(e, m, sigma), m);
        }
        case 4: {
            // a^{-1}(L1 L2) = (a^{-1} L1) L2, plus a^{-1} L2 when the empty
            // word belongs to L1.
            const auto& c = std::get<Concat>(node);
            WordSet out = concat_words(letter_quotient(a, c.left, m, sigma),
                                       enum_impl(c.right, m, sigma), m);
            if (enum_impl(c.left, 0, sigma).count(Word{}) > 0) {
                WordSet right = letter_quotient(a, c.right, m, sigma);
                out.insert(right.begin(), right.end());
            }
            return out;
        }
        default: {
            // a^{-1}(f(L1,...,Lk)) = f(a^{-1} L1, ..., a^{-1} Lk) pointwise.
            const auto& b = std::get<BoolOp>(node);
            std::vector<WordSet> arg_quots;
            arg_quots.reserve(b.args.size());
            for (const Expr& arg : b.args) {
                arg_quots.push_back(letter_quotient(a, arg, m, sigma));
            }
            WordSet out;
            std::vector<bool> bits(b.args.size());
            for (const Word& w : words_upto(sigma, m)) {
                for (std::size_t i = 0; i < arg_quots.size(); ++i) {
                    bits[i] = arg_quots[i].count(w) > 0;
                }
                if (b.fun.eval(bits)) out.insert(w);
            }
            return out;
        }
    }
}

Alphabet with_word_symbols(Alphabet sigma, const Word& w) {
    for (char c : w) {
        if (is_symbol(c)) sigma.insert(c);
    }
    return sigma;
}

}  // namespace

bool contains_complement_like(const Expr& e) {
    const ExprNode& node = e.node();
    if (const auto* st = std::get_if<Star>(&node)) {
        return contains_complement_like(st->inner);
    }
    if (const auto* c = std::get_if<Concat>(&node)) {
        return contains_complement_like(c->left) || contains_complement_like(c->right);
    }
    if (const auto* b = std::get_if<BoolOp>(&node)) {
        if (b->fun.eval(std::vector<bool>(b->fun.arity(), false))) return true;
        return std::any_of(b->args.begin(), b->args.end(), contains_complement_like);
    }
    return false;
}

BoundedLang enumerate(const Expr& e, std::size_t n, const Alphabet& extra) {
    const Alphabet sigma = effective_alphabet(e, extra);
    require_alphabet(e, sigma);
    return BoundedLang{n, enum_impl(e, n, sigma)};
}

bool member(const Expr& e, const Word& w, const Alphabet& extra) {
    const Alphabet sigma = with_word_symbols(effective_alphabet(e, extra), w);
    require_alphabet(e, sigma);
    return enum_impl(e, w.size(), sigma).count(w) > 0;
}

BoundedLang quotient(const Expr& e, const Word& w, std::size_t n, const Alphabet& extra) {
    const Alphabet sigma = with_word_symbols(effective_alphabet(e, extra), w);
    require_alphabet(e, sigma);
    const WordSet full = enum_impl(e, n + w.size(), sigma);
    WordSet out;
    for (const Word& u : full) {
        if (u.size() >= w.size() && u.compare(0, w.size(), w) == 0) {
            out.insert(u.substr(w.size()));
        }
    }
    return BoundedLang{n, std::move(out)};
}

BoundedLang quotient_inductive(const Expr& e, const Word& w, std::size_t n,
                               const Alphabet& extra) {
    const Alphabet sigma = with_word_symbols(effective_alphabet(e, extra), w);
    require_alphabet(e, sigma);
    if (w.empty()) return BoundedLang{n, enum_impl(e, n, sigma)};
    WordSet current = letter_quotient(w[0], e, n + w.size() - 1, sigma);
    for (std::size_t i = 1; i < w.size(); ++i) {
        WordSet next;
        for (const Word& u : current) {
            if (!u.empty() && u[0] == w[i]) next.insert(u.substr(1));
        }
        current = std::move(next);
    }
    return BoundedLang{n, std::move(current)};
}

bool equiv_upto(const Expr& e1, const Expr& e2, std::size_t n, const Alphabet& extra) {
    return !equiv_witness(e1, e2, n, extra).has_value();
}

std::optional<Word> equiv_witness(const Expr& e1, const Expr& e2, std::size_t n,
                                  const Alphabet& extra) {
    Alphabet sigma = effective_alphabet(e1, extra);
    const Alphabet sigma2 = effective_alphabet(e2, extra);
    sigma.insert(sigma2.begin(), sigma2.end());
    require_alphabet(e1, sigma);
    require_alphabet(e2, sigma);
    const WordSet w1 = enum_impl(e1, n, sigma);
    const WordSet w2 = enum_impl(e2, n, sigma);
    std::optional<Word> best;
    auto consider = [&](const Word& w) {
        if (!best.has_value() || w.size() < best->size() ||
            (w.size() == best->size() && w < *best)) {
            best = w;
        }
    };
    for (const Word& w : w1) {
        if (w2.count(w) == 0) consider(w);
    }
    for (const Word& w : w2) {
        if (w1.count(w) == 0) consider(w);
    }
    return best;
}

}  // namespace rederiv::oracle
