#include <doctest.h>

#include <vector>

#include "rederiv/classic.hpp"
#include "rederiv/support.hpp"
#include "test_util.hpp"

using namespace rederiv;
using rederiv::testing::ExprGen;

TEST_CASE("expression sets are canonical") {
    const ExprSet s({parse("b"), parse("a"), parse("a")});
    REQUIRE(s.size() == 2);
    CHECK(s.elems()[0] == parse("a"));
    CHECK(s.elems()[1] == parse("b"));
    CHECK(s == ExprSet({parse("a"), parse("b")}));
    CHECK(ExprSet::singleton(parse("a")).size() == 1);
    CHECK(ExprSet().empty());
    CHECK(s.union_with(ExprSet({parse("1"), parse("b")})) ==
          ExprSet({parse("1"), parse("a"), parse("b")}));
    CHECK(display_expr_set(s) == "{a,b}");
    CHECK(display_expr_set(ExprSet()) == "{}");
}

TEST_CASE("fold_sum builds the canonical left-nested sum") {
    CHECK(fold_sum({}) == parse("0"));
    CHECK(fold_sum({parse("ab")}) == parse("ab"));
    CHECK(fold_sum({parse("a"), parse("b"), parse("c")}) == parse("a+b+c"));
}

TEST_CASE("textbook Brzozowski derivatives") {
    CHECK(classical_brzozowski('a', parse("a")) == parse("1"));
    CHECK(classical_brzozowski('a', parse("b")) == parse("0"));
    CHECK(classical_brzozowski('a', parse("a*b")) == parse("a*b"));
    CHECK(classical_brzozowski('a', parse("a*b"), false) == parse("1a*b+0"));
    CHECK(classical_brzozowski('b', parse("(ab)*")) == parse("0"));
    CHECK(classical_brzozowski('a', parse("(ab)*")) == parse("b(ab)*"));
    CHECK(classical_brzozowski('a', parse("!a")) == parse("!1"));
    CHECK(classical_brzozowski('a', parse("a^b")) == parse("1^0"));
}

TEST_CASE("the Brzozowski support reproduces the textbook derivative") {
    ExprGen gen(808);
    for (int i = 0; i < 200; ++i) {
        const Expr e = gen.next(4);
        CAPTURE(render(e));
        for (Symbol a : {'a', 'b'}) {
            CHECK(derive_sym(SupportB(true), a, e) == classical_brzozowski(a, e, true));
            CHECK(derive_sym(SupportB(false), a, e) == classical_brzozowski(a, e, false));
        }
    }
}

TEST_CASE("textbook Antimirov partial derivatives") {
    CHECK(classical_antimirov('a', parse("a")) == ExprSet::singleton(parse("1")));
    CHECK(classical_antimirov('a', parse("a+b")) == ExprSet::singleton(parse("1")));
    CHECK(classical_antimirov('a', parse("(a+b)a*")) == ExprSet::singleton(parse("a*")));
    CHECK(classical_antimirov('b', parse("(ab)*")) == ExprSet());
    CHECK(classical_antimirov('a', parse("a+ab")) ==
          ExprSet({parse("1"), parse("b")}));
    CHECK(classical_antimirov('a', parse("a*+b")) == ExprSet::singleton(parse("a*")));

    CHECK(is_simple(parse("a+b")));
    CHECK(is_simple(parse("(a+b)*c")));
    CHECK_FALSE(is_simple(parse("!a")));
    CHECK_FALSE(is_simple(parse("a&b")));
    CHECK_FALSE(is_simple(parse("(a^b)+c")));

    CHECK_THROWS_AS(classical_antimirov('a', parse("a&b")), NotSimple);
    CHECK_THROWS_AS(classical_antimirov('a', parse("!a")), NotSimple);
    CHECK_THROWS_AS(classical_antimirov('a', parse("(a^b)+c")), NotSimple);
}

TEST_CASE("the Antimirov support reproduces partial derivatives on simple expressions") {
    ExprGen gen(909);
    for (int i = 0; i < 200; ++i) {
        const Expr e = gen.next_simple(4);
        CAPTURE(render(e));
        for (Symbol a : {'a', 'b'}) {
            CHECK(derive_sym(SupportA(true), a, e) == classical_antimirov(a, e, true));
            CHECK(derive_sym(SupportA(false), a, e) == classical_antimirov(a, e, false));
        }
    }
}

TEST_CASE("textbook dissimilar derivatives normalise derivation sums") {
    // One derivation step away from Star(a), the dissimilar derivative
    // reaches its fixpoint: deriving (0a*)+(1a*) reproduces it exactly.
    const Expr fixpoint = parse("0a*+1a*");
    CHECK(classical_dissimilar('a', parse("a*"), false) == parse("1a*"));
    CHECK(classical_dissimilar('a', parse("1a*"), false) == fixpoint);
    CHECK(classical_dissimilar('a', fixpoint, false) == fixpoint);

    // The plain derivative keeps growing on the same input instead.
    CHECK(classical_brzozowski('a', fixpoint, false) == parse("0a*+(0a*+1a*)"));

    CHECK(classical_dissimilar('a', parse("a*")) == parse("a*"));
    CHECK(classical_dissimilar('a', parse("a+a")) == parse("1"));
}

TEST_CASE("the dissimilar support reproduces dissimilar derivatives") {
    ExprGen gen(1010);
    const SupportBAci on(true), off(false);
    for (int i = 0; i < 200; ++i) {
        const Expr e = gen.next(4);
        CAPTURE(render(e));
        for (Symbol a : {'a', 'b'}) {
            CHECK(on.h(derive_sym(on, a, e)) == classical_dissimilar(a, e, true));
            CHECK(off.h(derive_sym(off, a, e)) == classical_dissimilar(a, e, false));
        }
    }
}
