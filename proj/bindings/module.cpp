// Python bindings: a string-centric surface over the library.  Expressions
// travel as text in the concrete syntax, structures as their canonical
// display strings, automata as the JSON encoding, so the module needs no
// wrapper classes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rederiv/automaton.hpp"
#include "rederiv/classic.hpp"
#include "rederiv/clausal.hpp"
#include "rederiv/expr.hpp"
#include "rederiv/oracle.hpp"
#include "rederiv/support.hpp"

namespace py = pybind11;

namespace {

using namespace rederiv;

using AnySupport = std::variant<SupportB, SupportBAci, SupportA, SupportC>;

AnySupport make_support(const std::string& name, bool simplify) {
    if (name == "brzozowski") return SupportB(simplify);
    if (name == "dissimilar") return SupportBAci(simplify);
    if (name == "antimirov") return SupportA(simplify);
    if (name == "clausal") return SupportC(simplify);
    throw std::invalid_argument("unknown support '" + name +
                                "', expected brzozowski, dissimilar, antimirov "
                                "or clausal");
}

std::set<Symbol> to_alphabet(const std::string& letters) {
    std::set<Symbol> out;
    for (char c : letters) {
        if (c < 'a' || c > 'z') {
            throw std::invalid_argument(
                "alphabet symbols must be lowercase letters, got '" +
                std::string(1, c) + "'");
        }
        out.insert(c);
    }
    return out;
}

AltAutomaton build(const std::string& expr, const std::string& support,
                   const std::string& base, bool simplify, std::size_t cap,
                   bool initial_base, bool prune_false, const std::string& alphabet) {
    const Expr e = parse(expr);
    const AnySupport sup = make_support(support, simplify);
    BuildOptions opts;
    opts.cap = cap;
    opts.initial_base = initial_base;
    opts.prune_false = prune_false;
    opts.extra_alphabet = to_alphabet(alphabet);
    return std::visit(
        [&](const auto& s) {
            return build_automaton(s, base_kind_from_name(base), e, opts);
        },
        sup);
}

}  // namespace

PYBIND11_MODULE(rederiv, m) {
    m.doc() = "derivation of regular expressions with boolean connectives";

    m.def(
        "parse",
        [](const std::string& text) { return render(rederiv::parse(text)); },
        py::arg("text"),
        "Parse an expression and return its canonical rendering.");

    m.def(
        "nullable",
        [](const std::string& text) { return nullable(rederiv::parse(text)); },
        py::arg("text"), "Whether the expression accepts the empty word.");

    m.def(
        "simplify",
        [](const std::string& text) { return render(simplify(rederiv::parse(text))); },
        py::arg("text"),
        "Apply the unit simplifications and return the canonical rendering.");

    m.def(
        "enumerate_words",
        [](const std::string& text, std::size_t n, const std::string& alphabet) {
            const auto lang =
                oracle::enumerate(rederiv::parse(text), n, to_alphabet(alphabet));
            return std::vector<std::string>(lang.words.begin(), lang.words.end());
        },
        py::arg("text"), py::arg("n") = oracle::kDefaultBound,
        py::arg("alphabet") = std::string(),
        "All accepted words of length <= n, in order.");

    m.def(
        "member",
        [](const std::string& text, const std::string& word,
           const std::string& alphabet) {
            return oracle::member(rederiv::parse(text), word, to_alphabet(alphabet));
        },
        py::arg("text"), py::arg("word"), py::arg("alphabet") = std::string(),
        "Set-theoretic membership, computed without derivatives.");

    m.def(
        "derive",
        [](const std::string& text, const std::string& word,
           const std::string& support, bool simplify) {
            const Expr e = rederiv::parse(text);
            const AnySupport sup = make_support(support, simplify);
            return std::visit(
                [&](const auto& s) { return s.display(derive_word(s, word, e)); },
                sup);
        },
        py::arg("text"), py::arg("word"), py::arg("support") = "brzozowski",
        py::arg("simplify") = true,
        "Derive by a nonempty word and return the structure's display string.");

    m.def(
        "match",
        [](const std::string& text, const std::string& word,
           const std::string& support, bool simplify) {
            const Expr e = rederiv::parse(text);
            const AnySupport sup = make_support(support, simplify);
            return std::visit(
                [&](const auto& s) { return member_via(s, e, word); }, sup);
        },
        py::arg("text"), py::arg("word"), py::arg("support") = "brzozowski",
        py::arg("simplify") = true, "Membership decided through derivation.");

    m.def(
        "closure",
        [](const std::string& text, const std::string& support, bool simplify,
           std::size_t cap, const std::string& alphabet) {
            const Expr e = rederiv::parse(text);
            const AnySupport sup = make_support(support, simplify);
            return std::visit(
                [&](const auto& s) {
                    std::vector<std::string> out;
                    for (const auto& x :
                         derivative_closure(s, e, cap, to_alphabet(alphabet))) {
                        out.push_back(s.display(x));
                    }
                    return out;
                },
                sup);
        },
        py::arg("text"), py::arg("support") = "brzozowski",
        py::arg("simplify") = true, py::arg("cap") = kDefaultCap,
        py::arg("alphabet") = std::string(),
        "Display strings of the word-derivation closure, in discovery order.");

    m.def(
        "equiv",
        [](const std::string& e1, const std::string& e2, std::size_t upto,
           const std::string& alphabet) {
            return oracle::equiv_upto(rederiv::parse(e1), rederiv::parse(e2), upto,
                                      to_alphabet(alphabet));
        },
        py::arg("e1"), py::arg("e2"), py::arg("upto") = oracle::kDefaultBound,
        py::arg("alphabet") = std::string(),
        "Agreement on every word up to the bound.");

    m.def(
        "equiv_witness",
        [](const std::string& e1, const std::string& e2, std::size_t upto,
           const std::string& alphabet) -> std::optional<std::string> {
            return oracle::equiv_witness(rederiv::parse(e1), rederiv::parse(e2),
                                         upto, to_alphabet(alphabet));
        },
        py::arg("e1"), py::arg("e2"), py::arg("upto") = oracle::kDefaultBound,
        py::arg("alphabet") = std::string(),
        "A shortest distinguishing word within the bound, or None.");

    m.def(
        "afa_json",
        [](const std::string& text, const std::string& support,
           const std::string& base, bool simplify, std::size_t cap,
           bool initial_base, bool prune_false, const std::string& alphabet) {
            return export_json(build(text, support, base, simplify, cap,
                                     initial_base, prune_false, alphabet));
        },
        py::arg("text"), py::arg("support") = "clausal", py::arg("base") = "BC",
        py::arg("simplify") = true, py::arg("cap") = kDefaultCap,
        py::arg("initial_base") = false, py::arg("prune_false") = false,
        py::arg("alphabet") = std::string(),
        "Build the alternating automaton and return its JSON encoding.");

    m.def(
        "afa_dot",
        [](const std::string& text, const std::string& support,
           const std::string& base, bool simplify, std::size_t cap,
           bool initial_base, bool prune_false, const std::string& alphabet) {
            return export_dot(build(text, support, base, simplify, cap,
                                    initial_base, prune_false, alphabet));
        },
        py::arg("text"), py::arg("support") = "clausal", py::arg("base") = "BC",
        py::arg("simplify") = true, py::arg("cap") = kDefaultCap,
        py::arg("initial_base") = false, py::arg("prune_false") = false,
        py::arg("alphabet") = std::string(),
        "Build the alternating automaton and return its DOT encoding.");

    m.def(
        "accepts",
        [](const std::string& afa_json, const std::string& word) {
            return run(import_json(afa_json), word);
        },
        py::arg("afa_json"), py::arg("word"),
        "Run a JSON-encoded automaton on a word.");
}
