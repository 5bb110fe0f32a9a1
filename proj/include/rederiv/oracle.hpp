#pragma once

// Bounded-language oracle: computes length-truncated languages of
// expressions purely set-theoretically, by structural induction.  This
// module is deliberately independent of the derivative machinery — it is
// the reference that derivative-based membership and quotients are checked
// against.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "rederiv/expr.hpp"

namespace rederiv::oracle {

using Word = std::string;
using Alphabet = std::set<Symbol>;

/// Default truncation bound used by the command-line tool.
inline constexpr std::size_t kDefaultBound = 4;

/// Raised when a complement-like boolean operator (one that maps the
/// all-false tuple to true) must be evaluated but the effective alphabet is
/// empty: the pointwise semantics quantifies over all words of the
/// alphabet, so an alphabet is required to make the result meaningful.
class AlphabetRequired : public std::runtime_error {
public:
    AlphabetRequired()
        : std::runtime_error(
              "an alphabet is required: the expression contains a "
              "complement-like boolean operator and mentions no symbols") {}
};

/// A language truncated to words of length <= bound.
struct BoundedLang {
    std::size_t bound = 0;
    std::set<Word> words;

    friend bool operator==(const BoundedLang&, const BoundedLang&) = default;
};

/// True iff @p e contains a boolean operator f with f(0,...,0) = 1, i.e.
/// an operator that can accept words rejected by every argument.
bool contains_complement_like(const Expr& e);

/// L(e) restricted to words of length <= n over the effective alphabet
/// symbols(e) union @p extra.  Boolean operators are evaluated pointwise
/// over all words of the effective alphabet up to length n.
/// Throws AlphabetRequired when e is complement-like and the effective
/// alphabet is empty.
BoundedLang enumerate(const Expr& e, std::size_t n, const Alphabet& extra = {});

/// True iff w belongs to L(e), decided through enumerate(e, |w|) over the
/// effective alphabet symbols(e) union symbols of w union @p extra.
bool member(const Expr& e, const Word& w, const Alphabet& extra = {});

/// The left quotient w^{-1}(L(e)) truncated to length n: all words w' with
/// |w'| <= n such that w.w' belongs to L(e).  Computed by enumerating e up
/// to length |w| + n and stripping the prefix.  quotient(e, "", n) equals
/// enumerate(e, n).
BoundedLang quotient(const Expr& e, const Word& w, std::size_t n,
                     const Alphabet& extra = {});

/// Same value as quotient(), computed along a second, independent path: the
/// inductive single-letter quotient equations (concatenation splits on
/// whether the left factor contains the empty word, the star unfolds once,
/// boolean operators act pointwise), folded over the letters of w.
BoundedLang quotient_inductive(const Expr& e, const Word& w, std::size_t n,
                               const Alphabet& extra = {});

/// True iff e1 and e2 agree on every word of length <= n over the union of
/// their symbols and @p extra.
bool equiv_upto(const Expr& e1, const Expr& e2, std::size_t n,
                const Alphabet& extra = {});

/// A shortest word (ties broken lexicographically) on which e1 and e2
/// disagree within length n, or nullopt if they agree up to n.
std::optional<Word> equiv_witness(const Expr& e1, const Expr& e2, std::size_t n,
                                  const Alphabet& extra = {});

}  // namespace rederiv::oracle
