#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcol/quandle.hpp"
#include "qcol/term.hpp"

namespace qcol {

struct BraidLetter {
    int index = 0;  // Artin generator index, 1..rank-1
    int sign = 0;   // +1 or -1

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A braid word in the group on `rank` strands, letters in written order
/// (leftmost letter first). No normalization is ever applied.
struct BraidWord {
    int rank = 0;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

class BraidParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grammar: word := atom*, atom := "s" INT ("^" SIGNED_INT)?, atoms
/// whitespace-separated. An exponent e expands to |e| letters with sign(e);
/// e = 0 contributes nothing. Empty text is the trivial word.
BraidWord parse_braid(std::string_view text, int rank);

/// Throws std::invalid_argument unless every letter has index 1..rank-1 and
/// sign +-1. Words from parse_braid always pass; hand-built ones may not.
void check_braid_word(const BraidWord& word);

/// Compact s-notation with consecutive equal letters folded into exponents;
/// parse_braid(braid_to_text(w), w.rank) == w. The trivial word renders "".
std::string braid_to_text(const BraidWord& word);

/// The tuple of free-quandle terms a word sends the generators to.
struct GeneratorImage {
    int rank = 0;
    std::vector<Term> terms;  // terms[i-1] = image of x_i
};

/// Computes the generator images of the free-quandle isomorphism induced by
/// a braid word. Starting from the identity tuple (x_1..x_n), letters are
/// consumed RIGHT-TO-LEFT (the recursion extends an existing word by a new
/// leftmost letter). For the current tuple (a_1..a_n):
///
///   s_i   : x_i -> a_{i+1} ~ a_i,  x_{i+1} -> a_i
///   s_i^-1: x_i -> a_{i+1},        x_{i+1} -> a_i * a_{i+1}
///
/// with all other positions unchanged.
GeneratorImage act(const BraidWord& word);

/// Same recursion threaded through concrete elements instead of term trees;
/// equals evaluate(act(word).terms[j], a, q) elementwise.
std::vector<int> act_evaluated(const BraidWord& word, const Assignment& a,
                               const FiniteQuandle& q);

/// In-place core of act_evaluated. `values` must have word.rank entries,
/// each already inside 1..q.order(); no checks are performed.
void act_in_place(const BraidWord& word, std::span<int> values, const FiniteQuandle& q);

}  // namespace qcol
