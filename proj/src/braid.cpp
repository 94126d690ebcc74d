#include "qcol/braid.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace qcol {

namespace {

constexpr long kMaxExponent = 1'000'000;  // expansion guard for hostile input

long parse_int(std::string_view text, std::string_view token) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw BraidParseError("malformed braid atom '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int rank) {
    if (rank < 1) throw std::invalid_argument("braid rank must be >= 1");
    BraidWord word;
    word.rank = rank;

    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        pos = end;

        if (token.size() < 2 || token[0] != 's') {
            throw BraidParseError("malformed braid atom '" + std::string(token) + "'");
        }
        const std::size_t caret = token.find('^');
        const std::string_view index_text =
            token.substr(1, caret == std::string_view::npos ? token.size() - 1 : caret - 1);
        const long index = parse_int(index_text, token);
        if (index < 1 || index > rank - 1) {
            throw BraidParseError("generator index " + std::to_string(index) +
                                  " outside 1.." + std::to_string(rank - 1));
        }
        long exponent = 1;
        if (caret != std::string_view::npos) {
            if (caret + 1 >= token.size()) {
                throw BraidParseError("malformed braid atom '" + std::string(token) + "'");
            }
            exponent = parse_int(token.substr(caret + 1), token);
            if (exponent > kMaxExponent || exponent < -kMaxExponent) {
                throw BraidParseError("exponent too large in '" + std::string(token) + "'");
            }
        }
        const int sign = exponent >= 0 ? 1 : -1;
        for (long i = 0; i < std::labs(exponent); ++i) {
            word.letters.push_back({static_cast<int>(index), sign});
        }
    }
    return word;
}

std::string braid_to_text(const BraidWord& word) {
    std::string out;
    std::size_t i = 0;
    while (i < word.letters.size()) {
        const BraidLetter letter = word.letters[i];
        std::size_t run = 1;
        while (i + run < word.letters.size() && word.letters[i + run] == letter) ++run;
        i += run;
        if (!out.empty()) out += ' ';
        out += 's';
        out += std::to_string(letter.index);
        const long exponent = static_cast<long>(run) * letter.sign;
        if (exponent != 1) {
            out += '^';
            out += std::to_string(exponent);
        }
    }
    return out;
}

void check_braid_word(const BraidWord& word) {
    if (word.rank < 0) throw std::invalid_argument("negative braid rank");
    for (const BraidLetter& letter : word.letters) {
        if (letter.index < 1 || letter.index > word.rank - 1) {
            throw std::invalid_argument("braid letter index " + std::to_string(letter.index) +
                                        " outside 1.." + std::to_string(word.rank - 1));
        }
        if (letter.sign != 1 && letter.sign != -1) {
            throw std::invalid_argument("braid letter sign must be +1 or -1");
        }
    }
}

GeneratorImage act(const BraidWord& word) {
    check_braid_word(word);
    GeneratorImage image;
    image.rank = word.rank;
    image.terms.reserve(static_cast<std::size_t>(word.rank));
    for (int j = 1; j <= word.rank; ++j) image.terms.push_back(Term::generator(j));

    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const std::size_t i = static_cast<std::size_t>(it->index - 1);  // slots i, i+1
        Term a_i = image.terms[i];
        Term a_next = image.terms[i + 1];
        if (it->sign > 0) {
            image.terms[i] = Term::inv_op(std::move(a_next), a_i);
            image.terms[i + 1] = std::move(a_i);
        } else {
            image.terms[i] = a_next;
            image.terms[i + 1] = Term::op(std::move(a_i), std::move(a_next));
        }
    }
    return image;
}

void act_in_place(const BraidWord& word, std::span<int> values, const FiniteQuandle& q) {
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const std::size_t i = static_cast<std::size_t>(it->index - 1);
        const int a_i = values[i];
        const int a_next = values[i + 1];
        if (it->sign > 0) {
            values[i] = q.inv_op_unchecked(a_next, a_i);
            values[i + 1] = a_i;
        } else {
            values[i] = a_next;
            values[i + 1] = q.op_unchecked(a_i, a_next);
        }
    }
}

std::vector<int> act_evaluated(const BraidWord& word, const Assignment& a,
                               const FiniteQuandle& q) {
    if (a.rank() != word.rank) {
        throw std::invalid_argument("assignment rank " + std::to_string(a.rank()) +
                                    " does not match braid rank " + std::to_string(word.rank));
    }
    check_braid_word(word);
    for (int v : a.values) {
        if (v < 1 || v > q.order()) throw std::out_of_range("assignment value outside quandle");
    }
    std::vector<int> values = a.values;
    act_in_place(word, values, q);
    return values;
}

}  // namespace qcol
