#include "qcol/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

namespace qcol {

Presentation chart_t(int k) {
    if (k < 1) throw std::invalid_argument("chart_t requires k >= 1");
    const int rank = 4;
    const std::string deep = "s2^-" + std::to_string(k + 1);
    auto w = [&](const std::string& text) { return parse_braid(text, rank); };

    Presentation p;
    p.rank = rank;
    p.name = "t:" + std::to_string(k);
    p.relations = {
        {w(""), 1, 2},
        {w(deep + " s1 s2^2"), 1, 2},
        {w("s2^-2 s1 s2^2"), 3, 4},
        {w(deep + " s3 s1 s2^2"), 3, 4},
        {w(deep + " s3 s1 s2^2"), 1, 2},
        {w("s2^-2 s3 s2^2"), 1, 2},
        {w(deep + " s3 s2^2"), 3, 4},
        {w(""), 3, 4},
    };
    return p;
}

Presentation chart_t_star(int k) {
    if (k < 1) throw std::invalid_argument("chart_t_star requires k >= 1");
    const int rank = 4;
    const std::string deep = "s2^-" + std::to_string(k + 1);
    auto w = [&](const std::string& text) { return parse_braid(text, rank); };

    // Swapping the two outer strand labels of chart_t(k) swaps s1 <-> s3 in
    // each word and moves each tracked pair to the other generator group.
    Presentation p;
    p.rank = rank;
    p.name = "tstar:" + std::to_string(k);
    p.relations = {
        {w(""), 3, 4},
        {w(deep + " s3 s2^2"), 3, 4},
        {w("s2^-2 s3 s2^2"), 1, 2},
        {w(deep + " s1 s3 s2^2"), 1, 2},
        {w(deep + " s1 s3 s2^2"), 3, 4},
        {w("s2^-2 s1 s2^2"), 3, 4},
        {w(deep + " s1 s2^2"), 1, 2},
        {w(""), 1, 2},
    };
    return p;
}

Presentation chart_t0() {
    const int rank = 4;
    auto w = [&](const std::string& text) { return parse_braid(text, rank); };

    Presentation p;
    p.rank = rank;
    p.name = "t0";
    p.relations = {
        {w(""), 1, 2},
        {w("s1 s2^-1"), 2, 3},
        {w("s2^-1 s3 s1 s2^-1"), 3, 4},
        {w("s2^-1 s3 s1 s2^-1"), 1, 2},
        {w("s3 s2^-1"), 2, 3},
        {w(""), 3, 4},
    };
    return p;
}

namespace {

void check_presentation(const Presentation& p) {
    if (p.rank < 0) throw std::invalid_argument("negative presentation rank");
    for (const Relation& r : p.relations) {
        if (r.word.rank != p.rank) {
            throw std::invalid_argument("relation word rank " + std::to_string(r.word.rank) +
                                        " does not match presentation rank " +
                                        std::to_string(p.rank));
        }
        check_braid_word(r.word);
        if (r.left_gen < 1 || r.left_gen > p.rank || r.right_gen < 1 || r.right_gen > p.rank) {
            throw std::invalid_argument("relation generator pair (" + std::to_string(r.left_gen) +
                                        "," + std::to_string(r.right_gen) + ") outside 1.." +
                                        std::to_string(p.rank));
        }
    }
}

bool relation_holds(const Relation& r, std::span<const int> values, const FiniteQuandle& q,
                    std::vector<int>& scratch) {
    scratch.assign(values.begin(), values.end());
    act_in_place(r.word, scratch, q);
    return scratch[static_cast<std::size_t>(r.left_gen - 1)] ==
           scratch[static_cast<std::size_t>(r.right_gen - 1)];
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) {
            throw std::overflow_error("assignment space too large to enumerate");
        }
        result *= base;
    }
    return result;
}

// Assignment with lexicographic index `index`: x1 is the most significant
// digit, values are 1-based.
std::vector<int> decode_assignment(std::uint64_t index, int rank, int order) {
    std::vector<int> values(static_cast<std::size_t>(rank));
    for (int j = rank - 1; j >= 0; --j) {
        values[static_cast<std::size_t>(j)] = static_cast<int>(index % order) + 1;
        index /= static_cast<std::uint64_t>(order);
    }
    return values;
}

void increment_assignment(std::vector<int>& values, int order) {
    for (std::size_t j = values.size(); j-- > 0;) {
        if (values[j] < order) {
            ++values[j];
            return;
        }
        values[j] = 1;
    }
}

struct ScanResult {
    std::vector<Assignment> colorings;
    std::uint64_t trivial = 0;
};

ScanResult scan_range(const Presentation& p, const FiniteQuandle& q, std::uint64_t lo,
                      std::uint64_t hi) {
    ScanResult result;
    if (lo >= hi) return result;
    std::vector<int> values = decode_assignment(lo, p.rank, q.order());
    std::vector<int> scratch;
    for (std::uint64_t index = lo; index < hi; ++index) {
        bool ok = true;
        for (const Relation& r : p.relations) {
            if (!relation_holds(r, values, q, scratch)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.colorings.push_back(Assignment{values});
            if (std::all_of(values.begin(), values.end(),
                            [&](int v) { return v == values.front(); })) {
                ++result.trivial;
            }
        }
        increment_assignment(values, q.order());
    }
    return result;
}

}  // namespace

bool check_relation(const Relation& r, const Assignment& a, const FiniteQuandle& q) {
    if (a.rank() != r.word.rank) {
        throw std::invalid_argument("assignment rank does not match relation word rank");
    }
    check_braid_word(r.word);
    if (r.left_gen < 1 || r.left_gen > a.rank() || r.right_gen < 1 || r.right_gen > a.rank()) {
        throw std::invalid_argument("relation generator pair outside assignment rank");
    }
    for (int v : a.values) {
        if (v < 1 || v > q.order()) throw std::out_of_range("assignment value outside quandle");
    }
    std::vector<int> scratch;
    return relation_holds(r, a.values, q, scratch);
}

ColoringReport count_colorings(const Presentation& p, const FiniteQuandle& q, int workers) {
    check_presentation(p);
    const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q.order()), p.rank);

    std::uint64_t nworkers = workers < 1 ? 1 : static_cast<std::uint64_t>(workers);
    nworkers = std::min<std::uint64_t>(nworkers, std::max<std::uint64_t>(total, 1));

    std::vector<ScanResult> parts(nworkers);
    if (nworkers == 1) {
        parts[0] = scan_range(p, q, 0, total);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nworkers);
        pool.reserve(nworkers);
        const std::uint64_t chunk = total / nworkers;
        const std::uint64_t remainder = total % nworkers;
        std::uint64_t lo = 0;
        for (std::uint64_t w = 0; w < nworkers; ++w) {
            const std::uint64_t hi = lo + chunk + (w < remainder ? 1 : 0);
            pool.emplace_back([&, lo, hi, w] {
                try {
                    parts[w] = scan_range(p, q, lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
            lo = hi;
        }
        for (auto& t : pool) t.join();
        for (const std::exception_ptr& error : errors) {
            if (error) std::rethrow_exception(error);
        }
    }

    ColoringReport report;
    for (auto& part : parts) {
        report.trivial_count += part.trivial;
        report.colorings.insert(report.colorings.end(),
                                std::make_move_iterator(part.colorings.begin()),
                                std::make_move_iterator(part.colorings.end()));
    }
    report.count = report.colorings.size();
    return report;
}

std::set<std::pair<int, int>> coloring_profile(const Presentation& p, const FiniteQuandle& q,
                                               int workers) {
    if (p.rank != 4) throw std::invalid_argument("coloring_profile requires rank 4");
    const ColoringReport report = count_colorings(p, q, workers);
    std::set<std::pair<int, int>> pairs;
    for (const Assignment& a : report.colorings) {
        const auto& v = a.values;
        if (v[0] != v[1] || v[2] != v[3]) {
            throw ColoringProfileError("coloring (" + std::to_string(v[0]) + "," +
                                       std::to_string(v[1]) + "," + std::to_string(v[2]) + "," +
                                       std::to_string(v[3]) +
                                       ") violates the x1=x2, x3=x4 identities");
        }
        pairs.emplace(v[0], v[2]);
    }
    return pairs;
}

PresentationParseError::PresentationParseError(int line, const std::string& what)
    : std::runtime_error("presentation line " + std::to_string(line) + ": " + what),
      line_(line) {}

Presentation read_presentation(std::istream& in, std::string name) {
    Presentation p;
    p.name = std::move(name);
    bool have_rank = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;  // blank line

        if (!have_rank) {
            if (keyword != "rank") throw PresentationParseError(line_no, "expected 'rank <n>'");
            if (!(fields >> p.rank) || p.rank < 1) {
                throw PresentationParseError(line_no, "bad rank value");
            }
            std::string extra;
            if (fields >> extra) throw PresentationParseError(line_no, "trailing text after rank");
            have_rank = true;
            continue;
        }

        if (keyword != "rel") {
            throw PresentationParseError(line_no, "expected 'rel <a> <b> : <braid text>'");
        }
        Relation r;
        std::string colon;
        if (!(fields >> r.left_gen >> r.right_gen >> colon) || colon != ":") {
            throw PresentationParseError(line_no, "expected 'rel <a> <b> : <braid text>'");
        }
        if (r.left_gen < 1 || r.left_gen > p.rank || r.right_gen < 1 || r.right_gen > p.rank) {
            throw PresentationParseError(line_no, "generator index outside 1.." +
                                                      std::to_string(p.rank));
        }
        std::string word_text;
        std::getline(fields, word_text);
        try {
            r.word = parse_braid(word_text, p.rank);
        } catch (const BraidParseError& e) {
            throw PresentationParseError(line_no, e.what());
        }
        p.relations.push_back(std::move(r));
    }
    if (!have_rank) throw PresentationParseError(line_no, "missing 'rank <n>' line");
    return p;
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file: " + path);
    return read_presentation(in, "file:" + path);
}

std::string presentation_to_text(const Presentation& p) {
    std::ostringstream out;
    out << "rank " << p.rank << "\n";
    for (const Relation& r : p.relations) {
        out << "rel " << r.left_gen << " " << r.right_gen << " :";
        const std::string word = braid_to_text(r.word);
        if (!word.empty()) out << ' ' << word;
        out << '\n';
    }
    return out.str();
}

}  // namespace qcol
