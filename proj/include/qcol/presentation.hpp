#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qcol/braid.hpp"

namespace qcol {

/// One defining relation of a presented quandle: the images of two
/// generators under a braid word coincide. The built-in charts always pair
/// adjacent generators, but any pair is allowed.
struct Relation {
    BraidWord word;
    int left_gen = 0;   // 1-indexed
    int right_gen = 0;

    friend bool operator==(const Relation&, const Relation&) = default;
};

struct Presentation {
    int rank = 0;
    std::vector<Relation> relations;
    std::string name;  // label only; not part of the structure
};

struct ColoringReport {
    std::uint64_t count = 0;
    std::uint64_t trivial_count = 0;        // constant assignments among the colorings
    std::vector<Assignment> colorings;      // lexicographic, x1 varying slowest
};

/// The rank-4 presentation family with two branch-point groups joined
/// through a tangle of 2k+2 crossings on the middle strand pair; k >= 1.
Presentation chart_t(int k);

/// The mirror-labelled variant of chart_t(k); k >= 1. Presents an
/// isomorphic quandle (the relation multiset coincides with chart_t(k)'s).
Presentation chart_t_star(int k);

/// The rank-4 presentation with six relations and two crossings.
Presentation chart_t0();

/// True iff the two tracked generator images agree after the word acts.
bool check_relation(const Relation& r, const Assignment& a, const FiniteQuandle& q);

/// Enumerates all |Q|^rank assignments and keeps those satisfying every
/// relation. Deterministic: the report is identical for any worker count.
ColoringReport count_colorings(const Presentation& p, const FiniteQuandle& q, int workers = 1);

class ColoringProfileError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The set of (value of the x1-group, value of the x3-group) pairs realized
/// by colorings. Requires rank 4; throws ColoringProfileError if any
/// coloring violates x1 == x2 or x3 == x4 (that would mean the relation
/// encoding is broken, since the built-in charts force both identities).
std::set<std::pair<int, int>> coloring_profile(const Presentation& p, const FiniteQuandle& q,
                                               int workers = 1);

class PresentationParseError : public std::runtime_error {
public:
    PresentationParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Text format:
///   line 1:  rank <n>
///   then     rel <a> <b> : <braid text>     (one per relation; empty braid
///                                            text denotes the trivial word)
/// Blank lines are ignored.
Presentation read_presentation(std::istream& in, std::string name = "");
Presentation load_presentation(const std::string& path);
std::string presentation_to_text(const Presentation& p);

}  // namespace qcol
