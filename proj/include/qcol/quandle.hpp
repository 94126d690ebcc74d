#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcol {

using Table = std::vector<std::vector<int>>;

/// Witness for a bad entry or a failed quandle axiom. Elements are
/// 1-indexed; fields beyond the witness arity are left at 0.
struct TableDefect {
    enum class Kind {
        EntryOutOfRange,      // table(a,b) outside 1..N
        NotIdempotent,        // a*a != a
        ColumnNotBijective,   // column a collides: b*a == c*a with b != c
        NotSelfDistributive,  // (a*b)*c != (a*c)*(b*c) at (a,b,c)
    };
    Kind kind{};
    int a = 0;
    int b = 0;
    int c = 0;

    std::string describe() const;
};

/// Result of checking a candidate table: first witness per failed axiom,
/// scanning in lexicographic element order. Out-of-range entries suppress
/// the axiom checks (the table cannot be indexed safely).
struct AxiomReport {
    std::optional<TableDefect> out_of_range;
    std::optional<TableDefect> idempotence;
    std::optional<TableDefect> right_translation;
    std::optional<TableDefect> self_distributivity;

    bool valid() const noexcept;
    const TableDefect& first_defect() const;  // requires !valid()
};

AxiomReport check_table(const Table& table);

class QuandleTableError : public std::runtime_error {
public:
    explicit QuandleTableError(TableDefect defect);
    const TableDefect& defect() const noexcept { return defect_; }

private:
    TableDefect defect_;
};

/// A finite quandle on elements 1..N: the operation table plus the
/// precomputed inverse table, where inv_op(b, a) is the unique x with
/// x * a = b. Immutable after construction; safe to share across threads.
class FiniteQuandle {
public:
    /// The N-element family where every column but the last acts trivially
    /// and *N cycles 1 -> 2 -> ... -> N-1 -> 1, fixing N. Requires order >= 3.
    static FiniteQuandle qn(int order);

    /// x*y = x for all x, y.
    static FiniteQuandle trivial(int order);

    /// Checks all three axioms; throws QuandleTableError with the first
    /// defect on failure. The inverse table is derived by inverting each
    /// column permutation.
    static FiniteQuandle from_table(const Table& table);

    /// Table file format: first line N, then N rows of N space-separated
    /// entries (row x, column y, entry x*y, 1-indexed).
    static FiniteQuandle read(std::istream& in);
    static FiniteQuandle load(const std::string& path);

    int order() const noexcept { return order_; }

    int op(int x, int y) const;      // x * y
    int inv_op(int b, int a) const;  // the x with x * a = b

    // Unchecked lookups for the enumeration hot path; arguments must be in 1..N.
    int op_unchecked(int x, int y) const noexcept { return op_[idx(x, y)]; }
    int inv_op_unchecked(int b, int a) const noexcept { return inv_[idx(b, a)]; }

    Table table() const;
    std::string to_table_text() const;

    friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;

private:
    FiniteQuandle(int order, std::vector<int> op, std::vector<int> inv);
    std::size_t idx(int x, int y) const noexcept {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(order_) +
               static_cast<std::size_t>(y - 1);
    }
    void check_element(int x, const char* what) const;

    int order_ = 0;
    std::vector<int> op_;
    std::vector<int> inv_;
};

/// Reads a raw table in the file format without validating the axioms.
Table read_table(std::istream& in);
Table load_table(const std::string& path);

/// Exhaustive check that f(x*y) == f(x)*f(y) for all pairs. `map` is
/// 1-indexed: map[x-1] is the image of x in `target`.
bool is_homomorphism(const FiniteQuandle& source, const FiniteQuandle& target,
                     std::span<const int> map);

/// A bijection of quandle elements bundled with its inverse.
struct ElementBijection {
    std::vector<int> forward;   // forward[x-1], values 1..N
    std::vector<int> backward;  // backward[forward[x-1]-1] == x

    int apply(int x) const;
    int apply_inverse(int x) const;
    int order() const noexcept { return static_cast<int>(forward.size()); }
};

/// The automorphism of qn(N) that rotates 1..N-1 by one step and fixes N.
/// Both directions are verified as homomorphisms over all pairs before
/// returning. Requires a quandle structurally equal to qn(q.order()).
ElementBijection shift_automorphism(const FiniteQuandle& q);

}  // namespace qcol
