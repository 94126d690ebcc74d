#include "qcol/quandle.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace qcol {

std::string TableDefect::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::EntryOutOfRange:
            out << "entry out of range at (" << a << "," << b << ")";
            break;
        case Kind::NotIdempotent:
            out << "idempotence fails: " << a << "*" << a << " != " << a;
            break;
        case Kind::ColumnNotBijective:
            out << "right translation by " << a << " not bijective: " << b << "*" << a
                << " == " << c << "*" << a;
            break;
        case Kind::NotSelfDistributive:
            out << "self-distributivity fails at (a,b,c) = (" << a << "," << b << "," << c << ")";
            break;
    }
    return out.str();
}

bool AxiomReport::valid() const noexcept {
    return !out_of_range && !idempotence && !right_translation && !self_distributivity;
}

const TableDefect& AxiomReport::first_defect() const {
    if (out_of_range) return *out_of_range;
    if (idempotence) return *idempotence;
    if (right_translation) return *right_translation;
    if (self_distributivity) return *self_distributivity;
    throw std::logic_error("first_defect on a valid report");
}

QuandleTableError::QuandleTableError(TableDefect defect)
    : std::runtime_error("invalid quandle table: " + defect.describe()), defect_(defect) {}

AxiomReport check_table(const Table& table) {
    AxiomReport report;
    const int n = static_cast<int>(table.size());

    for (int a = 1; a <= n && !report.out_of_range; ++a) {
        if (static_cast<int>(table[a - 1].size()) != n) {
            report.out_of_range = TableDefect{TableDefect::Kind::EntryOutOfRange, a,
                                              static_cast<int>(table[a - 1].size()), 0};
            break;
        }
        for (int b = 1; b <= n; ++b) {
            const int v = table[a - 1][b - 1];
            if (v < 1 || v > n) {
                report.out_of_range = TableDefect{TableDefect::Kind::EntryOutOfRange, a, b, 0};
                break;
            }
        }
    }
    if (report.out_of_range) return report;

    for (int a = 1; a <= n; ++a) {
        if (table[a - 1][a - 1] != a) {
            report.idempotence = TableDefect{TableDefect::Kind::NotIdempotent, a, 0, 0};
            break;
        }
    }

    std::vector<int> first_row(static_cast<std::size_t>(n) + 1);
    for (int a = 1; a <= n && !report.right_translation; ++a) {
        std::fill(first_row.begin(), first_row.end(), 0);
        for (int b = 1; b <= n; ++b) {
            const int v = table[b - 1][a - 1];
            if (first_row[v] != 0) {
                report.right_translation =
                    TableDefect{TableDefect::Kind::ColumnNotBijective, a, first_row[v], b};
                break;
            }
            first_row[v] = b;
        }
    }

    for (int a = 1; a <= n && !report.self_distributivity; ++a) {
        for (int b = 1; b <= n && !report.self_distributivity; ++b) {
            for (int c = 1; c <= n; ++c) {
                const int lhs = table[table[a - 1][b - 1] - 1][c - 1];
                const int rhs = table[table[a - 1][c - 1] - 1][table[b - 1][c - 1] - 1];
                if (lhs != rhs) {
                    report.self_distributivity =
                        TableDefect{TableDefect::Kind::NotSelfDistributive, a, b, c};
                    break;
                }
            }
        }
    }
    return report;
}

FiniteQuandle::FiniteQuandle(int order, std::vector<int> op, std::vector<int> inv)
    : order_(order), op_(std::move(op)), inv_(std::move(inv)) {}

void FiniteQuandle::check_element(int x, const char* what) const {
    if (x < 1 || x > order_) {
        throw std::out_of_range(std::string(what) + " " + std::to_string(x) +
                                " outside 1.." + std::to_string(order_));
    }
}

int FiniteQuandle::op(int x, int y) const {
    check_element(x, "element");
    check_element(y, "element");
    return op_unchecked(x, y);
}

int FiniteQuandle::inv_op(int b, int a) const {
    check_element(b, "element");
    check_element(a, "element");
    return inv_op_unchecked(b, a);
}

namespace {

// Inverts each column permutation: inv(b, a) is the x with op(x, a) == b.
std::vector<int> invert_columns(int n, const std::vector<int>& op) {
    std::vector<int> inv(op.size());
    for (int a = 1; a <= n; ++a) {
        for (int x = 1; x <= n; ++x) {
            const int b = op[static_cast<std::size_t>(x - 1) * n + (a - 1)];
            inv[static_cast<std::size_t>(b - 1) * n + (a - 1)] = x;
        }
    }
    return inv;
}

}  // namespace

FiniteQuandle FiniteQuandle::qn(int order) {
    if (order < 3) throw std::invalid_argument("qn requires order >= 3");
    const int n = order;
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
            int v;
            if (y != n) {
                v = x;
            } else if (x == n) {
                v = n;
            } else if (x == n - 1) {
                v = 1;
            } else {
                v = x + 1;
            }
            op[static_cast<std::size_t>(x - 1) * n + (y - 1)] = v;
        }
    }
    std::vector<int> inv = invert_columns(n, op);
    return FiniteQuandle(n, std::move(op), std::move(inv));
}

FiniteQuandle FiniteQuandle::trivial(int order) {
    if (order < 1) throw std::invalid_argument("trivial quandle requires order >= 1");
    const int n = order;
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) op[static_cast<std::size_t>(x - 1) * n + (y - 1)] = x;
    std::vector<int> inv = op;
    return FiniteQuandle(n, std::move(op), std::move(inv));
}

FiniteQuandle FiniteQuandle::from_table(const Table& table) {
    if (table.empty()) throw std::invalid_argument("empty table");
    const AxiomReport report = check_table(table);
    if (!report.valid()) throw QuandleTableError(report.first_defect());
    const int n = static_cast<int>(table.size());
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            op[static_cast<std::size_t>(x - 1) * n + (y - 1)] = table[x - 1][y - 1];
    std::vector<int> inv = invert_columns(n, op);
    return FiniteQuandle(n, std::move(op), std::move(inv));
}

Table read_table(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::runtime_error("quandle table: missing order line");
    if (n < 1 || n > 4096) throw std::runtime_error("quandle table: implausible order " + std::to_string(n));
    Table table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!(in >> table[x][y])) {
                throw std::runtime_error("quandle table: truncated at row " + std::to_string(x + 1));
            }
        }
    }
    return table;
}

Table load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open quandle file: " + path);
    return read_table(in);
}

FiniteQuandle FiniteQuandle::read(std::istream& in) { return from_table(read_table(in)); }

FiniteQuandle FiniteQuandle::load(const std::string& path) { return from_table(load_table(path)); }

Table FiniteQuandle::table() const {
    Table t(static_cast<std::size_t>(order_), std::vector<int>(static_cast<std::size_t>(order_)));
    for (int x = 1; x <= order_; ++x)
        for (int y = 1; y <= order_; ++y) t[x - 1][y - 1] = op_unchecked(x, y);
    return t;
}

std::string FiniteQuandle::to_table_text() const {
    std::ostringstream out;
    out << order_ << "\n";
    for (int x = 1; x <= order_; ++x) {
        for (int y = 1; y <= order_; ++y) {
            if (y > 1) out << ' ';
            out << op_unchecked(x, y);
        }
        out << '\n';
    }
    return out.str();
}

bool is_homomorphism(const FiniteQuandle& source, const FiniteQuandle& target,
                     std::span<const int> map) {
    if (static_cast<int>(map.size()) != source.order()) {
        throw std::invalid_argument("map size does not match source order");
    }
    for (int v : map) {
        if (v < 1 || v > target.order()) throw std::out_of_range("map value outside target");
    }
    const int n = source.order();
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) {
            const int lhs = map[static_cast<std::size_t>(source.op_unchecked(x, y) - 1)];
            const int rhs = target.op_unchecked(map[static_cast<std::size_t>(x - 1)],
                                                map[static_cast<std::size_t>(y - 1)]);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

int ElementBijection::apply(int x) const {
    if (x < 1 || x > order()) throw std::out_of_range("element outside 1..N");
    return forward[static_cast<std::size_t>(x - 1)];
}

int ElementBijection::apply_inverse(int x) const {
    if (x < 1 || x > order()) throw std::out_of_range("element outside 1..N");
    return backward[static_cast<std::size_t>(x - 1)];
}

ElementBijection shift_automorphism(const FiniteQuandle& q) {
    const int n = q.order();
    if (n < 3 || !(q == FiniteQuandle::qn(n))) {
        throw std::invalid_argument("shift_automorphism requires the qn(N) table");
    }
    ElementBijection f;
    f.forward.resize(static_cast<std::size_t>(n));
    f.backward.resize(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        int y;
        if (x < n - 1) {
            y = x + 1;
        } else if (x == n - 1) {
            y = 1;
        } else {
            y = n;
        }
        f.forward[static_cast<std::size_t>(x - 1)] = y;
        f.backward[static_cast<std::size_t>(y - 1)] = x;
    }
    if (!is_homomorphism(q, q, f.forward) || !is_homomorphism(q, q, f.backward)) {
        throw std::logic_error("shift map failed the homomorphism check");
    }
    return f;
}

}  // namespace qcol
