#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qcol/braid.hpp"
#include "qcol/quandle.hpp"
#include "qcol/term.hpp"

namespace qcol::testing {

inline int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline BraidWord random_word(std::mt19937& rng, int rank, int max_len) {
    BraidWord w;
    w.rank = rank;
    const int len = pick(rng, 0, max_len);
    for (int i = 0; i < len; ++i) {
        w.letters.push_back({pick(rng, 1, rank - 1), pick(rng, 0, 1) ? 1 : -1});
    }
    return w;
}

inline BraidWord inverse_word(const BraidWord& w) {
    BraidWord inv;
    inv.rank = w.rank;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        inv.letters.push_back({it->index, -it->sign});
    }
    return inv;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

inline Assignment random_assignment(std::mt19937& rng, int rank, int order) {
    Assignment a;
    for (int i = 0; i < rank; ++i) a.values.push_back(pick(rng, 1, order));
    return a;
}

inline Term random_term(std::mt19937& rng, int rank, int budget) {
    if (budget <= 1 || pick(rng, 0, 3) == 0) {
        return Term::generator(pick(rng, 1, rank));
    }
    const int left = pick(rng, 1, budget - 1);
    Term lhs = random_term(rng, rank, left);
    Term rhs = random_term(rng, rank, budget - left);
    return pick(rng, 0, 1) ? Term::op(std::move(lhs), std::move(rhs))
                           : Term::inv_op(std::move(lhs), std::move(rhs));
}

// -- small quandle families for "random validated quandle" tests ------------

inline Table trivial_table(int n) {
    Table t(n, std::vector<int>(n));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) t[x - 1][y - 1] = x;
    return t;
}

// Z_n with x*y = 2y - x (mod n).
inline Table dihedral_table(int n) {
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n + 1;
    return t;
}

// Z_n with x*y = t*x + (1-t)*y (mod n), gcd(t, n) = 1.
inline Table alexander_table(int n, int unit) {
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = ((unit * x + (1 - unit) * y) % n + n) % n + 1;
    return t;
}

// The symmetric group on 3 points under conjugation: g*h = h^-1 g h.
inline Table conjugation_s3_table() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i) {
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        }
        return -1;
    };
    Table t(6, std::vector<int>(6));
    for (int g = 0; g < 6; ++g) {
        for (int h = 0; h < 6; ++h) {
            int hinv[3];
            for (int i = 0; i < 3; ++i) hinv[perms[h][i]] = i;
            int out[3];  // h^-1 g h pointwise
            for (int i = 0; i < 3; ++i) out[i] = hinv[perms[g][perms[h][i]]];
            t[g][h] = find(out) + 1;
        }
    }
    return t;
}

inline FiniteQuandle random_validated_quandle(std::mt19937& rng) {
    switch (pick(rng, 0, 4)) {
        case 0:
            return FiniteQuandle::from_table(trivial_table(pick(rng, 1, 7)));
        case 1:
            return FiniteQuandle::from_table(dihedral_table(pick(rng, 2, 8)));
        case 2: {
            const int n = pick(rng, 3, 9);
            int unit = pick(rng, 1, n - 1);
            while (std::gcd(unit, n) != 1) unit = pick(rng, 1, n - 1);
            return FiniteQuandle::from_table(alexander_table(n, unit));
        }
        case 3:
            return FiniteQuandle::from_table(conjugation_s3_table());
        default:
            return FiniteQuandle::qn(pick(rng, 3, 7));
    }
}

}  // namespace qcol::testing
