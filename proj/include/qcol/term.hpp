#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qcol/quandle.hpp"

namespace qcol {

struct Assignment;

/// An element of the free quandle on generators x_1..x_n, as an expression
/// tree with binary nodes for the operation (`*`) and its right inverse
/// (`~`). Nodes are immutable and shared, so copies are O(1) and the braid
/// action can reuse subterms without duplicating them. Traversal and
/// teardown are iterative; trees of 10^5+ nodes are fine.
class Term {
public:
    enum class Kind : std::uint8_t { Generator, Op, InvOp };
    struct Node;  // defined in term.cpp; opaque to clients

    static Term generator(int index);        // x_index, index >= 1
    static Term op(Term lhs, Term rhs);      // lhs * rhs
    static Term inv_op(Term lhs, Term rhs);  // lhs ~ rhs

    Kind kind() const noexcept;
    int generator_index() const;  // requires kind() == Generator
    Term lhs() const;             // requires a binary node
    Term rhs() const;

    /// Structural equality (shared subtrees compare fast by identity).
    friend bool operator==(const Term& a, const Term& b);

private:
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;

    friend std::uint64_t term_size(const Term&);
    friend std::string render(const Term&);
    friend int evaluate(const Term&, const Assignment&, const FiniteQuandle&);
};

/// Generator images c(x_1)..c(x_n) determining a homomorphism from the
/// free quandle of that rank into a finite quandle.
struct Assignment {
    std::vector<int> values;  // values[i-1] = image of x_i, elements 1..N

    int rank() const noexcept { return static_cast<int>(values.size()); }
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Evaluates bottom-up: generators map through the assignment, Op/InvOp
/// through the quandle tables. Pure and reentrant.
int evaluate(const Term& t, const Assignment& a, const FiniteQuandle& q);

/// Node count of the expression tree (shared subtrees counted per occurrence).
std::uint64_t term_size(const Term& t);

/// Fully parenthesized text: term := "x" INT | "(" term "*" term ")"
///                                 | "(" term "~" term ")".
std::string render(const Term& t);

}  // namespace qcol
