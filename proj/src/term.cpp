#include "qcol/term.hpp"

#include <unordered_map>

namespace qcol {

struct Term::Node {
    Kind kind;
    int gen;  // generator index when kind == Generator
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Term::Node>;

// Deleter that dismantles long chains with an explicit worklist instead of
// letting shared_ptr destructors recurse through them.
void dispose(const Term::Node* node) {
    std::vector<NodePtr> pending;
    auto scavenge = [&pending](NodePtr& child) {
        if (child && child.use_count() == 1) {
            pending.push_back(std::move(child));
        }
        child.reset();
    };
    auto detach = [&scavenge](const Term::Node* n) {
        auto* m = const_cast<Term::Node*>(n);
        scavenge(m->lhs);
        scavenge(m->rhs);
    };
    detach(node);
    delete node;
    while (!pending.empty()) {
        NodePtr next = std::move(pending.back());
        pending.pop_back();
        detach(next.get());
        // `next` dies here with its children already detached.
    }
}

NodePtr make_node(Term::Kind kind, int gen, NodePtr lhs, NodePtr rhs) {
    return NodePtr(new Term::Node{kind, gen, std::move(lhs), std::move(rhs)}, &dispose);
}

}  // namespace

Term Term::generator(int index) {
    if (index < 1) throw std::invalid_argument("generator index must be >= 1");
    return Term(make_node(Kind::Generator, index, nullptr, nullptr));
}

Term Term::op(Term lhs, Term rhs) {
    return Term(make_node(Kind::Op, 0, std::move(lhs.node_), std::move(rhs.node_)));
}

Term Term::inv_op(Term lhs, Term rhs) {
    return Term(make_node(Kind::InvOp, 0, std::move(lhs.node_), std::move(rhs.node_)));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

int Term::generator_index() const {
    if (node_->kind != Kind::Generator) throw std::logic_error("not a generator node");
    return node_->gen;
}

Term Term::lhs() const {
    if (node_->kind == Kind::Generator) throw std::logic_error("generator node has no children");
    return Term(node_->lhs);
}

Term Term::rhs() const {
    if (node_->kind == Kind::Generator) throw std::logic_error("generator node has no children");
    return Term(node_->rhs);
}

bool operator==(const Term& a, const Term& b) {
    using Node = Term::Node;
    std::vector<std::pair<const Node*, const Node*>> stack{{a.node_.get(), b.node_.get()}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (x == y) continue;  // shared subtree
        if (x->kind != y->kind) return false;
        if (x->kind == Term::Kind::Generator) {
            if (x->gen != y->gen) return false;
            continue;
        }
        stack.emplace_back(x->lhs.get(), y->lhs.get());
        stack.emplace_back(x->rhs.get(), y->rhs.get());
    }
    return true;
}

int evaluate(const Term& t, const Assignment& a, const FiniteQuandle& q) {
    for (int v : a.values) {
        if (v < 1 || v > q.order()) throw std::out_of_range("assignment value outside quandle");
    }
    using Node = Term::Node;
    // Post-order over the node DAG with memoized values, so shared subterms
    // are evaluated once and depth is bounded only by heap.
    std::unordered_map<const Node*, int> value;
    std::vector<const Node*> stack{t.node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        if (value.count(n)) {
            stack.pop_back();
            continue;
        }
        if (n->kind == Term::Kind::Generator) {
            if (n->gen > a.rank()) {
                throw std::out_of_range("term generator index " + std::to_string(n->gen) +
                                        " exceeds assignment rank " + std::to_string(a.rank()));
            }
            value[n] = a.values[static_cast<std::size_t>(n->gen - 1)];
            stack.pop_back();
            continue;
        }
        const auto l = value.find(n->lhs.get());
        const auto r = value.find(n->rhs.get());
        if (l != value.end() && r != value.end()) {
            value[n] = n->kind == Term::Kind::Op ? q.op_unchecked(l->second, r->second)
                                                 : q.inv_op_unchecked(l->second, r->second);
            stack.pop_back();
        } else {
            if (r == value.end()) stack.push_back(n->rhs.get());
            if (l == value.end()) stack.push_back(n->lhs.get());
        }
    }
    return value[t.node_.get()];
}

std::uint64_t term_size(const Term& t) {
    using Node = Term::Node;
    std::unordered_map<const Node*, std::uint64_t> size;
    std::vector<const Node*> stack{t.node_.get()};
    while (!stack.empty()) {
        const Node* n = stack.back();
        if (size.count(n)) {
            stack.pop_back();
            continue;
        }
        if (n->kind == Term::Kind::Generator) {
            size[n] = 1;
            stack.pop_back();
            continue;
        }
        const auto l = size.find(n->lhs.get());
        const auto r = size.find(n->rhs.get());
        if (l != size.end() && r != size.end()) {
            size[n] = 1 + l->second + r->second;
            stack.pop_back();
        } else {
            if (r == size.end()) stack.push_back(n->rhs.get());
            if (l == size.end()) stack.push_back(n->lhs.get());
        }
    }
    return size[t.node_.get()];
}

std::string render(const Term& t) {
    using Node = Term::Node;
    std::string out;
    // Pre-order emission; literal tokens are interleaved via null-node items.
    struct Item {
        const Node* node;
        char literal;
    };
    std::vector<Item> stack{{t.node_.get(), 0}};
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        if (item.node == nullptr) {
            out += item.literal;
            continue;
        }
        const Node* n = item.node;
        if (n->kind == Term::Kind::Generator) {
            out += 'x';
            out += std::to_string(n->gen);
            continue;
        }
        out += '(';
        stack.push_back({nullptr, ')'});
        stack.push_back({n->rhs.get(), 0});
        stack.push_back({nullptr, n->kind == Term::Kind::Op ? '*' : '~'});
        stack.push_back({n->lhs.get(), 0});
    }
    return out;
}

}  // namespace qcol
