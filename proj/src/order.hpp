#pragma once

// Monomial orders.  The public surface offers lex and graded reverse lex with
// an explicit variable precedence.  Orders compile monomials into 128-bit
// keys so that order comparison is a single integer comparison: the universe
// is capped at 14 variables with one exponent byte each, which fits next to a
// 16-bit total degree.

#include <cstdint>
#include <vector>

#include "monomial.hpp"
#include "vars.hpp"

namespace conchoid {

using OrderKey = unsigned __int128;

enum class OrderKind { Lex, GrevLex };

class MonomialOrder {
public:
    // Precedence defaults to the ring tuple itself.
    static MonomialOrder lex(const Ring& ring);
    static MonomialOrder grevlex(const Ring& ring);

    // Explicit precedence; `first` lists the most significant variables in
    // order, the rest of the ring follows in tuple order.
    static MonomialOrder lex(const Ring& ring, const std::vector<Var>& first);
    static MonomialOrder grevlex(const Ring& ring, const std::vector<Var>& first);

    OrderKind kind() const { return kind_; }
    const Ring& ring() const { return ring_; }
    const std::vector<int>& precedence() const { return precedence_; }

    OrderKey key(const Monomial& m) const;

    bool greater(const Monomial& p, const Monomial& q) const {
        return key(p) > key(q);
    }

private:
    MonomialOrder(OrderKind kind, Ring ring, std::vector<int> precedence)
        : kind_(kind), ring_(std::move(ring)), precedence_(std::move(precedence)) {}

    static std::vector<int> full_precedence(const Ring& ring,
                                            const std::vector<Var>& first);

    OrderKind kind_;
    Ring ring_;
    std::vector<int> precedence_; // ring indices, most significant first
};

} // namespace conchoid
