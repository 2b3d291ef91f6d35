#pragma once

// Ideals, Gröbner bases, elimination, and exact solution counting for
// zero-dimensional systems.

#include <vector>

#include "order.hpp"
#include "poly.hpp"

namespace conchoid {

// Resource caps for basis computations.  Exhaustion raises BudgetError;
// results are never silently truncated.
struct Budget {
    long max_pairs = 200000; // S-pairs processed per basis computation
    int max_degree = 60;     // total degree of any intermediate polynomial
};

class Ideal {
public:
    // Drops zero generators; an empty or all-zero list yields the zero ideal,
    // represented by the single generator 0.
    static Ideal of(const Ring& ring, std::vector<Poly> generators);

    const Ring& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }

    bool is_zero_ideal() const { return gens_.size() == 1 && gens_[0].is_zero(); }

private:
    Ring ring_;
    std::vector<Poly> gens_;
};

struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    std::vector<Poly> elements; // reduced: monic, interreduced, sorted by
                                // leading monomial, descending
    bool reduced = false;
};

// Reduced Gröbner basis of I; output independent of generator order.
GroebnerBasis groebner(const Ideal& I, const MonomialOrder& order,
                       const Budget& budget = {});

// Complete reduction of p modulo the basis.
Poly normal_form(const Poly& p, const GroebnerBasis& basis);

// Elimination strategy.  `lex_block` runs one basis computation under lex with
// the eliminated variables in front; `staged` removes one variable at a time
// under a per-variable elimination order.  Both finish by reducing the result
// to the unique reduced lex basis over the kept variables, so the returned
// generators are identical either way.
enum class ElimStrategy { lex_block, staged };

// Generators of I ∩ Q[keep] (the reduced lex basis over `keep`); the zero
// ideal is returned as [0].
Ideal eliminate(const Ideal& I, const std::vector<Var>& keep,
                const Budget& budget = {},
                ElimStrategy strategy = ElimStrategy::lex_block);

// Number of distinct solutions of a zero-dimensional ideal over the algebraic
// closure, via adjoining squarefree univariate eliminants (which makes the
// ideal radical) and counting standard monomials.  Throws DimensionError when
// I is not zero-dimensional.
int count_distinct_solutions(const Ideal& I, const Budget& budget = {});

} // namespace conchoid
