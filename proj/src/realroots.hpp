#pragma once

// Exact real-root counting and isolation for univariate polynomials over Q,
// by Sturm's theorem.

#include <utility>
#include <vector>

#include "poly.hpp"

namespace conchoid {

// Sturm sequence of the squarefree part of a univariate polynomial; answers
// sign-change queries, which bound distinct real roots in intervals.
class SturmSequence {
public:
    // p must be univariate in v and nonzero.
    SturmSequence(const Poly& p, Var v);

    int degree() const { return static_cast<int>(chain_.front().size()) - 1; }

    // Distinct real roots in the half-open interval (lo, hi].
    int count_in(const Rational& lo, const Rational& hi) const;
    // Distinct real roots on the whole line.
    int count_all() const;

    // All distinct real roots, each bracketed in an interval of width at most
    // `width`, returned as (lo, hi) pairs in increasing order with exactly one
    // root per interval.  Exact rational roots may appear as lo == hi.
    std::vector<std::pair<Rational, Rational>> isolate(const Rational& width) const;

private:
    std::vector<std::vector<Rational>> chain_; // dense coefficients, low to high

    int sign_changes_at(const Rational& x) const;
    int sign_changes_at_infinity(int direction) const;
    // A bound B with all real roots in (-B, B).
    Rational root_bound() const;
};

// Distinct real roots of a univariate polynomial (0 for constants).
int count_real_roots(const Poly& p, Var v);

} // namespace conchoid
