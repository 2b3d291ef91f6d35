#pragma once

// Factorization over Q of univariate and bivariate polynomials, splitting
// conchoids and detection loci into their irreducible components.

#include <utility>
#include <vector>

#include "poly.hpp"

namespace conchoid {

struct Factorization {
    Rational unit;
    // Irreducible over Q, normalized, pairwise non-associate, sorted by
    // compare_polys; unit * product(factor^multiplicity) == input exactly.
    std::vector<std::pair<Poly, int>> factors;
};

Factorization factor_univariate(const Poly& p);

// Handles any multiplicity structure; also accepts inputs that turn out to be
// univariate.  Each irreducible factor is double-checked by rerunning the
// squarefree factorization from an independent evaluation point.
Factorization factor_bivariate(const Poly& p);

// Dispatch on the number of variables used (one or two).
Factorization factor(const Poly& p);

// Squarefree bivariate factorization seeded past the first `seq_offset` good
// evaluation points; exposed for cross-checking evaluation independence.
std::vector<Poly> factor_squarefree_bivariate(const Poly& p, int seq_offset);

} // namespace conchoid
