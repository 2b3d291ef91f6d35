#pragma once

// The inverse problem: given a curve, locate candidate foci, recover the
// candidate base curves visible from a chosen focus, and solve for the
// admissible distances, confirming every hit by a forward conchoid
// computation.

#include <vector>

#include "conchoid.hpp"

namespace conchoid {

// Zero set of the generators (polynomials in a, b) contains every focus from
// which the curve has a special conchoid component.  An empty generator list
// means the locus is the whole plane.
struct FocusLocus {
    std::vector<Poly> generators;
};

FocusLocus focus_locus(const Curve& D, const Budget& budget = {});

// Curves that can appear as special components of a conchoid of D from A;
// factors of the hypersurface part of the specialized detection system.
std::vector<Curve> candidate_bases(const Curve& D, const Focus& A,
                                   const Budget& budget = {});

// Nonzero rational distances d with conchoid(base, A, d) = D, found by
// matching D against the generic conchoid of the base and confirmed by
// specialization; sorted descending.  When every distance matches identically
// (a line through the focus) throws MatchingFamilyError.  When the matching
// polynomial also has non-rational real roots, *irrational_candidates is set.
std::vector<Rational> solve_distances(const Curve& D, const Focus& A, const Curve& base,
                                      const Budget& budget = {},
                                      bool* irrational_candidates = nullptr);

struct Candidate {
    Curve base;
    std::vector<Rational> distances; // forward-verified, descending
    bool verified = false;
    bool identically_matching = false; // conchoid(base, A, d) = D for every d
    bool irrational_candidates = false;
};

struct DetectionReport {
    Curve input;
    Focus focus;
    std::vector<Curve> h_components;
    std::vector<Candidate> candidates; // one per component, same order
};

// Full pipeline: candidate bases, distance solving, and independent forward
// verification of every candidate distance.
DetectionReport detect(const Curve& D, const Focus& A, const Budget& budget = {});

} // namespace conchoid
