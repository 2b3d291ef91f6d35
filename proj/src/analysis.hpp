#pragma once

// Component extraction and Simple/Special classification of conchoid
// components, conchoid-of-conchoid distance relations, and verification of
// birational maps between a curve and its conchoid components.

#include <optional>
#include <vector>

#include "conchoid.hpp"

namespace conchoid {

enum class Classification { Undetermined, Simple, Special };

const char* classification_name(Classification c);

struct Component {
    Curve curve;
    Classification classification = Classification::Undetermined;
    // The conchoid of this component from the same focus and distance,
    // computed by classify; Special means its hypersurface reproduces the
    // base curve.
    std::optional<ConchoidResult> witness;
};

// Q-irreducible factors of the hypersurface, classification not yet
// determined.  More than two components is geometrically unexpected; callers
// surface that as a warning, not an error.
std::vector<Component> components(const ConchoidResult& R);

// Authoritative classification: M is special exactly when the conchoid of M
// reproduces the base curve.  M must not be a circle centered at the focus.
Component classify(const Component& M, const Curve& base, const Focus& A,
                   const Rational& d, const Budget& budget = {});

// Number of distinct base points generating each of several exactly-sampled
// points of M.  Samples are transported from rational points of the base
// along rational-norm directions through the focus; throws when too few exact
// sample points exist.
std::vector<int> fiber_cardinalities(const Curve& M, const Curve& base, const Focus& A,
                                     const Rational& d, int samples = 5,
                                     const Budget& budget = {});

// Experimental cross-check of classify: Simple when every sampled fiber has
// one point, Special when every fiber has more; mixed counts are an error.
Classification classify_by_fibers(const Curve& M, const Curve& base, const Focus& A,
                                  const Rational& d, int samples = 5,
                                  const Budget& budget = {});

// Every component of the conchoid-of-a-conchoid-component at distance d2 must
// divide the product of the base conchoids at distances d+d2 and d-d2.
// Requires d^2 != d2^2.
bool conchoid_sum_check(const Curve& base, const Focus& A, const Rational& d,
                        const Rational& d2, const Budget& budget = {});

struct RationalFunction {
    Poly num, den;
};

// The pair (first, second) maps points of source to points of target; the
// functions are written in the source curve's variables.
struct RationalMap {
    RationalFunction first, second;
    Curve source, target;
};

// True iff the map carries the source curve into the target curve: the target
// equation composed with the map vanishes modulo the source ideal.
// Denominators must not vanish identically on the source.
bool verify_rational_map(const RationalMap& phi, const Budget& budget = {});

// Additionally checks that psi inverts phi on phi's source: both compositions
// of coordinates reduce to the identity modulo the source ideal, with the
// composed denominators certified nonvanishing on the source.
bool verify_rational_pair(const RationalMap& phi, const RationalMap& psi,
                          const Budget& budget = {});

} // namespace conchoid
