#pragma once

// Conchoid construction: the incidence variety of a base curve, focus, and
// distance, and its projection (elimination) onto the conchoid curve.

#include <vector>

#include "groebner.hpp"

namespace conchoid {

// A plane algebraic curve.  The defining polynomial is stored normalized and
// squarefree, over the coordinate pair it was written in: (x1,x2), (y1,y2),
// or (z1,z2).  Bases of conchoid constructions conventionally live in
// (y1,y2) and conchoids in (x1,x2); `base_form`/`xy_form` convert.
class Curve {
public:
    explicit Curve(const Poly& defining, bool irreducible_over_q = false);

    const Poly& defining() const { return defining_; }
    const Ring& ring() const { return defining_.ring(); }

    // True only when irreducibility over Q has been established by the caller
    // (typically by factoring); never guessed.
    bool irreducible_over_q() const { return irreducible_over_q_; }

    Poly base_form() const; // over (y1, y2)
    Poly xy_form() const;   // over (x1, x2)

    bool operator==(const Curve& o) const { return defining_ == o.defining_; }

private:
    Poly defining_;
    bool irreducible_over_q_ = false;
};

struct Focus {
    Rational a, b;
};

// A conchoid distance: an exact nonzero rational, or the symbolic distance
// variable for the generic construction.
class Distance {
public:
    static Distance numeric(const Rational& value);
    static Distance symbolic();

    bool is_symbolic() const { return symbolic_; }
    const Rational& value() const;

private:
    Distance() = default;
    bool symbolic_ = true;
    Rational value_;
};

// The incidence system: base equation, distance circle, collinearity, and the
// inverted-norm equation that excludes points isotropic relative to the focus.
struct IncidenceSystem {
    Ideal ideal;   // over (w, y1, y2, x1, x2) or (w, y1, y2, x1, x2, d)
    Curve base;    // in (y1, y2)
    Focus focus;
    Distance distance;
};

bool is_circle_centered_at_focus(const Curve& c, const Focus& A, const Rational& d);

// Rejects bases whose non-isotropic part relative to A is empty (the base is
// a union of isotropic lines through A), detected by normal-form membership.
IncidenceSystem build_incidence(const Curve& c, const Focus& A, const Distance& d,
                                const Budget& budget = {});

struct ConchoidResult {
    Curve base;  // in (y1, y2)
    Focus focus;
    Distance distance;
    // Hypersurface part of the projection: normalized, squarefree, over
    // (x1,x2), or (x1,x2,d) for the generic construction.
    Poly hypersurface;
    // Quotients of the elimination ideal's generators by their full gcd;
    // nonempty exactly when that ideal is not principal.  They cut out the
    // lower-dimensional part of the projection closure.
    std::vector<Poly> residual_generators;
    // Base is the circle centered at the focus with radius equal to the
    // distance; the projection degenerates to {focus} plus the doubled
    // circle, and the result has been checked to match that shape.
    bool degenerate_circle_case = false;
};

ConchoidResult compute_conchoid(const Curve& c, const Focus& A, const Rational& d,
                                const Budget& budget = {});

// Distance kept symbolic; specializing the result at d = d0 recovers the
// numeric conchoid for all but finitely many d0.
ConchoidResult compute_generic_conchoid(const Curve& c, const Focus& A,
                                        const Budget& budget = {});

} // namespace conchoid
