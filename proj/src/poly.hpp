#pragma once

// Sparse multivariate polynomials over the rationals.
//
// A Poly is a value: an ordered term array over one Ring, sorted descending
// by the ring's canonical lexicographic order, with no zero coefficients.
// Binary arithmetic requires both operands to live over the same ring and
// throws RingError otherwise.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "vars.hpp"

namespace conchoid {

struct Term {
    Monomial mono;
    Rational coef;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}

    static Poly zero(const Ring& ring) { return Poly(ring); }
    static Poly constant(const Ring& ring, const Rational& c);
    static Poly variable(const Ring& ring, Var v, int exp = 1);

    // Builds from unsorted, possibly repeated terms; merges and drops zeros.
    static Poly from_terms(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }
    // The constant value of a constant polynomial.
    Rational constant_value() const;

    // Leading data under the canonical ring order; requires a nonzero value.
    const Term& leading_term() const;

    int total_degree() const; // degree of 0 reported as -1
    int degree_in(Var v) const;
    bool uses(Var v) const { return degree_in(v) > 0; }
    std::vector<Var> used_vars() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const; // c * p
    Poly pow(int k) const;                // k >= 0

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Partial evaluation.  Assigned variables must belong to the ring; the
    // result lives over the ring with the assigned variables removed.
    Poly evaluate(const std::map<Var, Rational>& assignment) const;

    // Simultaneous substitution var -> polynomial over `target`; variables
    // without an image must exist in `target` and map to themselves.
    Poly substitute(const std::map<Var, Poly>& images, const Ring& target) const;

    Poly derivative(Var v) const;

    // Renames variables (injective on the used set); result over `target`.
    Poly renamed(const std::map<Var, Var>& names, const Ring& target) const;

    // Reinterprets over a different ring; every used variable must exist in
    // the target ring.
    Poly over(const Ring& target) const;

    std::string to_string() const;

    // Parses the expression grammar
    //   expr := ['-'] term (('+'|'-') term)*
    //   term := coeff ('*'? atom)* | atom ('*'? atom)*
    //   atom := var ('^' uint)?
    //   coeff := int ('/' uint)?
    // over the given ring; whitespace-insensitive.
    static Poly parse(const std::string& text, const Ring& ring);

private:
    Ring ring_;
    std::vector<Term> terms_; // descending canonical order, no zeros

    void require_same_ring(const Poly& o) const;
};

// --- scalar convenience -----------------------------------------------------

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

// --- canonical form ---------------------------------------------------------

// Scales by the unique positive rational giving coprime integer coefficients,
// then flips the sign so the canonical leading coefficient is positive.
// normalize(0) = 0.
Poly normalize(const Poly& p);

// gcd of all coefficients as a positive rational (0 for the zero polynomial);
// `p / content(p)` has coprime integer coefficients.
Rational rational_content(const Poly& p);

// --- division ---------------------------------------------------------------

// Exact quotient p / q when q divides p, std::nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);

bool divides(const Poly& q, const Poly& p);

// --- gcd and squarefree -----------------------------------------------------

// Greatest common divisor, computed by primitive-part subresultant remainder
// sequences recursing on one variable at a time.  The result is normalized;
// gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);

// Product of the distinct irreducible factors of p (p != 0), normalized.
Poly squarefree_part(const Poly& p);

// --- univariate views -------------------------------------------------------

// Coefficient list of p seen as a polynomial in v: index i holds the
// coefficient of v^i, a polynomial over the same ring not using v.
std::vector<Poly> coefficients_in(const Poly& p, Var v);

Poly from_coefficients_in(const Ring& ring, Var v, const std::vector<Poly>& coefs);

// Leading coefficient of p in v (p as univariate in v).
Poly leading_coefficient_in(const Poly& p, Var v);

// Content of p wrt v: gcd of the coefficients_in(p, v).
Poly content_in(const Poly& p, Var v);

// --- deterministic total order ----------------------------------------------

// Orders by total degree, then term count, then termwise comparison; used to
// report curve lists in a stable, meaningful sequence.
int compare_polys(const Poly& p, const Poly& q);

} // namespace conchoid
