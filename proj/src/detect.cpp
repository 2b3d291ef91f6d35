#include "detect.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "errors.hpp"
#include "factor.hpp"
#include "realroots.hpp"

namespace conchoid {

namespace {

// The product of the two isotropic lines through some point: a curve with no
// non-isotropic points at all, excluded from detection.
bool is_isotropic_line_pair(const Curve& D) {
    Poly m = D.xy_form();
    if (m.total_degree() != 2) return false;
    Ring ring = m.ring();
    std::vector<Poly> by_x1 = coefficients_in(m, Var::x1);
    if (by_x1.size() != 3 || !by_x1[2].is_constant()) return false;
    Rational lead = by_x1[2].constant_value();
    Poly m2 = m.scaled(Rational(1) / lead);
    // Centers read off the linear coefficients of the monic form.
    std::vector<Poly> lin1 = coefficients_in(m2, Var::x1);
    std::vector<Poly> lin2 = coefficients_in(m2, Var::x2);
    Poly c1 = lin1.size() > 1 ? lin1[1] : Poly::zero(ring);
    Poly c2 = lin2.size() > 1 ? lin2[1] : Poly::zero(ring);
    if (!c1.is_constant() || !c2.is_constant()) return false;
    Rational alpha = c1.is_zero() ? Rational(0) : -c1.constant_value() / 2;
    Rational beta = c2.is_zero() ? Rational(0) : -c2.constant_value() / 2;
    Poly x1 = Poly::variable(ring, Var::x1);
    Poly x2 = Poly::variable(ring, Var::x2);
    Poly pair = (x1 - Poly::constant(ring, alpha)).pow(2) +
                (x2 - Poly::constant(ring, beta)).pow(2);
    return m2 == pair;
}

struct DetectionSystem {
    Ring ring;
    std::vector<Poly> equations;
};

// Univariate arithmetic over Q(i), enough to count distinct roots of the
// restriction of a curve to an isotropic line.  Coefficient lists run from
// the constant term up.
struct GaussianRational {
    Rational re, im;
    bool is_zero() const { return conchoid::is_zero(re) && conchoid::is_zero(im); }
};

GaussianRational operator+(const GaussianRational& p, const GaussianRational& q) {
    return {Rational(p.re + q.re), Rational(p.im + q.im)};
}
GaussianRational operator-(const GaussianRational& p, const GaussianRational& q) {
    return {Rational(p.re - q.re), Rational(p.im - q.im)};
}
GaussianRational operator*(const GaussianRational& p, const GaussianRational& q) {
    return {Rational(p.re * q.re - p.im * q.im), Rational(p.re * q.im + p.im * q.re)};
}
GaussianRational gaussian_div(const GaussianRational& p, const GaussianRational& q) {
    Rational n = q.re * q.re + q.im * q.im;
    return {Rational((p.re * q.re + p.im * q.im) / n),
            Rational((p.im * q.re - p.re * q.im) / n)};
}

using GaussianPoly = std::vector<GaussianRational>;

void gaussian_trim(GaussianPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int gaussian_degree(const GaussianPoly& p) {
    return static_cast<int>(p.size()) - 1;
}

GaussianPoly gaussian_mul(const GaussianPoly& p, const GaussianPoly& q) {
    if (p.empty() || q.empty()) return {};
    GaussianPoly out(p.size() + q.size() - 1, GaussianRational{Rational(0), Rational(0)});
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            out[i + j] = out[i + j] + p[i] * q[j];
    return out;
}

GaussianPoly gaussian_mod(GaussianPoly r, const GaussianPoly& m) {
    while (gaussian_degree(r) >= gaussian_degree(m)) {
        GaussianRational q = gaussian_div(r.back(), m.back());
        std::size_t shift = r.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            r[shift + i] = r[shift + i] - q * m[i];
        r.pop_back();
        gaussian_trim(r);
    }
    return r;
}

// Coefficient lists in the elimination parameter, constant term first.
using ParamCoeffs = std::vector<Poly>;

void param_trim(ParamCoeffs& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

ParamCoeffs param_coeffs(const Poly& p) {
    ParamCoeffs v = coefficients_in(p, Var::t1);
    param_trim(v);
    return v;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, as parameter-degree
// coefficient lists.  Requires deg a >= deg b >= 0.
ParamCoeffs param_prem(ParamCoeffs r, const ParamCoeffs& b) {
    const Poly& l = b.back();
    int db = static_cast<int>(b.size()) - 1;
    int scale_left = static_cast<int>(r.size()) - 1 - db + 1;
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        Poly cr = r.back();
        int dr = static_cast<int>(r.size()) - 1;
        for (Poly& c : r) c = c * l;
        for (int i = 0; i <= db; ++i) r[dr - db + i] = r[dr - db + i] - cr * b[i];
        param_trim(r);
        --scale_left;
    }
    // Compensate for degree drops of more than one per step, so the result
    // is exactly lc^(delta+1) * a mod b as the subresultant recurrences need.
    for (; scale_left > 0; --scale_left)
        for (Poly& c : r) c = c * l;
    return r;
}

// Brown's subresultant remainder sequence: the final parameter-free remainder
// is an associate of the nonzero part of the resultant.  A zero return means
// the inputs share a factor of positive parameter degree, so the projection
// covers the whole plane.
Poly param_resultant(ParamCoeffs A, ParamCoeffs B, const Ring& ring) {
    if (A.size() < B.size()) std::swap(A, B);
    Poly g = Poly::constant(ring, 1);
    Poly h = g;
    while (true) {
        int delta = static_cast<int>(A.size()) - static_cast<int>(B.size());
        ParamCoeffs R = param_prem(A, B);
        if (R.empty()) return Poly::zero(ring);
        Poly beta = g * h.pow(delta);
        if (!(beta.is_constant() && beta.constant_value() == Rational(1))) {
            std::vector<Poly> divided;
            divided.reserve(R.size());
            bool exact = true;
            for (const Poly& c : R) {
                std::optional<Poly> q = divide_exact(c, beta);
                if (!q) { exact = false; break; }
                divided.push_back(*q);
            }
            if (exact) R = std::move(divided);
        }
        g = B.back();
        if (delta >= 1) {
            std::optional<Poly> q = divide_exact(g.pow(delta), h.pow(delta - 1));
            h = q ? *q : g;
        }
        A = std::move(B);
        B = std::move(R);
        if (B.size() == 1) return B.front();
    }
}

// Whether a generic point of the irreducible curve p lifts to a common root of
// the two parameter polynomials: the gcd over the function field of p has
// positive parameter degree.  Computed by a pseudo-remainder chain with
// coefficients reduced modulo p.
bool generic_common_root(const ParamCoeffs& ec, const ParamCoeffs& oc, const Poly& p,
                         const Budget& budget) {
    GroebnerBasis gb = groebner(Ideal::of(p.ring(), {p}),
                                MonomialOrder::grevlex(p.ring()), budget);
    auto reduce = [&](ParamCoeffs v) {
        for (Poly& c : v) c = normal_form(c, gb);
        param_trim(v);
        return v;
    };
    ParamCoeffs A = reduce(ec);
    ParamCoeffs B = reduce(oc);
    if (A.empty() && B.empty()) return true;
    if (A.empty() || B.empty()) {
        const ParamCoeffs& other = A.empty() ? B : A;
        return other.size() > 1;
    }
    if (A.size() < B.size()) std::swap(A, B);
    while (B.size() > 1) {
        ParamCoeffs R = reduce(param_prem(A, B));
        if (R.empty()) return true; // B divides A over the function field
        A = std::move(B);
        B = std::move(R);
    }
    return false;
}

// Irreducible hypersurface components of the projection of the common zeros
// of the two parameter polynomials onto the (z1, z2) plane.  The resultant
// vanishes exactly on that projection plus the common zeros of the two
// leading coefficients, so factors dividing both leads get the honest
// function-field check instead of automatic acceptance.
std::vector<Poly> projection_components(const Poly& even, const Poly& odd,
                                        const Budget& budget) {
    const Ring& ring = even.ring();
    ParamCoeffs ec = param_coeffs(even);
    ParamCoeffs oc = param_coeffs(odd);
    std::vector<Poly> parts;
    auto accept_factors_of = [&](const Poly& w, bool check_lift) {
        for (const auto& [factor_poly, mult] :
             factor(normalize(squarefree_part(w))).factors) {
            (void)mult;
            if (!check_lift || generic_common_root(ec, oc, factor_poly, budget))
                parts.push_back(factor_poly);
        }
    };
    if (ec.size() <= 1 && oc.size() <= 1) {
        // Both parameter-free: the projection is their common zero set.
        Poly common = gcd(even, odd);
        if (common.is_zero()) throw DomainError("no curve candidates");
        if (!common.is_constant()) accept_factors_of(common, false);
        return parts;
    }
    if (ec.size() <= 1 || oc.size() <= 1) {
        // One equation is parameter-free; its components survive when the
        // other equation keeps a root along them.
        const Poly& flat = ec.size() <= 1 ? even : odd;
        if (flat.is_zero()) throw DomainError("no curve candidates");
        if (!flat.is_constant()) accept_factors_of(flat, true);
        return parts;
    }
    Poly res = param_resultant(ec, oc, ring);
    if (res.is_zero()) throw DomainError("no curve candidates");
    if (res.is_constant()) return parts;
    Poly lead_gcd = gcd(ec.back(), oc.back());
    Poly sfres = normalize(squarefree_part(res));
    for (const auto& [factor_poly, mult] :
         factor(sfres).factors) {
        (void)mult;
        bool suspect = !lead_gcd.is_constant() &&
                       divide_exact(lead_gcd, factor_poly).has_value();
        if (!suspect || generic_common_root(ec, oc, factor_poly, budget))
            parts.push_back(factor_poly);
    }
    return parts;
}

// Whether the isotropic lines through (a, b) meet the curve in at least two
// distinct points each, i.e. whether the restriction to x1 = a + t, x2 = b + it
// has at least two distinct roots (or vanishes identically, the contained-line
// case).  The conjugate line behaves the same by symmetry.
bool isotropic_lines_meet_twice(const Poly& g, const Rational& a, const Rational& b) {
    const Ring& gring = g.ring();
    int ix1 = gring.index_of(Var::x1), ix2 = gring.index_of(Var::x2);
    GaussianPoly along_x{{a, Rational(0)}, {Rational(1), Rational(0)}};
    GaussianPoly along_y{{b, Rational(0)}, {Rational(0), Rational(1)}};
    GaussianPoly q;
    for (const Term& term : g.terms()) {
        GaussianPoly mono{{term.coef, Rational(0)}};
        for (int k = 0; k < term.mono.exponent(ix1); ++k) mono = gaussian_mul(mono, along_x);
        for (int k = 0; k < term.mono.exponent(ix2); ++k) mono = gaussian_mul(mono, along_y);
        if (q.size() < mono.size())
            q.resize(mono.size(), GaussianRational{Rational(0), Rational(0)});
        for (std::size_t i = 0; i < mono.size(); ++i) q[i] = q[i] + mono[i];
    }
    gaussian_trim(q);
    if (q.empty()) return true; // the line lies inside the curve
    if (gaussian_degree(q) < 2) return false;
    GaussianPoly deriv(q.size() - 1, GaussianRational{Rational(0), Rational(0)});
    for (std::size_t i = 1; i < q.size(); ++i)
        deriv[i - 1] = GaussianRational{Rational(i), Rational(0)} * q[i];
    gaussian_trim(deriv);
    // Distinct-root count: deg q - deg gcd(q, q').
    GaussianPoly u = q, v = deriv;
    while (!v.empty()) {
        GaussianPoly r = gaussian_mod(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return gaussian_degree(q) - gaussian_degree(u) >= 2;
}

// The four detection equations: two points L(t1), L(t2) of D on a line
// through the focus, equidistant from the generic point (z1, z2), with
// t1 != t2 forced by the omega equation.  The focus enters as the variable
// pair (a, b) or as constants, depending on the ring.
DetectionSystem build_system(const Curve& D, const Ring& ring, const Poly& a,
                             const Poly& b) {
    Poly z1 = Poly::variable(ring, Var::z1);
    Poly z2 = Poly::variable(ring, Var::z2);
    Poly t1 = Poly::variable(ring, Var::t1);
    Poly t2 = Poly::variable(ring, Var::t2);
    Poly omega = Poly::variable(ring, Var::omega);

    Poly g = D.xy_form();
    auto line_point = [&](const Poly& t) {
        return std::pair{a + t * (z1 - a), b + t * (z2 - b)};
    };
    auto [p11, p12] = line_point(t1);
    auto [p21, p22] = line_point(t2);

    Poly eq1 = g.substitute({{Var::x1, p11}, {Var::x2, p12}}, ring);
    Poly eq2 = g.substitute({{Var::x1, p21}, {Var::x2, p22}}, ring);
    Poly eq3 = (p11 - z1).pow(2) + (p12 - z2).pow(2) - (p21 - z1).pow(2) -
               (p22 - z2).pow(2);
    Poly eq4 = omega * (t1 - t2) - Poly::constant(ring, 1);
    return DetectionSystem{ring, {eq1, eq2, eq3, eq4}};
}

} // namespace

FocusLocus focus_locus(const Curve& D, const Budget& budget) {
    if (is_isotropic_line_pair(D))
        throw DomainError("curve is a pair of isotropic lines; detection does not apply");
    Ring ring({Var::omega, Var::t1, Var::t2, Var::z1, Var::z2, Var::a, Var::b});
    DetectionSystem sys = build_system(D, ring, Poly::variable(ring, Var::a),
                                       Poly::variable(ring, Var::b));
    Ideal locus = eliminate(Ideal::of(ring, sys.equations), {Var::a, Var::b}, budget,
                            ElimStrategy::staged);
    FocusLocus out;
    if (!locus.is_zero_ideal()) {
        for (const Poly& p : locus.generators()) out.generators.push_back(normalize(p));
    }
    return out;
}

std::vector<Curve> candidate_bases(const Curve& D, const Focus& A, const Budget& budget) {
    if (is_isotropic_line_pair(D))
        throw DomainError("curve is a pair of isotropic lines; detection does not apply");
    // Off the isotropic lines through the focus, ||L(t) - Q||^2 equals
    // (t - 1)^2 ||Q - A||^2, so two distinct equidistant parameters satisfy
    // t2 = 2 - t1.  Writing t1 = 1 + tau turns the two curve equations into
    // h(tau) and h(-tau); their common zeros away from tau = 0 are exactly
    // the common zeros of the even and odd parts of h in s = tau^2, which
    // leaves a two-equation elimination in a single variable.  What remains
    // of the solution set lives on the isotropic lines themselves, which
    // contribute their product conic exactly when they meet the curve in two
    // distinct points.
    Ring ring({Var::t1, Var::z1, Var::z2});
    Poly z1 = Poly::variable(ring, Var::z1);
    Poly z2 = Poly::variable(ring, Var::z2);
    Poly s = Poly::variable(ring, Var::t1);
    Poly a = Poly::constant(ring, A.a);
    Poly b = Poly::constant(ring, A.b);
    Poly g = D.xy_form();

    Poly stretch = Poly::constant(ring, 1) + s;
    Poly h = g.substitute({{Var::x1, a + stretch * (z1 - a)},
                           {Var::x2, b + stretch * (z2 - b)}},
                          ring);
    std::vector<Poly> by_tau = coefficients_in(h, Var::t1);
    Poly even = Poly::zero(ring);
    Poly odd = Poly::zero(ring);
    for (std::size_t k = 0; k < by_tau.size(); ++k) {
        Poly lifted = by_tau[k] * s.pow(static_cast<int>(k / 2));
        (k % 2 == 0 ? even : odd) += lifted;
    }

    std::vector<Poly> parts = projection_components(even, odd, budget);
    if (isotropic_lines_meet_twice(g, A.a, A.b))
        parts.push_back(normalize((z1 - a).pow(2) + (z2 - b).pow(2)));
    if (parts.empty()) throw DomainError("no curve candidates");

    std::sort(parts.begin(), parts.end(),
              [](const Poly& a, const Poly& b) { return compare_polys(a, b) < 0; });
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::vector<Curve> out;
    for (const Poly& p : parts) out.push_back(Curve(p, true));
    return out;
}

std::vector<Rational> solve_distances(const Curve& D, const Focus& A, const Curve& base,
                                      const Budget& budget, bool* irrational_candidates) {
    if (irrational_candidates) *irrational_candidates = false;
    Poly G = compute_generic_conchoid(base, A, budget).hypersurface;
    Poly target = D.xy_form();

    // Coefficients of both polynomials per (x1, x2) monomial; G's live in d.
    Ring dring({Var::d});
    Poly dvar = Poly::variable(dring, Var::d);
    std::map<std::pair<int, int>, Poly> of_G;
    const Ring& gring = G.ring();
    int ix1 = gring.index_of(Var::x1), ix2 = gring.index_of(Var::x2);
    int id = gring.index_of(Var::d);
    for (const Term& term : G.terms()) {
        std::pair<int, int> key{term.mono.exponent(ix1), term.mono.exponent(ix2)};
        auto [it, fresh] = of_G.try_emplace(key, Poly::zero(dring));
        int e = id < 0 ? 0 : term.mono.exponent(id);
        it->second += dvar.pow(e).scaled(term.coef);
    }
    std::map<std::pair<int, int>, Rational> of_D;
    const Ring& tring = target.ring();
    for (const Term& term : target.terms()) {
        of_D[{term.mono.exponent(tring.index_of(Var::x1)),
              term.mono.exponent(tring.index_of(Var::x2))}] = term.coef;
    }

    std::vector<std::pair<Poly, Rational>> aligned;
    for (const auto& [key, c] : of_G) {
        auto it = of_D.find(key);
        aligned.push_back({c, it == of_D.end() ? Rational(0) : it->second});
    }
    for (const auto& [key, gcoef] : of_D) {
        if (!of_G.count(key)) aligned.push_back({Poly::zero(dring), gcoef});
    }

    // The unknown scalar between D and G(., d) drops out of cross-products.
    Poly matcher = Poly::zero(dring);
    for (std::size_t i = 0; i < aligned.size(); ++i) {
        for (std::size_t j = i + 1; j < aligned.size(); ++j) {
            Poly cross = aligned[i].first.scaled(aligned[j].second) -
                         aligned[j].first.scaled(aligned[i].second);
            matcher = gcd(matcher, cross);
        }
    }
    if (matcher.is_zero()) throw MatchingFamilyError("identically matching family");
    if (matcher.is_constant()) return {}; // the cross-equations have no common root

    std::vector<Rational> roots;
    for (const auto& [factor_poly, mult] : factor_univariate(matcher).factors) {
        (void)mult;
        int deg = factor_poly.degree_in(Var::d);
        if (deg == 1) {
            std::vector<Poly> coefs = coefficients_in(factor_poly, Var::d);
            Rational c0 = coefs[0].is_zero() ? Rational(0) : coefs[0].constant_value();
            Rational root = -c0 / coefs[1].constant_value();
            if (!is_zero(root)) roots.push_back(root);
        } else if (deg > 1 && irrational_candidates &&
                   count_real_roots(factor_poly, Var::d) > 0) {
            *irrational_candidates = true;
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Rational& p, const Rational& q) {
        return p > q;
    });

    std::vector<Rational> confirmed;
    for (const Rational& d0 : roots) {
        Poly specialized = G.evaluate({{Var::d, d0}});
        if (!specialized.is_zero() &&
            normalize(squarefree_part(specialized)) == target)
            confirmed.push_back(d0);
    }
    return confirmed;
}

DetectionReport detect(const Curve& D, const Focus& A, const Budget& budget) {
    DetectionReport report{D, A, {}, {}};
    Poly target = D.xy_form();
    for (const Curve& base : candidate_bases(D, A, budget)) {
        report.h_components.push_back(base);
        Candidate cand{base, {}, false, false, false};
        try {
            bool irrational = false;
            std::vector<Rational> found =
                solve_distances(D, A, base, budget, &irrational);
            cand.irrational_candidates = irrational;
            for (const Rational& d0 : found) {
                // Independent forward check; specialization of the generic
                // conchoid can fail for finitely many distances.
                if (compute_conchoid(base, A, d0, budget).hypersurface == target)
                    cand.distances.push_back(d0);
            }
            cand.verified = !cand.distances.empty();
        } catch (const MatchingFamilyError&) {
            cand.identically_matching = true;
            cand.verified =
                compute_conchoid(base, A, 1, budget).hypersurface == target;
        } catch (const DomainError&) {
            // A candidate without a usable conchoid stays unverified.
        } catch (const BudgetError&) {
            // A candidate whose verification overruns the budget stays
            // unverified; the report still lists it.
        }
        report.candidates.push_back(std::move(cand));
    }
    return report;
}

} // namespace conchoid
