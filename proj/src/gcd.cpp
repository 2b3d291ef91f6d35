// Polynomial gcd over the rationals via primitive-part subresultant remainder
// sequences, recursing on one variable at a time, plus the squarefree part
// derived from it.

#include <optional>

#include "poly.hpp"

namespace conchoid {

namespace {

// First ring variable used by either polynomial, if any.
std::optional<Var> main_variable(const Poly& p, const Poly& q) {
    const Ring& ring = p.ring();
    for (Var v : ring.vars())
        if (p.degree_in(v) > 0 || q.degree_in(v) > 0) return v;
    return std::nullopt;
}

Poly gcd_int(const Poly& p, const Poly& q);

// gcd of the v-coefficients of an integer-coefficient polynomial.
Poly content_of(const Poly& p, Var v) {
    Poly c = Poly::zero(p.ring());
    for (const Poly& coef : coefficients_in(p, v)) {
        if (coef.is_zero()) continue;
        c = c.is_zero() ? coef : gcd_int(c, coef);
    }
    return c;
}

// Pseudo-remainder of A by B in v, with the full lc(B)^(deg A - deg B + 1)
// premultiplier so that subresultant divisions stay exact.
Poly pseudo_remainder(const Poly& A, const Poly& B, Var v) {
    int degB = B.degree_in(v);
    Poly lb = leading_coefficient_in(B, v);
    Poly R = A;
    int steps = A.degree_in(v) - degB + 1;
    while (!R.is_zero() && R.degree_in(v) >= degB) {
        int degR = R.degree_in(v);
        Poly lr = leading_coefficient_in(R, v);
        Poly shift = Poly::variable(R.ring(), v, degR - degB);
        R = lb * R - lr * shift * B;
        --steps;
    }
    for (; steps > 0; --steps) R = lb * R;
    return R;
}

Poly exact(const Poly& p, const Poly& q) {
    auto r = divide_exact(p, q);
    if (!r) throw Error("internal: inexact division in subresultant chain");
    return *r;
}

// Sign convention for recursion results: positive canonical leading
// coefficient.
Poly sign_fixed(const Poly& p) {
    if (!p.is_zero() && sgn(p.leading_term().coef) < 0) return -p;
    return p;
}

// gcd of two nonzero polynomials with integer coefficients.
Poly gcd_int(const Poly& p, const Poly& q) {
    auto mv = main_variable(p, q);
    if (!mv) {
        // Two integer constants.
        Integer g;
        mpz_gcd(g.get_mpz_t(), numerator(p.constant_value()).get_mpz_t(),
                numerator(q.constant_value()).get_mpz_t());
        return Poly::constant(p.ring(), Rational(g));
    }
    Var v = *mv;
    if (p.degree_in(v) == 0) return sign_fixed(gcd_int(p, content_of(q, v)));
    if (q.degree_in(v) == 0) return sign_fixed(gcd_int(content_of(p, v), q));

    Poly cp = content_of(p, v);
    Poly cq = content_of(q, v);
    Poly A = exact(p, cp);
    Poly B = exact(q, cq);
    Poly c = gcd_int(cp, cq);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

    Poly g = Poly::constant(p.ring(), 1);
    Poly h = g;
    for (;;) {
        int delta = A.degree_in(v) - B.degree_in(v);
        Poly R = pseudo_remainder(A, B, v);
        if (R.is_zero()) break;
        if (R.degree_in(v) == 0) {
            // Primitive parts are coprime in v.
            return sign_fixed(c);
        }
        A = B;
        B = exact(R, g * h.pow(delta));
        g = leading_coefficient_in(A, v);
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact(g.pow(delta), h.pow(delta - 1));
    }
    Poly pp = exact(B, content_of(B, v));
    return sign_fixed(c * pp);
}

// Newton interpolation through (point, value) pairs where the values are
// polynomials free of the interpolation variable.
Poly interpolate_in(const Ring& ring, Var y, const std::vector<Rational>& points,
                    std::vector<Poly> values) {
    for (std::size_t k = 1; k < values.size(); ++k)
        for (std::size_t i = values.size() - 1; i >= k; --i)
            values[i] = (values[i] - values[i - 1])
                            .scaled(1 / Rational(points[i] - points[i - k]));
    Poly yv = Poly::variable(ring, y);
    Poly result = Poly::zero(ring);
    Poly basis = Poly::constant(ring, 1);
    for (std::size_t k = 0; k < values.size(); ++k) {
        result = result + values[k] * basis;
        basis = basis * (yv - Poly::constant(ring, points[k]));
    }
    return result;
}

// Evaluation–interpolation gcd for polynomials in exactly two variables:
// specialize y at integer points, take univariate gcds in x, and interpolate
// with the leading coefficients pinned to gcd(lc_x p, lc_x q).  Intermediate
// degrees never exceed the inputs', unlike the subresultant chain, whose
// mid-sequence coefficients outgrow the exponent range on large inputs.  The
// divisibility check at the end makes unlucky evaluation points harmless.
std::optional<Poly> gcd_bivariate_modular(const Poly& p, const Poly& q, Var x, Var y) {
    const Ring& ring = p.ring();
    Poly cp = content_of(p, x);
    Poly cq = content_of(q, x);
    Poly pp = exact(p, cp);
    Poly qq = exact(q, cq);
    Poly ccontent = gcd_int(cp, cq);
    Poly gamma = gcd_int(leading_coefficient_in(pp, x), leading_coefficient_in(qq, x));

    int bound = gamma.degree_in(y) + std::min(pp.degree_in(y), qq.degree_in(y)) + 1;
    std::vector<Rational> points;
    std::vector<Poly> values;
    int best_degree = -1;
    for (int index = 0; static_cast<int>(points.size()) < bound; ++index) {
        if (index > 4 * bound + 200) return std::nullopt; // too many unlucky points
        int k = (index + 1) / 2;
        Rational e = (index % 2 == 1) ? Rational(k) : Rational(-k);
        Rational ge = gamma.evaluate({{y, e}}).constant_value();
        if (is_zero(ge)) continue;
        Poly u = pp.evaluate({{y, e}});
        Poly v = qq.evaluate({{y, e}});
        if (u.degree_in(x) != pp.degree_in(x) || v.degree_in(x) != qq.degree_in(x))
            continue;
        Poly img = gcd_int(normalize(u), normalize(v));
        int d = img.degree_in(x);
        if (d == 0) return sign_fixed(ccontent); // coprime primitive parts
        if (best_degree < 0 || d < best_degree) {
            best_degree = d;
            points.clear();
            values.clear();
        } else if (d > best_degree) {
            continue;
        }
        Rational lead = leading_coefficient_in(img, x).constant_value();
        points.push_back(e);
        values.push_back(img.scaled(ge / lead).over(ring));
    }
    Poly h = interpolate_in(ring, y, points, values);
    if (h.is_zero()) return std::nullopt;
    Poly hc = content_of(h, x);
    Poly hpp = exact(h, hc);
    if (!divide_exact(pp, hpp) || !divide_exact(qq, hpp)) return std::nullopt;
    return sign_fixed(ccontent * hpp);
}

} // namespace

Poly gcd(const Poly& p, const Poly& q) {
    if (p.ring() != q.ring()) throw RingError("ring mismatch in gcd");
    if (p.is_zero()) return normalize(q);
    if (q.is_zero()) return normalize(p);
    Poly a = normalize(p);
    Poly b = normalize(q);
    std::vector<Var> used = a.used_vars();
    for (Var v : b.used_vars())
        if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    if (used.size() == 2 &&
        std::max(a.total_degree(), b.total_degree()) >= 16) {
        Var x = used[0], y = used[1];
        if (a.degree_in(y) + b.degree_in(y) > a.degree_in(x) + b.degree_in(x))
            std::swap(x, y); // interpolate along the lower-degree direction
        if (auto m = gcd_bivariate_modular(a, b, x, y)) return normalize(*m);
    }
    return normalize(gcd_int(a, b));
}

Poly content_in(const Poly& p, Var v) {
    Poly c = Poly::zero(p.ring());
    for (const Poly& coef : coefficients_in(p, v))
        c = gcd(c, coef);
    return c;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (p.is_constant()) return normalize(p);
    Poly g = normalize(p);
    for (Var v : p.used_vars()) {
        Poly d = p.derivative(v);
        if (!d.is_zero()) g = gcd(g, d);
    }
    auto sf = divide_exact(normalize(p), g);
    if (!sf) throw Error("internal: squarefree divisor does not divide");
    return normalize(*sf);
}

} // namespace conchoid
