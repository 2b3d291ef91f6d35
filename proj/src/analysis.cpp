#include "analysis.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "errors.hpp"
#include "factor.hpp"

namespace conchoid {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Simple: return "Simple";
        case Classification::Special: return "Special";
        case Classification::Undetermined: break;
    }
    return "Undetermined";
}

std::vector<Component> components(const ConchoidResult& R) {
    if (R.distance.is_symbolic())
        throw DomainError("components require a numeric distance");
    std::vector<Component> out;
    for (const auto& [factor_poly, mult] : factor(R.hypersurface).factors) {
        (void)mult; // the hypersurface is squarefree
        out.push_back(Component{Curve(factor_poly, true), Classification::Undetermined, {}});
    }
    return out;
}

namespace {

// Circle centered at the focus, of any radius (including degenerate radius 0).
bool is_circle_centered_at(const Curve& c, const Focus& A) {
    Poly m = c.base_form();
    if (m.total_degree() != 2) return false;
    Ring ring = m.ring();
    std::vector<Poly> by_y1 = coefficients_in(m, Var::y1);
    if (by_y1.size() != 3 || !by_y1[2].is_constant()) return false;
    Rational lead = by_y1[2].constant_value();
    if (is_zero(lead)) return false;
    Poly y1 = Poly::variable(ring, Var::y1);
    Poly y2 = Poly::variable(ring, Var::y2);
    Poly circle = (y1 - Poly::constant(ring, A.a)).pow(2) +
                  (y2 - Poly::constant(ring, A.b)).pow(2);
    return (m.scaled(Rational(1) / lead) - circle).is_constant();
}

} // namespace

Component classify(const Component& M, const Curve& base, const Focus& A,
                   const Rational& d, const Budget& budget) {
    if (is_circle_centered_at(M.curve, A))
        throw DomainError("component is a circle centered at the focus; "
                          "classification does not apply");
    Component out = M;
    out.witness = compute_conchoid(M.curve, A, d, budget);
    out.classification = (out.witness->hypersurface == base.xy_form())
                             ? Classification::Special
                             : Classification::Simple;
    return out;
}

namespace {

// Rational roots of a univariate polynomial (the linear factors).
std::vector<Rational> rational_roots(const Poly& q, Var v) {
    std::vector<Rational> roots;
    if (q.is_constant()) return roots;
    for (const auto& [factor_poly, mult] : factor_univariate(q).factors) {
        (void)mult;
        if (factor_poly.degree_in(v) != 1) continue;
        std::vector<Poly> coefs = coefficients_in(factor_poly, v);
        Rational c0 = coefs[0].is_zero() ? Rational(0) : coefs[0].constant_value();
        roots.push_back(-c0 / coefs[1].constant_value());
    }
    return roots;
}

struct Point {
    Rational p1, p2;
    bool operator==(const Point& o) const { return p1 == o.p1 && p2 == o.p2; }
};

// The deterministic parameter sequence 1, -1, 2, -2, 3, ...
Rational parameter(int i) {
    int k = i / 2 + 1;
    return Rational(i % 2 == 0 ? k : -k);
}

// Sample points of the component M, transported from base-curve points along
// rational-norm directions through the focus.  Directions (2u, u^2-1) have
// norm u^2+1, so every base point found on such a ray sits at an exactly known
// distance from A, and both translates of it are rational.  Skipped samples:
// the focus itself, points off M (they land on another component), and - when
// the focus lies on the base - points whose inner translate collapses onto the
// focus, where the fiber loses the excluded isotropic preimage.
std::vector<Point> sample_points(const Curve& M, const Curve& base, const Focus& A,
                                 const Rational& d, int samples) {
    Poly m = M.xy_form();
    Poly f = base.base_form();
    bool focus_on_base =
        f.evaluate({{Var::y1, A.a}, {Var::y2, A.b}}).is_zero();

    Ring param_ring({Var::t1});
    Poly t = Poly::variable(param_ring, Var::t1);

    std::vector<Point> found;
    auto admit = [&](const Rational& s, const Rational& u) {
        if (is_zero(s)) return; // the base point would be the focus
        Rational dir1 = 2 * u, dir2 = u * u - 1;
        Rational p1 = A.a + s * dir1, p2 = A.b + s * dir2;
        Rational r = abs(s) * (u * u + 1); // = |P - A|
        for (int sign : {1, -1}) {
            Rational scale = sign * d / r;
            Point Q{p1 + scale * (p1 - A.a), p2 + scale * (p2 - A.b)};
            if (Q.p1 == A.a && Q.p2 == A.b) continue;
            Rational norm2 = (Q.p1 - A.a) * (Q.p1 - A.a) + (Q.p2 - A.b) * (Q.p2 - A.b);
            if (focus_on_base && norm2 == d * d) continue;
            if (!m.evaluate({{Var::x1, Q.p1}, {Var::x2, Q.p2}}).is_zero()) continue;
            if (std::find(found.begin(), found.end(), Q) == found.end())
                found.push_back(Q);
        }
    };

    for (int i = 0; i < 100 && static_cast<int>(found.size()) < samples; ++i) {
        Rational u = parameter(i);
        std::map<Var, Poly> ray = {
            {Var::y1, Poly::constant(param_ring, A.a) + t.scaled(2 * u)},
            {Var::y2, Poly::constant(param_ring, A.b) + t.scaled(u * u - 1)},
        };
        Poly q = f.substitute(ray, param_ring);
        if (q.is_zero()) {
            // The ray lies inside the base; walk it by the same sequence.
            for (int j = 0; j < 2 * samples + 4; ++j) admit(parameter(j), u);
        } else {
            for (const Rational& s : rational_roots(q, Var::t1)) admit(s, u);
        }
    }
    if (static_cast<int>(found.size()) < samples)
        throw DomainError("no exact sample points");
    found.resize(static_cast<std::size_t>(samples));
    return found;
}

// Number of distinct base points generating Q: solutions of the incidence
// equations with the conchoid point pinned at Q.
int fiber_count(const Curve& base, const Focus& A, const Rational& d,
                const Point& Q, const Budget& budget) {
    Ring ring({Var::w, Var::y1, Var::y2});
    Poly w = Poly::variable(ring, Var::w);
    Poly y1 = Poly::variable(ring, Var::y1);
    Poly y2 = Poly::variable(ring, Var::y2);
    Poly a = Poly::constant(ring, A.a);
    Poly b = Poly::constant(ring, A.b);
    Poly q1 = Poly::constant(ring, Q.p1);
    Poly q2 = Poly::constant(ring, Q.p2);

    Poly f = base.base_form().over(ring);
    Poly on_circle = (q1 - y1).pow(2) + (q2 - y2).pow(2) - Poly::constant(ring, d * d);
    Poly collinear = (y2 - b) * (q1 - y1) - (y1 - a) * (q2 - y2);
    Poly invertible = w * ((y1 - a).pow(2) + (y2 - b).pow(2)) - Poly::constant(ring, 1);

    return count_distinct_solutions(
        Ideal::of(ring, {f, on_circle, collinear, invertible}), budget);
}

} // namespace

std::vector<int> fiber_cardinalities(const Curve& M, const Curve& base, const Focus& A,
                                     const Rational& d, int samples, const Budget& budget) {
    if (samples < 1) throw DomainError("sample count must be positive");
    std::vector<int> counts;
    for (const Point& Q : sample_points(M, base, A, d, samples))
        counts.push_back(fiber_count(base, A, d, Q, budget));
    return counts;
}

Classification classify_by_fibers(const Curve& M, const Curve& base, const Focus& A,
                                  const Rational& d, int samples, const Budget& budget) {
    bool all_one = true, all_many = true;
    for (int n : fiber_cardinalities(M, base, A, d, samples, budget)) {
        all_one = all_one && n == 1;
        all_many = all_many && n > 1;
    }
    if (all_one) return Classification::Simple;
    if (all_many) return Classification::Special;
    throw DomainError("inconsistent samples, increase sampling / investigate");
}

bool conchoid_sum_check(const Curve& base, const Focus& A, const Rational& d,
                        const Rational& d2, const Budget& budget) {
    if (d * d == d2 * d2)
        throw DomainError("distances must satisfy d^2 != d2^2");
    ConchoidResult first = compute_conchoid(base, A, d, budget);
    ConchoidResult sum = compute_conchoid(base, A, d + d2, budget);
    ConchoidResult difference = compute_conchoid(base, A, d - d2, budget);
    Poly product = normalize(sum.hypersurface * difference.hypersurface);
    for (const Component& M : components(first)) {
        ConchoidResult second = compute_conchoid(M.curve, A, d2, budget);
        for (const Component& Mp : components(second)) {
            if (!divides(Mp.curve.xy_form(), product)) return false;
        }
    }
    return true;
}

namespace {

// T with its two variables replaced by n1/den1 and n2/den2, multiplied by
// den1^cap1 * den2^cap2 to clear denominators; everything over the ring of
// the numerators and denominators.
Poly cleared_composition(const Poly& T, Var u, Var v, const Poly& n1, const Poly& den1,
                         const Poly& n2, const Poly& den2, int cap1, int cap2) {
    const Ring& target_ring = T.ring();
    const Ring& source_ring = n1.ring();
    int iu = target_ring.index_of(u), iv = target_ring.index_of(v);
    Poly sum = Poly::zero(source_ring);
    for (const Term& term : T.terms()) {
        int e1 = iu < 0 ? 0 : term.mono.exponent(iu);
        int e2 = iv < 0 ? 0 : term.mono.exponent(iv);
        Poly piece = Poly::constant(source_ring, term.coef) * n1.pow(e1) *
                     den1.pow(cap1 - e1) * n2.pow(e2) * den2.pow(cap2 - e2);
        sum += piece;
    }
    return sum;
}

struct MapData {
    Ring source_ring;
    Var s1, s2; // source coordinate variables
    Var u, v;   // target coordinate variables
    Poly n1, den1, n2, den2;
    GroebnerBasis source_gb;
};

MapData prepare(const RationalMap& phi, const Budget& budget) {
    Ring source_ring = phi.source.ring();
    const Ring& target_ring = phi.target.ring();
    GroebnerBasis gb = groebner(Ideal::of(source_ring, {phi.source.defining()}),
                                MonomialOrder::lex(source_ring), budget);
    MapData data{source_ring,
                 source_ring.var(0),
                 source_ring.var(1),
                 target_ring.var(0),
                 target_ring.var(1),
                 phi.first.num.over(source_ring),
                 phi.first.den.over(source_ring),
                 phi.second.num.over(source_ring),
                 phi.second.den.over(source_ring),
                 std::move(gb)};
    if (normal_form(data.den1, data.source_gb).is_zero() ||
        normal_form(data.den2, data.source_gb).is_zero())
        throw DomainError("degenerate rational map: a denominator vanishes "
                          "identically on the source curve");
    return data;
}

} // namespace

bool verify_rational_map(const RationalMap& phi, const Budget& budget) {
    MapData data = prepare(phi, budget);
    Poly T = phi.target.defining();
    Poly composed = cleared_composition(T, data.u, data.v, data.n1, data.den1,
                                        data.n2, data.den2, T.degree_in(data.u),
                                        T.degree_in(data.v));
    return normal_form(composed, data.source_gb).is_zero();
}

bool verify_rational_pair(const RationalMap& phi, const RationalMap& psi,
                          const Budget& budget) {
    if (!(psi.source == phi.target) || !(psi.target == phi.source))
        throw DomainError("map pair endpoints do not match");
    if (!verify_rational_map(phi, budget) || !verify_rational_map(psi, budget))
        return false;

    MapData data = prepare(phi, budget);
    Ring psi_ring = psi.source.ring();
    Var coords[2] = {data.s1, data.s2};
    const RationalFunction* parts[2] = {&psi.first, &psi.second};
    for (int j = 0; j < 2; ++j) {
        Poly num = parts[j]->num.over(psi_ring);
        Poly den = parts[j]->den.over(psi_ring);
        int cap1 = std::max(num.degree_in(data.u), den.degree_in(data.u));
        int cap2 = std::max(num.degree_in(data.v), den.degree_in(data.v));
        Poly num_comp = cleared_composition(num, data.u, data.v, data.n1, data.den1,
                                            data.n2, data.den2, cap1, cap2);
        Poly den_comp = cleared_composition(den, data.u, data.v, data.n1, data.den1,
                                            data.n2, data.den2, cap1, cap2);
        if (normal_form(den_comp, data.source_gb).is_zero()) return false;
        Poly coordinate = Poly::variable(data.source_ring, coords[j]);
        if (!normal_form(num_comp - coordinate * den_comp, data.source_gb).is_zero())
            return false;
    }
    return true;
}

} // namespace conchoid
