#include "conchoid.hpp"

#include <map>

#include "errors.hpp"

namespace conchoid {

namespace {

// Coordinate pairs a curve may be written in.
constexpr Var kPairs[3][2] = {
    {Var::x1, Var::x2},
    {Var::y1, Var::y2},
    {Var::z1, Var::z2},
};

int pair_index_of(Var v) {
    for (int i = 0; i < 3; ++i) {
        if (v == kPairs[i][0] || v == kPairs[i][1]) return i;
    }
    return -1;
}

Poly to_pair(const Poly& p, int pair) {
    Ring target({kPairs[pair][0], kPairs[pair][1]});
    std::map<Var, Var> names;
    for (Var v : p.used_vars()) {
        int from = pair_index_of(v);
        names[v] = (v == kPairs[from][0]) ? kPairs[pair][0] : kPairs[pair][1];
    }
    return p.renamed(names, target);
}

} // namespace

Curve::Curve(const Poly& defining, bool irreducible_over_q)
    : defining_(defining), irreducible_over_q_(irreducible_over_q) {
    std::vector<Var> used = defining.used_vars();
    if (used.empty())
        throw DomainError("curve polynomial must be nonconstant");
    int pair = pair_index_of(used.front());
    for (Var v : used) {
        if (pair_index_of(v) < 0)
            throw DomainError("curve polynomial must use coordinate variables, got " +
                              std::string(var_name(v)));
        if (pair_index_of(v) != pair)
            throw DomainError("curve polynomial must use one coordinate pair, got variable " +
                              std::string(var_name(v)));
    }
    Ring ring({kPairs[pair][0], kPairs[pair][1]});
    defining_ = normalize(squarefree_part(defining.over(ring)));
}

Poly Curve::base_form() const { return normalize(to_pair(defining_, 1)); }

Poly Curve::xy_form() const { return normalize(to_pair(defining_, 0)); }

Distance Distance::numeric(const Rational& value) {
    if (is_zero(value)) throw DomainError("distance must be nonzero");
    Distance d;
    d.symbolic_ = false;
    d.value_ = value;
    return d;
}

Distance Distance::symbolic() { return Distance(); }

const Rational& Distance::value() const {
    if (symbolic_) throw Error("symbolic distance has no numeric value");
    return value_;
}

bool is_circle_centered_at_focus(const Curve& c, const Focus& A, const Rational& d) {
    Ring ring({Var::y1, Var::y2});
    Poly y1 = Poly::variable(ring, Var::y1);
    Poly y2 = Poly::variable(ring, Var::y2);
    Poly circle = (y1 - Poly::constant(ring, A.a)).pow(2) +
                  (y2 - Poly::constant(ring, A.b)).pow(2) -
                  Poly::constant(ring, d * d);
    return c.base_form() == normalize(circle);
}

IncidenceSystem build_incidence(const Curve& c, const Focus& A, const Distance& d,
                                const Budget& budget) {
    Poly f_pair = c.base_form();
    Ring pair_ring = f_pair.ring();

    // The non-isotropic part of the base relative to A is empty exactly when
    // every component of the (squarefree) base divides (y1-a)^2 + (y2-b)^2,
    // the product of the two isotropic lines through A.
    {
        Poly y1 = Poly::variable(pair_ring, Var::y1);
        Poly y2 = Poly::variable(pair_ring, Var::y2);
        Poly norm = (y1 - Poly::constant(pair_ring, A.a)).pow(2) +
                    (y2 - Poly::constant(pair_ring, A.b)).pow(2);
        GroebnerBasis gb = groebner(Ideal::of(pair_ring, {f_pair}),
                                    MonomialOrder::lex(pair_ring), budget);
        if (normal_form(norm, gb).is_zero())
            throw DomainError(
                "base curve consists of isotropic lines through the focus; "
                "the conchoid construction is empty");
    }

    std::vector<Var> vars = {Var::w, Var::y1, Var::y2, Var::x1, Var::x2};
    if (d.is_symbolic()) vars.push_back(Var::d);
    Ring ring(vars);

    Poly w = Poly::variable(ring, Var::w);
    Poly y1 = Poly::variable(ring, Var::y1);
    Poly y2 = Poly::variable(ring, Var::y2);
    Poly x1 = Poly::variable(ring, Var::x1);
    Poly x2 = Poly::variable(ring, Var::x2);
    Poly a = Poly::constant(ring, A.a);
    Poly b = Poly::constant(ring, A.b);

    Poly dist_sq = d.is_symbolic() ? Poly::variable(ring, Var::d).pow(2)
                                   : Poly::constant(ring, d.value() * d.value());

    Poly f = f_pair.over(ring);
    Poly on_circle = (x1 - y1).pow(2) + (x2 - y2).pow(2) - dist_sq;
    Poly collinear = (y2 - b) * (x1 - y1) - (y1 - a) * (x2 - y2);
    Poly invertible = w * ((y1 - a).pow(2) + (y2 - b).pow(2)) - Poly::constant(ring, 1);

    return IncidenceSystem{Ideal::of(ring, {f, on_circle, collinear, invertible}),
                           Curve(f_pair, c.irreducible_over_q()), A, d};
}

namespace {

ConchoidResult project(const IncidenceSystem& sys, const Budget& budget) {
    std::vector<Var> keep = {Var::x1, Var::x2};
    if (sys.distance.is_symbolic()) keep.push_back(Var::d);
    // Staged elimination: the one-shot block order is fast on low-degree
    // bases but degenerates badly on quartic bases with symbolic distance,
    // where removing one variable at a time stays cheap.  Both strategies
    // return the same canonical generators.
    Ideal elim = eliminate(sys.ideal, keep, budget, ElimStrategy::staged);
    if (elim.is_zero_ideal())
        throw Error("conchoid projection eliminated to the zero ideal");
    const std::vector<Poly>& gens = elim.generators();

    Poly full_gcd = gens.front();
    for (size_t i = 1; i < gens.size(); ++i) full_gcd = gcd(full_gcd, gens[i]);
    if (full_gcd.is_constant())
        throw Error("conchoid projection has no hypersurface part");

    ConchoidResult result{sys.base, sys.focus, sys.distance,
                          normalize(squarefree_part(full_gcd)),
                          {},
                          false};
    if (gens.size() > 1) {
        for (const Poly& g : gens)
            result.residual_generators.push_back(normalize(*divide_exact(g, full_gcd)));
    }
    return result;
}

// The conchoid of the circle centered at the focus with radius d degenerates:
// the inner offset collapses onto the focus itself, so the projection closure
// is the doubled circle together with that one isolated point.
void check_degenerate_circle(const ConchoidResult& result, const Budget& budget) {
    const Focus& A = result.focus;
    const Rational& d = result.distance.value();
    Ring ring({Var::x1, Var::x2});
    Poly x1 = Poly::variable(ring, Var::x1);
    Poly x2 = Poly::variable(ring, Var::x2);
    Poly doubled = (x1 - Poly::constant(ring, A.a)).pow(2) +
                   (x2 - Poly::constant(ring, A.b)).pow(2) -
                   Poly::constant(ring, 4 * d * d);
    if (result.hypersurface != normalize(doubled))
        throw Error("degenerate circle conchoid: unexpected hypersurface part");
    if (result.residual_generators.empty())
        throw Error("degenerate circle conchoid: missing isolated focus point");
    std::map<Var, Rational> at_focus = {{Var::x1, A.a}, {Var::x2, A.b}};
    for (const Poly& g : result.residual_generators) {
        if (!g.evaluate(at_focus).is_zero())
            throw Error("degenerate circle conchoid: residual does not vanish at the focus");
    }
    Ideal residual = Ideal::of(ring, result.residual_generators);
    if (count_distinct_solutions(residual, budget) != 1)
        throw Error("degenerate circle conchoid: residual cuts more than the focus");
}

} // namespace

ConchoidResult compute_conchoid(const Curve& c, const Focus& A, const Rational& d,
                                const Budget& budget) {
    IncidenceSystem sys = build_incidence(c, A, Distance::numeric(d), budget);
    ConchoidResult result = project(sys, budget);
    if (is_circle_centered_at_focus(c, A, d)) {
        result.degenerate_circle_case = true;
        check_degenerate_circle(result, budget);
    }
    return result;
}

ConchoidResult compute_generic_conchoid(const Curve& c, const Focus& A,
                                        const Budget& budget) {
    IncidenceSystem sys = build_incidence(c, A, Distance::symbolic(), budget);
    return project(sys, budget);
}

} // namespace conchoid
