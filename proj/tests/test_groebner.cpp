#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "groebner.hpp"

using namespace conchoid;

namespace {

const Ring kXY{Var::x1, Var::x2};
const Ring kTXY{Var::t1, Var::x1, Var::x2};

Poly P(const std::string& text, const Ring& ring = kXY) {
    return Poly::parse(text, ring);
}

std::mt19937_64 rng(0x6b0bULL);

// Sylvester-matrix resultant oracle, independent of the elimination code:
// cofactor expansion over the first column, recursing on explicit submatrices.
Poly det(std::vector<std::vector<Poly>> m, const Ring& ring) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(ring, 1);
    if (n == 1) return m[0][0];
    Poly acc = Poly::zero(ring);
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            sub.push_back(std::vector<Poly>(m[i].begin() + 1, m[i].end()));
        }
        Poly cof = m[r][0] * det(std::move(sub), ring);
        acc = (r % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

Poly sylvester_resultant(const Poly& p, const Poly& q, Var v) {
    auto pc = coefficients_in(p, v);
    auto qc = coefficients_in(q, v);
    std::size_t m = pc.size() - 1, n = qc.size() - 1;
    std::size_t size = m + n;
    std::vector<std::vector<Poly>> s(size,
                                     std::vector<Poly>(size, Poly::zero(p.ring())));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= m; ++c) s[r][r + c] = pc[m - c];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c <= n; ++c) s[n + r][r + c] = qc[n - c];
    return det(std::move(s), p.ring());
}

} // namespace

TEST_CASE("reduced basis of a circle-line system") {
    Ideal I = Ideal::of(kXY, {P("x1^2 + x2^2 - 1"), P("x1 - x2")});
    GroebnerBasis G = groebner(I, MonomialOrder::lex(kXY));
    REQUIRE(G.elements.size() == 2);
    CHECK(G.elements[0] == P("x1 - x2"));
    CHECK(G.elements[1] == P("x2^2 - 1/2"));
    CHECK(G.reduced);
}

TEST_CASE("basis membership and the Buchberger criterion") {
    std::vector<Poly> gens = {P("x1^3 - 2*x1*x2"), P("x1^2*x2 - 2*x2^2 + x1")};
    Ideal I = Ideal::of(kXY, gens);
    for (auto order : {MonomialOrder::lex(kXY), MonomialOrder::grevlex(kXY)}) {
        GroebnerBasis G = groebner(I, order);
        // Every input generator reduces to zero.
        for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
        // Every S-polynomial of the output reduces to zero.
        for (std::size_t i = 0; i < G.elements.size(); ++i)
            for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
                const Poly& f = G.elements[i];
                const Poly& g = G.elements[j];
                Monomial l = Monomial::lcm(f.leading_term().mono,
                                           g.leading_term().mono);
                Poly uf = Poly::from_terms(
                    kXY, {{f.leading_term().mono.quotient_of(l),
                           1 / f.leading_term().coef}});
                Poly ug = Poly::from_terms(
                    kXY, {{g.leading_term().mono.quotient_of(l),
                           1 / g.leading_term().coef}});
                CHECK(normal_form(uf * f - ug * g, G).is_zero());
            }
    }
}

TEST_CASE("reduced basis is independent of generator order") {
    std::vector<Poly> gens = {P("x1^2 + x2^2 - 1"), P("x1*x2 - 1/4"),
                              P("x1^3 - x2")};
    GroebnerBasis ref = groebner(Ideal::of(kXY, gens), MonomialOrder::lex(kXY));
    for (int i = 0; i < 6; ++i) {
        std::shuffle(gens.begin(), gens.end(), rng);
        GroebnerBasis G = groebner(Ideal::of(kXY, gens), MonomialOrder::lex(kXY));
        CHECK(G.elements == ref.elements);
    }
}

TEST_CASE("normal form reduces modulo the basis") {
    GroebnerBasis G = groebner(Ideal::of(kXY, {P("x1 - x2")}),
                               MonomialOrder::lex(kXY));
    CHECK(normal_form(P("x1^2"), G) == P("x2^2"));
    CHECK(normal_form(P("x2^3 + 1"), G) == P("x2^3 + 1"));
    // Ideal membership via zero normal form.
    CHECK(normal_form(P("x1^2 - x2^2"), G).is_zero());
}

TEST_CASE("elimination agrees with the Sylvester resultant") {
    // The resultant always lies in the elimination ideal; check membership
    // via the reduced basis over the kept variables.
    std::uniform_int_distribution<int> coef(-4, 4);
    int nontrivial = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Term> pt, qt;
        auto rnd = [&](int dt, int dx) {
            std::vector<Term> ts;
            for (int et = 0; et <= dt; ++et)
                for (int ex = 0; ex <= dx; ++ex) {
                    int c = coef(rng);
                    if (c == 0) continue;
                    Monomial m;
                    m.e[0] = static_cast<std::uint8_t>(et);
                    m.e[1] = static_cast<std::uint8_t>(ex);
                    ts.push_back({m, Rational(c)});
                }
            return Poly::from_terms(kTXY, ts);
        };
        Poly p = rnd(2, 2);
        Poly q = rnd(2, 2);
        if (p.degree_in(Var::t1) < 1 || q.degree_in(Var::t1) < 1) continue;
        Poly res = sylvester_resultant(p, q, Var::t1);
        Ideal E = eliminate(Ideal::of(kTXY, {p, q}), {Var::x1, Var::x2});
        if (E.is_zero_ideal()) {
            CHECK(res.is_zero());
            continue;
        }
        GroebnerBasis G = groebner(E, MonomialOrder::lex(E.ring()));
        CHECK(normal_form(res.over(E.ring()), G).is_zero());
        ++nontrivial;
    }
    CHECK(nontrivial >= 10);
}

TEST_CASE("elimination strategies produce identical generators") {
    Ideal I = Ideal::of(kTXY, {P("t1^2 - x1", kTXY), P("t1^3 - x2", kTXY)});
    Ideal a = eliminate(I, {Var::x1, Var::x2}, {}, ElimStrategy::lex_block);
    Ideal b = eliminate(I, {Var::x1, Var::x2}, {}, ElimStrategy::staged);
    REQUIRE(a.generators().size() == b.generators().size());
    for (std::size_t i = 0; i < a.generators().size(); ++i)
        CHECK(a.generators()[i] == b.generators()[i]);
    // The twisted-cubic-style projection: x1^3 = x2^2.
    REQUIRE(a.generators().size() == 1);
    CHECK(normalize(a.generators()[0]) == P("x1^3 - x2^2"));
}

TEST_CASE("eliminating everything or nothing") {
    Ideal I = Ideal::of(kXY, {P("x1 - 1"), P("x2 - 2")});
    Ideal keep_all = eliminate(I, {Var::x1, Var::x2});
    CHECK(keep_all.generators().size() == 2);
    Ideal none = eliminate(Ideal::of(kXY, {P("x1 - x2")}), {Var::x1});
    CHECK(none.is_zero_ideal()); // projection of a line onto an axis is dense
    Ideal z = eliminate(Ideal::of(kXY, {}), {Var::x1});
    CHECK(z.is_zero_ideal());
}

TEST_CASE("counting distinct solutions of circle-line meets") {
    // Secant: two points.
    CHECK(count_distinct_solutions(
              Ideal::of(kXY, {P("x1^2 + x2^2 - 1"), P("x1 - x2")})) == 2);
    // Tangent: one doubled point, counted once.
    CHECK(count_distinct_solutions(
              Ideal::of(kXY, {P("x1^2 + x2^2 - 1"), P("x1 - 1")})) == 1);
    // Line missing the real circle still meets it in two conjugate points.
    CHECK(count_distinct_solutions(
              Ideal::of(kXY, {P("x1^2 + x2^2 - 1"), P("x1 - 3")})) == 2);
    // Empty variety.
    CHECK(count_distinct_solutions(
              Ideal::of(kXY, {P("x1"), P("x1 - 1")})) == 0);
    // Not zero-dimensional.
    CHECK_THROWS_AS(count_distinct_solutions(Ideal::of(kXY, {P("x1 - x2")})),
                    DimensionError);
    CHECK_THROWS_AS(count_distinct_solutions(Ideal::of(kXY, {})), DimensionError);
}

TEST_CASE("pair budget exhaustion raises instead of truncating") {
    Budget tiny;
    tiny.max_pairs = 1;
    Ideal I = Ideal::of(kXY, {P("x1^3 - 2*x1*x2"), P("x1^2*x2 - 2*x2^2 + x1"),
                              P("x1*x2^2 - x2 + 1")});
    CHECK_THROWS_AS(groebner(I, MonomialOrder::lex(kXY), tiny), BudgetError);
}
