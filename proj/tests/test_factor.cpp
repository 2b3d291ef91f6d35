#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "errors.hpp"
#include "factor.hpp"

using namespace conchoid;

namespace {

const Ring kXY({Var::x1, Var::x2});
const Ring kD({Var::d});

Poly xy(const std::string& text) { return Poly::parse(text, kXY); }

Poly reassemble(const Factorization& f, const Ring& ring) {
    Poly prod = Poly::constant(ring, f.unit);
    for (const auto& [factor, mult] : f.factors) prod *= factor.pow(mult);
    return prod;
}

} // namespace

TEST_CASE("difference of squares in the distance variable") {
    Factorization f = factor_univariate(Poly::parse("d^2 - 1", kD));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == Poly::parse("d - 1", kD));
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].first == Poly::parse("d + 1", kD));
    CHECK(f.unit == Rational(1));
}

TEST_CASE("offset circle pair splits into two circles") {
    Factorization f =
        factor_bivariate(xy("x1^4 + 2*x1^2*x2^2 - 10*x1^2 + x2^4 - 10*x2^2 + 9"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == xy("x1^2 + x2^2 - 9"));
    CHECK(f.factors[1].first == xy("x1^2 + x2^2 - 1"));
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].second == 1);
    CHECK(f.unit == Rational(1));
}

TEST_CASE("degree-8 conchoid splits into circle and quartic") {
    Factorization f = factor_bivariate(
        xy("x1^6 + 3*x1^4*x2^2 - 19*x1^4 - 32*x1^3 + 3*x1^2*x2^4 - 38*x1^2*x2^2"
           " + 3*x1^2 - 32*x1*x2^2 + 32*x1 + x2^6 - 19*x2^4 + 3*x2^2 + 15"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == xy("x1^2 + x2^2 - 1"));
    CHECK(f.factors[1].first ==
          xy("x1^4 + 2*x2^2*x1^2 - 18*x1^2 - 32*x1 - 18*x2^2 - 15 + x2^4"));
    CHECK(f.unit == Rational(1));
}

TEST_CASE("parabola conchoid polynomial is irreducible") {
    Factorization f = factor_bivariate(
        xy("16*x1^8 + 32*x2^2*x1^6 + 16*x1^4*x2^4 + 32*x2*x1^6 - 32*x1^2*x2^5"
           " + 24*x1^6 - 24*x1^4*x2^2 - 96*x1^2*x2^4 + 16*x2^6 - 8*x2*x1^4"
           " - 120*x1^2*x2^3 + 64*x2^5 + 25*x1^4 - 68*x1^2*x2^2 + 92*x2^4"
           " + 48*x2^3 + 12*x1^2 - 8*x2^2 - 16*x2 - 4"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].second == 1);
}

TEST_CASE("univariate multiplicities recovered by squarefree decomposition") {
    Ring rx({Var::x1});
    Poly p = Poly::parse("x1", rx) * Poly::parse("x1 - 1", rx).pow(2) *
             Poly::parse("x1 + 2", rx).pow(3);
    Factorization f = factor_univariate(p);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<Poly, int>(Poly::parse("x1", rx), 1));
    CHECK(f.factors[1] == std::pair<Poly, int>(Poly::parse("x1 - 1", rx), 2));
    CHECK(f.factors[2] == std::pair<Poly, int>(Poly::parse("x1 + 2", rx), 3));
    CHECK(reassemble(f, rx) == p);
}

TEST_CASE("scalar multiples factor identically with a scaled unit") {
    Poly p = Poly::parse("d^2 - 1", kD);
    Factorization base = factor_univariate(p);
    Factorization scaled = factor_univariate(Rational(3, 7) * p);
    REQUIRE(scaled.factors.size() == base.factors.size());
    for (size_t i = 0; i < base.factors.size(); ++i)
        CHECK(scaled.factors[i] == base.factors[i]);
    CHECK(scaled.unit == Rational(3, 7) * base.unit);
}

TEST_CASE("non-monic univariate splits with integer factors") {
    Ring rx({Var::x1});
    Factorization f = factor_univariate(Poly::parse("6*x1^2 + x1 - 2", rx));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == Poly::parse("2*x1 - 1", rx));
    CHECK(f.factors[1].first == Poly::parse("3*x1 + 2", rx));
}

TEST_CASE("sixth roots of unity polynomial") {
    Ring rx({Var::x1});
    Factorization f = factor_univariate(Poly::parse("x1^6 - 1", rx));
    REQUIRE(f.factors.size() == 4);
    CHECK(reassemble(f, rx) == Poly::parse("x1^6 - 1", rx));
    for (const auto& [factor, mult] : f.factors) CHECK(mult == 1);
}

TEST_CASE("quartic irreducible by mod-2 argument stays whole") {
    Ring rx({Var::x1});
    Factorization f = factor_univariate(Poly::parse("x1^4 + x1 + 1", rx));
    REQUIRE(f.factors.size() == 1);
}

TEST_CASE("bivariate multiplicity") {
    Factorization f = factor_bivariate(xy("x1^3 + x1^2*x2 - x1*x2^2 - x2^3"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Poly, int>(xy("x1 - x2"), 1));
    CHECK(f.factors[1] == std::pair<Poly, int>(xy("x1 + x2"), 2));
}

TEST_CASE("content in the second variable is factored out") {
    Factorization f = factor_bivariate(xy("x1^2*x2 - x1^2 + x2^2 - x2"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Poly, int>(xy("x2 - 1"), 1));
    CHECK(f.factors[1] == std::pair<Poly, int>(xy("x1^2 + x2"), 1));
}

TEST_CASE("randomized products of positive-definite conics refactor exactly") {
    std::mt19937_64 rng(0x5eedULL);
    auto coef = [&](int lo, int hi) {
        return Rational(static_cast<long>(lo + rng() % (hi - lo + 1)));
    };
    int nontrivial = 0;
    for (int trial = 0; trial < 20; ++trial) {
        // a*x1^2 + b*x2^2 + c with a, b, c > 0 has no real zeros, hence no
        // linear factor over Q, hence is irreducible over Q.
        std::vector<Poly> parts;
        int count = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < count; ++i) {
            Poly part = coef(1, 5) * xy("x1^2") + coef(1, 5) * xy("x2^2") +
                        Poly::constant(kXY, coef(1, 9));
            parts.push_back(normalize(part));
        }
        std::sort(parts.begin(), parts.end(),
                  [](const Poly& a, const Poly& b) { return compare_polys(a, b) < 0; });
        bool distinct = true;
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] == parts[i + 1]) distinct = false;
        if (!distinct) continue;
        ++nontrivial;
        Poly prod = Poly::constant(kXY, 1);
        for (const Poly& part : parts) prod *= part;
        Factorization f = factor_bivariate(prod);
        REQUIRE(f.factors.size() == parts.size());
        for (size_t i = 0; i < parts.size(); ++i) {
            CHECK(f.factors[i].first == parts[i]);
            CHECK(f.factors[i].second == 1);
        }
        CHECK(reassemble(f, kXY) == prod);
    }
    CHECK(nontrivial >= 10);
}

TEST_CASE("squarefree factorization is independent of the evaluation point") {
    Poly p = xy("x1^6 + 3*x1^4*x2^2 - 19*x1^4 - 32*x1^3 + 3*x1^2*x2^4"
                " - 38*x1^2*x2^2 + 3*x1^2 - 32*x1*x2^2 + 32*x1 + x2^6 - 19*x2^4"
                " + 3*x2^2 + 15");
    std::vector<Poly> a = factor_squarefree_bivariate(p, 0);
    std::vector<Poly> b = factor_squarefree_bivariate(p, 3);
    auto by_order = [](const Poly& x, const Poly& y) { return compare_polys(x, y) < 0; };
    std::sort(a.begin(), a.end(), by_order);
    std::sort(b.begin(), b.end(), by_order);
    CHECK(a == b);
}

TEST_CASE("constants and too many variables are rejected") {
    CHECK_THROWS_AS(factor_univariate(Poly::constant(kD, 7)), DomainError);
    CHECK_THROWS_AS(factor_bivariate(Poly::constant(kXY, 1)), DomainError);
    Ring three({Var::x1, Var::x2, Var::d});
    CHECK_THROWS_AS(factor(Poly::parse("x1*x2*d - 1", three)), DomainError);
    CHECK_THROWS_AS(factor_univariate(xy("x1*x2")), DomainError);
}

TEST_CASE("dispatching factor picks the right routine") {
    Factorization f = factor(xy("x1^2 - x2^2"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == xy("x1 - x2"));
    CHECK(f.factors[1].first == xy("x1 + x2"));
    Factorization u = factor(Poly::parse("d^2 - 4", kD));
    REQUIRE(u.factors.size() == 2);
}
