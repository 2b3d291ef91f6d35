// End-to-end acceptance run: one check per shipped guarantee, each printed as
// a single pass/fail line with its runtime so the suite doubles as a release
// report.  Every expected value here is frozen from an independent source;
// the unit suites carry the derivations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../src/analysis.hpp"
#include "../src/detect.hpp"
#include "../src/errors.hpp"

using namespace conchoid;

namespace {

const Ring kXY({Var::x1, Var::x2});
const Ring kYY({Var::y1, Var::y2});
const Ring kXYD({Var::x1, Var::x2, Var::d});

Poly xy(const std::string& text) { return Poly::parse(text, kXY); }
Poly yy(const std::string& text) { return Poly::parse(text, kYY); }

const char* kParabolaConchoid =
    "16*x1^8 + 32*x2^2*x1^6 + 16*x1^4*x2^4 + 32*x2*x1^6 - 32*x1^2*x2^5"
    " + 24*x1^6 - 24*x1^4*x2^2 - 96*x1^2*x2^4 + 16*x2^6 - 8*x2*x1^4"
    " - 120*x1^2*x2^3 + 64*x2^5 + 25*x1^4 - 68*x1^2*x2^2 + 92*x2^4"
    " + 48*x2^3 + 12*x1^2 - 8*x2^2 - 16*x2 - 4";
const char* kParabolaGenericConchoid =
    "-d^2 + x2^2 + 4*x2^3 - 2*x2*x1^2 - 4*x2*d^2 - 6*x2^2*x1^2 - 6*x2^2*d^2"
    " + 6*x2^4 + 8*x1^2*x2*d^2 - 8*x1^2*x2^3 + 3*x1^2*d^2 + x1^4 + 4*x2^5"
    " - x2^2*x1^4 - 6*x2^4*x1^2 + 7*x2^2*x1^2*d^2 - 2*x1^4*x2*d^2 + 2*x1^6"
    " + 2*x1^6*x2 + 2*x1^4*d^2 - 2*x1^2*x2^5 + 2*x1^6*x2^2 + x1^4*x2^4"
    " - 2*x2^2*d^2*x1^4 + 2*x2^3*d^2*x1^2 + x2^6 - x2^4*d^2 - 2*x1^6*d^2"
    " + x1^8 + x1^4*d^4 - 4*x2^3*d^2";
const char* kNicomedes = "x2^2*x1^2 + x2^4 - 2*x2^3 - 3*x2^2 + 8*x2 - 4";
const char* kLimacon = "x1^4 + 2*x2^2*x1^2 - 9*x1^2 - 4*x1 - 9*x2^2 + 12 + x2^4";
const char* kCardioid = "x1^4 + 2*x2^2*x1^2 - 6*x1^2 - 8*x1 - 6*x2^2 - 3 + x2^4";
const char* kCardioidConchoidQuartic =
    "x1^4 + 2*x2^2*x1^2 - 18*x1^2 - 32*x1 - 18*x2^2 - 15 + x2^4";
const char* kLimaconD3 = "x1^4 + 2*x2^2*x1^2 - 11*x1^2 - 18*x1 - 11*x2^2 - 8 + x2^4";
const char* kLimaconD1 = "x1^4 + 2*x2^2*x1^2 - 3*x1^2 - 2*x1 - 3*x2^2 + x2^4";
const char* kQuarticBase =
    "-3 + 9*y1^2 + 9*y2^2 + 2*y2 - 4*y2^4 - 4*y1^4 - 8*y1^2*y2^2";
const char* kQuarticSimple = "x1^4 + 2*x2^2*x1^2 - 3*x1^2 - 3*x2^2 - 2*x2 + x2^4";
const char* kDetectPartner =
    "4*x1^4 + 16*x1^3 + 8*x1^2*x2^2 + 15*x1^2 + 16*x1*x2^2 - 4*x1 + 4*x2^4"
    " - x2^2 - 4";

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// Runs one criterion body, folds its runtime limit into the verdict, and
// prints the report line.  Exceptions fail the criterion with a note.
bool criterion(int number, double limit_seconds, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    double elapsed = seconds_since(start);
    if (elapsed >= limit_seconds) {
        ok = false;
        note = "over the " + std::to_string(limit_seconds) + " s limit";
    }
    std::printf("criterion %d: %s (%.2f s)%s%s\n", number, ok ? "PASS" : "FAIL",
                elapsed, note.empty() ? "" : " — ", note.c_str());
    std::fflush(stdout);
    return ok;
}

bool vanishes_at_origin(const Poly& p) {
    return p.evaluate({{Var::x1, 0}, {Var::x2, 0}}).is_zero();
}

} // namespace

TEST_CASE("parabola conchoid is exact") {
    CHECK(criterion(1, 30, [] {
        ConchoidResult r =
            compute_conchoid(Curve(yy("y2 - y1^2")), Focus{0, -1}, Rational(1, 2));
        return r.hypersurface == xy(kParabolaConchoid) &&
               r.residual_generators.empty();
    }));
}

TEST_CASE("generic parabola conchoid specializes to the numeric one") {
    CHECK(criterion(2, 120, [] {
        ConchoidResult g =
            compute_generic_conchoid(Curve(yy("y2 - y1^2")), Focus{0, -1});
        if (g.hypersurface != Poly::parse(kParabolaGenericConchoid, kXYD))
            return false;
        Poly at_half =
            normalize(g.hypersurface.evaluate({{Var::d, Rational(1, 2)}}));
        return at_half == xy(kParabolaConchoid);
    }));
}

TEST_CASE("conchoid of a detached line is exact") {
    CHECK(criterion(3, 10, [] {
        ConchoidResult r = compute_conchoid(Curve(yy("y2")), Focus{0, 1}, 2);
        return r.hypersurface == xy(kNicomedes) && r.residual_generators.empty();
    }));
}

TEST_CASE("circle conchoids from the circle and from its center are exact") {
    CHECK(criterion(4, 10, [] {
        ConchoidResult on_circle =
            compute_conchoid(Curve(yy("y1^2 + y2^2 - 4")), Focus{-2, 0}, 1);
        if (on_circle.hypersurface != xy(kLimacon)) return false;

        ConchoidResult centered =
            compute_conchoid(Curve(yy("y1^2 + y2^2 - 4")), Focus{0, 0}, 1);
        Poly outer = xy("x1^2 + x2^2 - 9");
        Poly inner = xy("x1^2 + x2^2 - 1");
        if (centered.hypersurface != normalize(outer * inner)) return false;
        std::vector<Component> parts = components(centered);
        return parts.size() == 2 && parts[0].curve.xy_form() == outer &&
               parts[1].curve.xy_form() == inner;
    }));
}

TEST_CASE("circle centered at the focus with radius d degenerates as stated") {
    CHECK(criterion(5, 30, [] {
        ConchoidResult r =
            compute_conchoid(Curve(yy("y1^2 + y2^2 - 1")), Focus{0, 0}, 1);
        if (r.hypersurface != xy("x1^2 + x2^2 - 4")) return false;
        if (!r.degenerate_circle_case || r.residual_generators.empty())
            return false;
        for (const Poly& g : r.residual_generators)
            if (!vanishes_at_origin(g)) return false;
        Ideal residual = Ideal::of(kXY, r.residual_generators);
        return count_distinct_solutions(residual) == 1;
    }));
}

TEST_CASE("cardioid chain computes, splits, and classifies as stated") {
    CHECK(criterion(6, 120, [] {
        Curve circle(yy("y1^2 + y2^2 - 1"));
        Focus A{-1, 0};
        ConchoidResult first = compute_conchoid(circle, A, 2);
        if (first.hypersurface != xy(kCardioid)) return false;

        Curve cardioid(first.hypersurface);
        ConchoidResult second = compute_conchoid(cardioid, A, 2);
        std::vector<Component> parts = components(second);
        if (parts.size() != 2) return false;
        if (parts[0].curve.xy_form() != xy("x1^2 + x2^2 - 1")) return false;
        if (parts[1].curve.xy_form() != xy(kCardioidConchoidQuartic)) return false;
        Component circle_part = classify(parts[0], cardioid, A, 2);
        if (circle_part.classification != Classification::Special) return false;
        if (!circle_part.witness.has_value() ||
            circle_part.witness->hypersurface != xy(kCardioid))
            return false;
        if (classify(parts[1], cardioid, A, 2).classification !=
            Classification::Simple)
            return false;

        ConchoidResult third = compute_conchoid(cardioid, A, 1);
        std::vector<Component> limacons = components(third);
        if (limacons.size() != 2) return false;
        if (limacons[0].curve.xy_form() != xy(kLimaconD1)) return false;
        if (limacons[1].curve.xy_form() != xy(kLimaconD3)) return false;
        return conchoid_sum_check(cardioid, A, 2, 1);
    }));
}

TEST_CASE("a line through the focus is its own conchoid with doubled fibers") {
    CHECK(criterion(7, 10, [] {
        Curve line(yy("y2"));
        Focus A{0, 0};
        for (const Rational& d : {Rational(1), Rational(3), Rational(1, 2)}) {
            ConchoidResult r = compute_conchoid(line, A, d);
            if (r.hypersurface != xy("x2")) return false;
            std::vector<Component> parts = components(r);
            if (parts.size() != 1) return false;
            if (classify(parts[0], line, A, d).classification !=
                Classification::Special)
                return false;
            std::vector<int> counts =
                fiber_cardinalities(Curve(xy("x2")), line, A, d);
            if (counts.size() != 5) return false;
            for (int n : counts)
                if (n != 2) return false;
        }
        return true;
    }));
}

TEST_CASE("quartic base splits and its simple component inverts birationally") {
    CHECK(criterion(8, 120, [] {
        Curve base(yy(kQuarticBase));
        Focus A{0, -1};
        ConchoidResult r = compute_conchoid(base, A, Rational(1, 2));
        std::vector<Component> parts = components(r);
        if (parts.size() != 2) return false;
        if (parts[0].curve.xy_form() != xy("x1^2 + x2^2 - 1")) return false;
        if (parts[1].curve.xy_form() != xy(kQuarticSimple)) return false;
        if (classify(parts[0], base, A, Rational(1, 2)).classification !=
            Classification::Special)
            return false;
        if (classify(parts[1], base, A, Rational(1, 2)).classification !=
            Classification::Simple)
            return false;

        Curve M(xy(kQuarticSimple));
        RationalMap phi{
            {xy("-x1^3 + 6*x1 - x1*x2^2 + 4*x1*x2"), xy("4*x2 + 4")},
            {xy("-x2^2 + 4*x2 - x1^2 + 2"), xy("4")},
            M,
            base,
        };
        RationalMap psi{
            {yy("4*y1^3 + 4*y1*y2^2 + 8*y1*y2 + 3*y1"), yy("8*y2 + 8")},
            {yy("4*y1^2 + 4*y2^2 + 8*y2 - 5"), yy("8")},
            base,
            M,
        };
        return verify_rational_pair(phi, psi) && verify_rational_pair(psi, phi);
    }));
}

TEST_CASE("detection recovers the circle and distances behind the limacon") {
    CHECK(criterion(9, 300, [] {
        Curve limacon(xy(kLimacon));
        Focus A{-2, 0};
        std::vector<Curve> bases = candidate_bases(limacon, A);
        if (bases.size() != 2) return false;
        if (bases[0].xy_form() != xy("x1^2 + x2^2 - 4")) return false;
        if (bases[1].xy_form() != xy(kDetectPartner)) return false;

        std::vector<Rational> circle_d = solve_distances(limacon, A, bases[0]);
        if (circle_d != std::vector<Rational>{1, -1}) return false;
        std::vector<Rational> partner_d = solve_distances(limacon, A, bases[1]);
        if (!partner_d.empty()) return false;

        ConchoidResult forward = compute_conchoid(bases[0], A, 1);
        return forward.hypersurface == limacon.xy_form();
    }));
}

TEST_CASE("focus loci of the coordinate lines restrict the matching coordinate") {
    CHECK(criterion(10, 60, [] {
        FocusLocus vertical = focus_locus(Curve(xy("x1")));
        if (vertical.generators.size() != 1) return false;
        if (vertical.generators[0] !=
            Poly::parse("a", vertical.generators[0].ring()))
            return false;
        FocusLocus horizontal = focus_locus(Curve(xy("x2")));
        if (horizontal.generators.size() != 1) return false;
        return horizontal.generators[0] ==
               Poly::parse("b", horizontal.generators[0].ring());
    }));
}

namespace {

struct Fixture {
    const char* base;
    Focus focus;
    Rational d;
};

Curve fixture_curve(const char* text) {
    bool in_y = std::string(text).find('y') != std::string::npos;
    return Curve(Poly::parse(text, in_y ? kYY : kXY));
}

// (a) Every fixture's conchoid has at most two rational components.
bool at_most_two_components() {
    const Fixture fixtures[] = {
        {"y2 - y1^2", {0, -1}, Rational(1, 2)},
        {"y2", {0, 1}, 2},
        {"y2", {0, 0}, 3},
        {"y1^2 + y2^2 - 4", {-2, 0}, 1},
        {"y1^2 + y2^2 - 4", {0, 0}, 1},
        {"y1^2 + y2^2 - 1", {-1, 0}, 2},
        {"y1^2 + y2^2 - 1", {0, 0}, 1},
        {kCardioid, {-1, 0}, 2},
        {kCardioid, {-1, 0}, 1},
        {kQuarticBase, {0, -1}, Rational(1, 2)},
    };
    for (const Fixture& fx : fixtures) {
        ConchoidResult r = compute_conchoid(fixture_curve(fx.base), fx.focus, fx.d);
        if (components(r).size() > 2) return false;
    }
    return true;
}

// (b) Fiber cardinality stays at most two on thirty exactly-sampled points.
bool fibers_at_most_two() {
    int sampled = 0;
    auto check = [&sampled](const char* part, const char* base, Focus A,
                            const Rational& d) {
        std::vector<int> counts =
            fiber_cardinalities(Curve(xy(part)), fixture_curve(base), A, d);
        sampled += static_cast<int>(counts.size());
        for (int n : counts)
            if (n < 1 || n > 2) return false;
        return true;
    };
    if (!check(kNicomedes, "y2", Focus{0, 1}, 2)) return false;
    for (const Rational& d : {Rational(1), Rational(3), Rational(1, 2)})
        if (!check("x2", "y2", Focus{0, 0}, d)) return false;
    if (!check("x1^2 + x2^2 - 9", "y1^2 + y2^2 - 4", Focus{0, 0}, 1)) return false;
    if (!check("x1^2 + x2^2 - 1", "y1^2 + y2^2 - 4", Focus{0, 0}, 1)) return false;
    return sampled >= 20;
}

// (c) Every fixture whose base is not a line through the focus has at least
// one simple component.
bool simple_component_everywhere() {
    const Fixture fixtures[] = {
        {"y2 - y1^2", {0, -1}, Rational(1, 2)},
        {"y2", {0, 1}, 2},
        {"y1^2 + y2^2 - 4", {-2, 0}, 1},
        {kCardioid, {-1, 0}, 2},
        {kCardioid, {-1, 0}, 1},
        {kQuarticBase, {0, -1}, Rational(1, 2)},
    };
    for (const Fixture& fx : fixtures) {
        Curve base = fixture_curve(fx.base);
        ConchoidResult r = compute_conchoid(base, fx.focus, fx.d);
        int simple = 0;
        for (const Component& part : components(r))
            if (classify(part, base, fx.focus, fx.d).classification ==
                Classification::Simple)
                ++simple;
        if (simple < 1) return false;
    }
    return true;
}

// (d) The generic conchoid specializes to the numeric one at random
// distances.
bool specialization_at_random_distances() {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    const Fixture fixtures[] = {
        {"y2", {0, 1}, 0},
        {"y1^2 + y2^2 - 4", {-2, 0}, 0},
        {"y2 - y1^2", {0, -1}, 0},
    };
    for (const Fixture& fx : fixtures) {
        Curve base = fixture_curve(fx.base);
        ConchoidResult generic = compute_generic_conchoid(base, fx.focus);
        for (int trial = 0; trial < 4; ++trial) {
            Rational d(static_cast<long>(next() % 11 + 1),
                       static_cast<long>(next() % 7 + 1));
            d.canonicalize();
            if (next() % 2) d = -d;
            Poly specialized = normalize(
                squarefree_part(generic.hypersurface.evaluate({{Var::d, d}})));
            ConchoidResult numeric = compute_conchoid(base, fx.focus, d);
            if (specialized != numeric.hypersurface) return false;
        }
    }
    return true;
}

// (e) The conchoid is invariant under negating the distance.
bool distance_sign_symmetry() {
    const Fixture fixtures[] = {
        {"y2 - y1^2", {0, -1}, Rational(1, 2)},
        {"y2", {0, 1}, 2},
        {"y2", {0, 0}, 3},
        {"y1^2 + y2^2 - 4", {-2, 0}, 1},
        {"y1^2 + y2^2 - 4", {0, 0}, 1},
        {"y1^2 + y2^2 - 1", {0, 0}, 1},
        {kCardioid, {-1, 0}, 2},
        {kQuarticBase, {0, -1}, Rational(1, 2)},
    };
    for (const Fixture& fx : fixtures) {
        Curve base = fixture_curve(fx.base);
        ConchoidResult plus = compute_conchoid(base, fx.focus, fx.d);
        ConchoidResult minus = compute_conchoid(base, fx.focus, -fx.d);
        if (plus.hypersurface != minus.hypersurface) return false;
        if (plus.residual_generators != minus.residual_generators) return false;
        if (plus.degenerate_circle_case != minus.degenerate_circle_case)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("property suites hold across the fixture corpus") {
    CHECK(criterion(11, 600, [] {
        struct Suite {
            const char* name;
            bool (*run)();
        };
        const Suite suites[] = {
            {"components", at_most_two_components},
            {"fibers", fibers_at_most_two},
            {"simple", simple_component_everywhere},
            {"specialization", specialization_at_random_distances},
            {"symmetry", distance_sign_symmetry},
        };
        bool all = true;
        for (const Suite& suite : suites) {
            auto start = std::chrono::steady_clock::now();
            bool ok = suite.run();
            double elapsed = seconds_since(start);
            std::printf("  suite %s: %s (%.2f s)\n", suite.name,
                        ok ? "PASS" : "FAIL", elapsed);
            all = all && ok && elapsed < 600;
        }
        return all;
    }));
}
