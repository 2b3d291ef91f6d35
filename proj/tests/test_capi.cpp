#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <conchoid/conchoid.h>

namespace {

// Takes ownership of a C string result and returns it as std::string.
std::string take(char* text) {
    std::string out = text ? text : "";
    conch_free_string(text);
    return out;
}

const char* kParabolaConchoid =
    "16*x1^8 + 32*x1^6*x2^2 + 32*x1^6*x2 + 24*x1^6 + 16*x1^4*x2^4 - 24*x1^4*x2^2"
    " - 8*x1^4*x2 + 25*x1^4 - 32*x1^2*x2^5 - 96*x1^2*x2^4 - 120*x1^2*x2^3"
    " - 68*x1^2*x2^2 + 12*x1^2 + 16*x2^6 + 64*x2^5 + 92*x2^4 + 48*x2^3 - 8*x2^2"
    " - 16*x2 - 4";

const char* kCardioid = "x1^4 + 2*x2^2*x1^2 - 6*x1^2 - 8*x1 - 6*x2^2 - 3 + x2^4";

} // namespace

TEST_CASE("parabola conchoid matches the library fixture") {
    conch_curve* parabola = nullptr;
    REQUIRE(conch_curve_parse("y2 - y1^2", &parabola) == CONCH_OK);

    conch_result* result = nullptr;
    REQUIRE(conch_conchoid(parabola, "0", "-1", "1/2", nullptr, &result) == CONCH_OK);
    char* text = nullptr;
    REQUIRE(conch_result_hypersurface(result, &text) == CONCH_OK);
    CHECK(take(text) == kParabolaConchoid);
    CHECK(conch_result_residual_count(result) == 0);

    conch_result_free(result);
    conch_curve_free(parabola);
}

TEST_CASE("degenerate circle reports its residual generators") {
    conch_curve* circle = nullptr;
    REQUIRE(conch_curve_parse("y1^2 + y2^2 - 1", &circle) == CONCH_OK);

    conch_result* result = nullptr;
    REQUIRE(conch_conchoid(circle, "0", "0", "1", nullptr, &result) == CONCH_OK);
    char* text = nullptr;
    REQUIRE(conch_result_hypersurface(result, &text) == CONCH_OK);
    CHECK(take(text) == "x1^2 + x2^2 - 4");
    CHECK(conch_result_residual_count(result) > 0);

    conch_result_free(result);
    conch_curve_free(circle);
}

TEST_CASE("generic conchoid carries the symbolic distance") {
    conch_curve* line = nullptr;
    REQUIRE(conch_curve_parse("y2", &line) == CONCH_OK);

    conch_result* result = nullptr;
    REQUIRE(conch_generic_conchoid(line, "0", "1", nullptr, &result) == CONCH_OK);
    char* text = nullptr;
    REQUIRE(conch_result_hypersurface(result, &text) == CONCH_OK);
    CHECK(take(text).find("d^2") != std::string::npos);

    conch_result_free(result);
    conch_curve_free(line);
}

TEST_CASE("factorization splits the centered limacon into circles") {
    conch_factors* factors = nullptr;
    REQUIRE(conch_factor("x1^4 + 2*x2^2*x1^2 - 10*x1^2 + x2^4 - 10*x2^2 + 9",
                         &factors) == CONCH_OK);
    char* unit = nullptr;
    REQUIRE(conch_factors_unit(factors, &unit) == CONCH_OK);
    CHECK(take(unit) == "1");
    REQUIRE(conch_factors_count(factors) == 2);

    char* first = nullptr;
    char* second = nullptr;
    int mult = 0;
    REQUIRE(conch_factors_at(factors, 0, &first, &mult) == CONCH_OK);
    CHECK(take(first) == "x1^2 + x2^2 - 9");
    CHECK(mult == 1);
    REQUIRE(conch_factors_at(factors, 1, &second, &mult) == CONCH_OK);
    CHECK(take(second) == "x1^2 + x2^2 - 1");
    CHECK(mult == 1);

    conch_factors_free(factors);
}

TEST_CASE("components and classification follow the cardioid chain") {
    conch_curve* cardioid = nullptr;
    REQUIRE(conch_curve_parse(kCardioid, &cardioid) == CONCH_OK);

    conch_result* result = nullptr;
    REQUIRE(conch_conchoid(cardioid, "-1", "0", "2", nullptr, &result) == CONCH_OK);
    conch_components* comps = nullptr;
    REQUIRE(conch_components_of(result, &comps) == CONCH_OK);
    REQUIRE(conch_components_count(comps) == 2);
    char* text = nullptr;
    REQUIRE(conch_components_at(comps, 0, &text) == CONCH_OK);
    CHECK(take(text) == "x1^2 + x2^2 - 1");

    char* label = nullptr;
    REQUIRE(conch_classify("x1^2 + x2^2 - 1", cardioid, "-1", "0", "2", nullptr,
                           &label) == CONCH_OK);
    CHECK(take(label) == "Special");

    conch_components_free(comps);
    conch_result_free(result);
    conch_curve_free(cardioid);
}

TEST_CASE("rational map pairs verify across the boundary") {
    const char* quartic_component = "x1^4 + 2*x2^2*x1^2 - 3*x1^2 - 3*x2^2 - 2*x2 + x2^4";
    const char* quartic_base =
        "-3 + 9*y1^2 + 9*y2^2 + 2*y2 - 4*y2^4 - 4*y1^4 - 8*y1^2*y2^2";
    const char* phi =
        "-x1^3 + 6*x1 - x1*x2^2 + 4*x1*x2; 4*x2 + 4; -x2^2 + 4*x2 - x1^2 + 2; 4";
    const char* psi =
        "4*y1^3 + 4*y1*y2^2 + 8*y1*y2 + 3*y1; 8*y2 + 8; 4*y1^2 + 4*y2^2 + 8*y2 - 5; 8";

    int ok = 0;
    REQUIRE(conch_verify_map(quartic_component, quartic_base, phi, nullptr, &ok) ==
            CONCH_OK);
    CHECK(ok == 1);
    REQUIRE(conch_verify_pair(quartic_component, quartic_base, phi, psi, nullptr,
                              &ok) == CONCH_OK);
    CHECK(ok == 1);
}

TEST_CASE("focus locus and detection cross the boundary intact") {
    conch_curve* line = nullptr;
    REQUIRE(conch_curve_parse("x1", &line) == CONCH_OK);
    conch_locus* locus = nullptr;
    REQUIRE(conch_focus_locus(line, nullptr, &locus) == CONCH_OK);
    REQUIRE(conch_locus_count(locus) == 1);
    char* gen = nullptr;
    REQUIRE(conch_locus_at(locus, 0, &gen) == CONCH_OK);
    CHECK(take(gen) == "a");
    conch_locus_free(locus);
    conch_curve_free(line);

    conch_curve* limacon = nullptr;
    REQUIRE(conch_curve_parse(
                "x1^4 + 2*x2^2*x1^2 - 9*x1^2 - 4*x1 - 9*x2^2 + 12 + x2^4",
                &limacon) == CONCH_OK);
    conch_detection* detection = nullptr;
    REQUIRE(conch_detect(limacon, "-2", "0", nullptr, &detection) == CONCH_OK);
    REQUIRE(conch_detection_count(detection) == 2);

    char* base = nullptr;
    REQUIRE(conch_detection_base(detection, 0, &base) == CONCH_OK);
    CHECK(take(base) == "x1^2 + x2^2 - 4");
    int flag = -1;
    REQUIRE(conch_detection_verified(detection, 0, &flag) == CONCH_OK);
    CHECK(flag == 1);
    REQUIRE(conch_detection_distance_count(detection, 0) == 2);
    char* d0 = nullptr;
    REQUIRE(conch_detection_distance(detection, 0, 0, &d0) == CONCH_OK);
    CHECK(take(d0) == "1");
    REQUIRE(conch_detection_distance(detection, 0, 1, &d0) == CONCH_OK);
    CHECK(take(d0) == "-1");

    REQUIRE(conch_detection_verified(detection, 1, &flag) == CONCH_OK);
    CHECK(flag == 0);
    CHECK(conch_detection_distance_count(detection, 1) == 0);

    conch_detection_free(detection);
    conch_curve_free(limacon);
}

TEST_CASE("plotting emits deterministic csv and svg") {
    conch_plot* plot = nullptr;
    REQUIRE(conch_plot_new("-1", "1", "-1", "1", 3, &plot) == CONCH_OK);
    REQUIRE(conch_plot_add(plot, "x1", "base") == CONCH_OK);

    char* csv = nullptr;
    REQUIRE(conch_plot_render(plot, "csv", &csv) == CONCH_OK);
    CHECK(take(csv) ==
          "curve,x,y\n"
          "0,0.000000000,-1.000000000\n"
          "0,0.000000000,0.000000000\n"
          "0,0.000000000,1.000000000\n");

    char* svg = nullptr;
    REQUIRE(conch_plot_render(plot, "svg", &svg) == CONCH_OK);
    std::string body = take(svg);
    CHECK(body.find("<svg ") == 0);
    CHECK(body.find("<circle ") != std::string::npos);

    char* out = nullptr;
    CHECK(conch_plot_render(plot, "png", &out) == CONCH_ERROR_ARGUMENT);
    conch_plot_free(plot);
}

TEST_CASE("failures map to status codes with messages") {
    conch_curve* curve = nullptr;
    CHECK(conch_curve_parse("x1 + $", &curve) == CONCH_ERROR_PARSE);
    CHECK(std::string(conch_last_error()).size() > 0);

    CHECK(conch_curve_parse("x1", nullptr) == CONCH_ERROR_ARGUMENT);

    conch_curve* pair = nullptr;
    REQUIRE(conch_curve_parse("x1^2 + x2^2", &pair) == CONCH_OK);
    conch_detection* detection = nullptr;
    CHECK(conch_detect(pair, "0", "0", nullptr, &detection) == CONCH_ERROR_DOMAIN);
    CHECK(std::string(conch_last_error()) ==
          "curve is a pair of isotropic lines; detection does not apply");
    conch_curve_free(pair);

    conch_curve* parabola = nullptr;
    REQUIRE(conch_curve_parse("y2 - y1^2", &parabola) == CONCH_OK);
    conch_budget tiny = conch_default_budget();
    tiny.max_pairs = 1;
    conch_result* result = nullptr;
    CHECK(conch_conchoid(parabola, "0", "-1", "1/2", &tiny, &result) ==
          CONCH_ERROR_BUDGET);
    conch_curve_free(parabola);

    conch_plot* plot = nullptr;
    CHECK(conch_plot_new("1", "1", "0", "1", 3, &plot) == CONCH_ERROR_DOMAIN);
    CHECK(conch_plot_new("0", "x", "0", "1", 3, &plot) == CONCH_ERROR_PARSE);
}
