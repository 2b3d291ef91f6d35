#include "conchoid/conchoid.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "conchoid.hpp"
#include "detect.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "render.hpp"

using namespace conchoid;

struct conch_curve {
    Curve value;
};
struct conch_result {
    ConchoidResult value;
};
struct conch_factors {
    Factorization value;
};
struct conch_components {
    std::vector<Component> value;
};
struct conch_locus {
    FocusLocus value;
};
struct conch_detection {
    DetectionReport value;
};
struct conch_plot {
    PlotSpec spec;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

conch_status fail(conch_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs the body, translating the library's exceptions to status codes.
template <typename F>
conch_status guarded(F&& body) {
    try {
        body();
        return CONCH_OK;
    } catch (const ParseError& e) {
        return fail(CONCH_ERROR_PARSE, e.what());
    } catch (const BudgetError& e) {
        return fail(CONCH_ERROR_BUDGET, e.what());
    } catch (const DomainError& e) {
        return fail(CONCH_ERROR_DOMAIN, e.what());
    } catch (const Error& e) {
        return fail(CONCH_ERROR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(CONCH_ERROR_INTERNAL, e.what());
    }
}

conch_status require(bool ok, const char* what) {
    return ok ? CONCH_OK : fail(CONCH_ERROR_ARGUMENT, what);
}

Budget to_budget(const conch_budget* budget) {
    Budget out;
    if (budget) {
        out.max_pairs = budget->max_pairs;
        out.max_degree = budget->max_degree;
    }
    return out;
}

// Curves may be written over x1,x2 or y1,y2; polynomials appearing in
// conchoid output may additionally involve the distance variable.
Poly parse_in_any(const std::string& text, const std::vector<Ring>& rings) {
    std::string first_error;
    for (const Ring& ring : rings) {
        try {
            return Poly::parse(text, ring);
        } catch (const ParseError& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    throw ParseError(first_error);
}

Poly parse_curve_poly(const std::string& text) {
    return parse_in_any(text, {Ring({Var::x1, Var::x2}), Ring({Var::y1, Var::y2})});
}

Rational parse_scalar(const char* text) {
    if (!text) throw ParseError("missing rational argument");
    return parse_rational(text);
}

} // namespace

const char* conch_last_error(void) { return g_last_error.c_str(); }

void conch_free_string(char* text) { std::free(text); }

conch_budget conch_default_budget(void) {
    Budget defaults;
    return conch_budget{defaults.max_pairs, defaults.max_degree};
}

/* ---- curves ------------------------------------------------------------ */

conch_status conch_curve_parse(const char* text, conch_curve** out) {
    if (conch_status s = require(text && out, "null argument")) return s;
    return guarded([&] { *out = new conch_curve{Curve(parse_curve_poly(text))}; });
}

conch_status conch_curve_format(const conch_curve* curve, char** out) {
    if (conch_status s = require(curve && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(curve->value.xy_form().to_string()); });
}

void conch_curve_free(conch_curve* curve) { delete curve; }

/* ---- conchoid construction --------------------------------------------- */

conch_status conch_conchoid(const conch_curve* base, const char* a, const char* b,
                            const char* d, const conch_budget* budget,
                            conch_result** out) {
    if (conch_status s = require(base && out, "null argument")) return s;
    return guarded([&] {
        Focus focus{parse_scalar(a), parse_scalar(b)};
        *out = new conch_result{
            compute_conchoid(base->value, focus, parse_scalar(d), to_budget(budget))};
    });
}

conch_status conch_generic_conchoid(const conch_curve* base, const char* a,
                                    const char* b, const conch_budget* budget,
                                    conch_result** out) {
    if (conch_status s = require(base && out, "null argument")) return s;
    return guarded([&] {
        Focus focus{parse_scalar(a), parse_scalar(b)};
        *out = new conch_result{
            compute_generic_conchoid(base->value, focus, to_budget(budget))};
    });
}

conch_status conch_result_hypersurface(const conch_result* result, char** out) {
    if (conch_status s = require(result && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(result->value.hypersurface.to_string()); });
}

int conch_result_residual_count(const conch_result* result) {
    return result ? static_cast<int>(result->value.residual_generators.size()) : 0;
}

conch_status conch_result_residual(const conch_result* result, int index, char** out) {
    if (conch_status s = require(result && out, "null argument")) return s;
    if (conch_status s = require(index >= 0 && index < conch_result_residual_count(result),
                                 "residual index out of range"))
        return s;
    return guarded([&] {
        *out = dup_string(result->value.residual_generators[static_cast<std::size_t>(index)].to_string());
    });
}

void conch_result_free(conch_result* result) { delete result; }

/* ---- factorization ----------------------------------------------------- */

conch_status conch_factor(const char* poly_text, conch_factors** out) {
    if (conch_status s = require(poly_text && out, "null argument")) return s;
    return guarded([&] {
        Poly p = parse_in_any(poly_text,
                              {Ring({Var::x1, Var::x2}), Ring({Var::y1, Var::y2}),
                               Ring({Var::x1, Var::x2, Var::d})});
        *out = new conch_factors{factor(p)};
    });
}

conch_status conch_factors_unit(const conch_factors* factors, char** out) {
    if (conch_status s = require(factors && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(to_string(factors->value.unit)); });
}

int conch_factors_count(const conch_factors* factors) {
    return factors ? static_cast<int>(factors->value.factors.size()) : 0;
}

conch_status conch_factors_at(const conch_factors* factors, int index,
                              char** poly_out, int* multiplicity_out) {
    if (conch_status s = require(factors && poly_out && multiplicity_out, "null argument"))
        return s;
    if (conch_status s = require(index >= 0 && index < conch_factors_count(factors),
                                 "factor index out of range"))
        return s;
    return guarded([&] {
        const auto& [poly, multiplicity] =
            factors->value.factors[static_cast<std::size_t>(index)];
        *poly_out = dup_string(poly.to_string());
        *multiplicity_out = multiplicity;
    });
}

void conch_factors_free(conch_factors* factors) { delete factors; }

/* ---- components and classification ------------------------------------- */

conch_status conch_components_of(const conch_result* result, conch_components** out) {
    if (conch_status s = require(result && out, "null argument")) return s;
    return guarded([&] { *out = new conch_components{components(result->value)}; });
}

int conch_components_count(const conch_components* comps) {
    return comps ? static_cast<int>(comps->value.size()) : 0;
}

conch_status conch_components_at(const conch_components* comps, int index, char** out) {
    if (conch_status s = require(comps && out, "null argument")) return s;
    if (conch_status s = require(index >= 0 && index < conch_components_count(comps),
                                 "component index out of range"))
        return s;
    return guarded([&] {
        *out = dup_string(
            comps->value[static_cast<std::size_t>(index)].curve.xy_form().to_string());
    });
}

void conch_components_free(conch_components* comps) { delete comps; }

conch_status conch_classify(const char* component_text, const conch_curve* base,
                            const char* a, const char* b, const char* d,
                            const conch_budget* budget, char** out) {
    if (conch_status s = require(component_text && base && out, "null argument")) return s;
    return guarded([&] {
        Component m{Curve(parse_curve_poly(component_text)), Classification::Undetermined, {}};
        Focus focus{parse_scalar(a), parse_scalar(b)};
        Component r = classify(m, base->value, focus, parse_scalar(d), to_budget(budget));
        *out = dup_string(classification_name(r.classification));
    });
}

/* ---- rational map verification ----------------------------------------- */

namespace {

RationalMap parse_map(const std::string& text, const Curve& source, const Curve& target) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    if (parts.size() != 4)
        throw ParseError("a map is four ';'-separated polynomials: num;den;num;den");
    const Ring& ring = source.ring();
    return RationalMap{{Poly::parse(parts[0], ring), Poly::parse(parts[1], ring)},
                       {Poly::parse(parts[2], ring), Poly::parse(parts[3], ring)},
                       source,
                       target};
}

} // namespace

conch_status conch_verify_map(const char* source_text, const char* target_text,
                              const char* map_text, const conch_budget* budget,
                              int* out) {
    if (conch_status s = require(source_text && target_text && map_text && out,
                                 "null argument"))
        return s;
    return guarded([&] {
        Curve source(parse_curve_poly(source_text));
        Curve target(parse_curve_poly(target_text));
        *out = verify_rational_map(parse_map(map_text, source, target), to_budget(budget))
                   ? 1
                   : 0;
    });
}

conch_status conch_verify_pair(const char* source_text, const char* target_text,
                               const char* map_text, const char* inverse_text,
                               const conch_budget* budget, int* out) {
    if (conch_status s = require(source_text && target_text && map_text &&
                                     inverse_text && out,
                                 "null argument"))
        return s;
    return guarded([&] {
        Curve source(parse_curve_poly(source_text));
        Curve target(parse_curve_poly(target_text));
        RationalMap phi = parse_map(map_text, source, target);
        RationalMap psi = parse_map(inverse_text, target, source);
        *out = verify_rational_pair(phi, psi, to_budget(budget)) ? 1 : 0;
    });
}

/* ---- detection --------------------------------------------------------- */

conch_status conch_focus_locus(const conch_curve* curve, const conch_budget* budget,
                               conch_locus** out) {
    if (conch_status s = require(curve && out, "null argument")) return s;
    return guarded([&] {
        *out = new conch_locus{focus_locus(curve->value, to_budget(budget))};
    });
}

int conch_locus_count(const conch_locus* locus) {
    return locus ? static_cast<int>(locus->value.generators.size()) : 0;
}

conch_status conch_locus_at(const conch_locus* locus, int index, char** out) {
    if (conch_status s = require(locus && out, "null argument")) return s;
    if (conch_status s = require(index >= 0 && index < conch_locus_count(locus),
                                 "locus index out of range"))
        return s;
    return guarded([&] {
        *out = dup_string(
            locus->value.generators[static_cast<std::size_t>(index)].to_string());
    });
}

void conch_locus_free(conch_locus* locus) { delete locus; }

conch_status conch_detect(const conch_curve* curve, const char* a, const char* b,
                          const conch_budget* budget, conch_detection** out) {
    if (conch_status s = require(curve && out, "null argument")) return s;
    return guarded([&] {
        Focus focus{parse_scalar(a), parse_scalar(b)};
        *out = new conch_detection{detect(curve->value, focus, to_budget(budget))};
    });
}

int conch_detection_count(const conch_detection* detection) {
    return detection ? static_cast<int>(detection->value.candidates.size()) : 0;
}

namespace {

conch_status candidate_field(const conch_detection* detection, int index,
                             const void* out_check,
                             conch_status (*fill)(const Candidate&, void*), void* out) {
    if (conch_status s = require(detection && out_check, "null argument")) return s;
    if (conch_status s = require(index >= 0 && index < conch_detection_count(detection),
                                 "candidate index out of range"))
        return s;
    return fill(detection->value.candidates[static_cast<std::size_t>(index)], out);
}

} // namespace

conch_status conch_detection_base(const conch_detection* detection, int index,
                                  char** out) {
    return candidate_field(
        detection, index, out,
        [](const Candidate& c, void* slot) {
            return guarded([&] {
                *static_cast<char**>(slot) = dup_string(c.base.xy_form().to_string());
            });
        },
        out);
}

conch_status conch_detection_verified(const conch_detection* detection, int index,
                                      int* out) {
    return candidate_field(
        detection, index, out,
        [](const Candidate& c, void* slot) {
            *static_cast<int*>(slot) = c.verified ? 1 : 0;
            return CONCH_OK;
        },
        out);
}

conch_status conch_detection_identical(const conch_detection* detection, int index,
                                       int* out) {
    return candidate_field(
        detection, index, out,
        [](const Candidate& c, void* slot) {
            *static_cast<int*>(slot) = c.identically_matching ? 1 : 0;
            return CONCH_OK;
        },
        out);
}

conch_status conch_detection_irrational(const conch_detection* detection, int index,
                                        int* out) {
    return candidate_field(
        detection, index, out,
        [](const Candidate& c, void* slot) {
            *static_cast<int*>(slot) = c.irrational_candidates ? 1 : 0;
            return CONCH_OK;
        },
        out);
}

int conch_detection_distance_count(const conch_detection* detection, int index) {
    if (!detection || index < 0 || index >= conch_detection_count(detection)) return 0;
    return static_cast<int>(
        detection->value.candidates[static_cast<std::size_t>(index)].distances.size());
}

conch_status conch_detection_distance(const conch_detection* detection, int index,
                                      int position, char** out) {
    if (conch_status s = require(detection && out, "null argument")) return s;
    if (conch_status s = require(position >= 0 &&
                                     position < conch_detection_distance_count(detection, index),
                                 "distance index out of range"))
        return s;
    return guarded([&] {
        *out = dup_string(to_string(
            detection->value.candidates[static_cast<std::size_t>(index)]
                .distances[static_cast<std::size_t>(position)]));
    });
}

void conch_detection_free(conch_detection* detection) { delete detection; }

/* ---- plotting ---------------------------------------------------------- */

conch_status conch_plot_new(const char* x_min, const char* x_max, const char* y_min,
                            const char* y_max, int resolution, conch_plot** out) {
    if (conch_status s = require(out, "null argument")) return s;
    return guarded([&] {
        PlotSpec spec;
        spec.window = {parse_scalar(x_min), parse_scalar(x_max), parse_scalar(y_min),
                       parse_scalar(y_max)};
        spec.resolution = resolution;
        if (!(spec.window.x_min < spec.window.x_max) ||
            !(spec.window.y_min < spec.window.y_max))
            throw DomainError("degenerate plot window");
        if (resolution < 1) throw DomainError("plot resolution must be positive");
        *out = new conch_plot{std::move(spec)};
    });
}

conch_status conch_plot_add(conch_plot* plot, const char* poly_text, const char* style) {
    if (conch_status s = require(plot && poly_text, "null argument")) return s;
    return guarded([&] {
        Poly p = Poly::parse(poly_text, Ring({Var::x1, Var::x2}));
        plot->spec.curves.push_back({p, style ? style : ""});
    });
}

conch_status conch_plot_render(const conch_plot* plot, const char* format, char** out) {
    if (conch_status s = require(plot && format && out, "null argument")) return s;
    std::string kind = format;
    if (kind != "csv" && kind != "svg")
        return fail(CONCH_ERROR_ARGUMENT, "format must be csv or svg");
    return guarded([&] {
        std::vector<std::vector<PlotPoint>> points;
        for (const PlotCurve& c : plot->spec.curves)
            points.push_back(sample_real_points(c.curve, plot->spec));
        *out = dup_string(kind == "csv" ? emit_csv(plot->spec, points)
                                        : emit_svg(plot->spec, points));
    });
}

void conch_plot_free(conch_plot* plot) { delete plot; }
