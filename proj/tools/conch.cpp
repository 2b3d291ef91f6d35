// Command-line front end: every subcommand is a thin adapter over the shared
// library's C interface; all algebra happens behind conchoid/conchoid.h.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <conchoid/conchoid.h>

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

// Failures surface as this exception so each handler can stay linear.
struct CommandError {
    int exit_code;
    std::string message;
};

[[noreturn]] void bail(conch_status status) {
    int code = kExitDomain;
    if (status == CONCH_ERROR_BUDGET) code = kExitBudget;
    if (status == CONCH_ERROR_PARSE || status == CONCH_ERROR_ARGUMENT)
        code = kExitUsage;
    throw CommandError{code, conch_last_error()};
}

void check(conch_status status) {
    if (status != CONCH_OK) bail(status);
}

std::string take(char* text) {
    std::string out = text ? text : "";
    conch_free_string(text);
    return out;
}

// `@path` pulls the value from a file, `@-` from stdin; used by every
// polynomial-valued flag.
std::string resolve_at(const std::string& value) {
    if (value.empty() || value[0] != '@') return value;
    std::ostringstream body;
    if (value == "@-") {
        body << std::cin.rdbuf();
    } else {
        std::ifstream in(value.substr(1));
        if (!in) throw CommandError{kExitUsage, "cannot read file " + value.substr(1)};
        body << in.rdbuf();
    }
    std::string text = body.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' ' || text.back() == '\t'))
        text.pop_back();
    return text;
}

std::pair<std::string, std::string> split_focus(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw CommandError{kExitUsage, "--focus expects two rationals a,b"};
    return {text.substr(0, comma), text.substr(comma + 1)};
}

std::vector<std::string> split_window(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    if (parts.size() != 4)
        throw CommandError{kExitUsage,
                           "--window expects four rationals xmin,xmax,ymin,ymax"};
    return parts;
}

std::string lowercase(std::string text) {
    for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return text;
}

using CurveHandle = std::unique_ptr<conch_curve, decltype(&conch_curve_free)>;
using ResultHandle = std::unique_ptr<conch_result, decltype(&conch_result_free)>;
using ComponentsHandle =
    std::unique_ptr<conch_components, decltype(&conch_components_free)>;

CurveHandle parse_curve(const std::string& text) {
    conch_curve* curve = nullptr;
    check(conch_curve_parse(resolve_at(text).c_str(), &curve));
    return CurveHandle(curve, conch_curve_free);
}

ResultHandle conchoid_of(const conch_curve* base, const std::string& a,
                         const std::string& b, const std::string& d,
                         const conch_budget& budget) {
    conch_result* result = nullptr;
    check(conch_conchoid(base, a.c_str(), b.c_str(), d.c_str(), &budget, &result));
    return ResultHandle(result, conch_result_free);
}

ComponentsHandle components_of(const conch_result* result) {
    conch_components* comps = nullptr;
    check(conch_components_of(result, &comps));
    return ComponentsHandle(comps, conch_components_free);
}

std::string hypersurface_of(const conch_result* result) {
    char* text = nullptr;
    check(conch_result_hypersurface(result, &text));
    return take(text);
}

// Flags shared by the algebraic subcommands.
struct Options {
    std::string curve;
    std::string focus;
    std::string distance;
    std::string component;
    std::string target;
    std::string map;
    std::string inverse;
    std::vector<std::string> plot_curves;
    std::string window = "-4,4,-4,4";
    int resolution = 400;
    std::string format = "csv";
    conch_budget budget = conch_default_budget();
};

void run_conchoid(const Options& opt) {
    CurveHandle base = parse_curve(opt.curve);
    auto [a, b] = split_focus(opt.focus);
    ResultHandle result = conchoid_of(base.get(), a, b, opt.distance, opt.budget);
    std::cout << "conchoid: " << hypersurface_of(result.get()) << "\n";
    for (int i = 0; i < conch_result_residual_count(result.get()); ++i) {
        char* text = nullptr;
        check(conch_result_residual(result.get(), i, &text));
        std::cout << "residual: " << take(text) << "\n";
    }
}

void run_generic(const Options& opt) {
    CurveHandle base = parse_curve(opt.curve);
    auto [a, b] = split_focus(opt.focus);
    conch_result* result = nullptr;
    check(conch_generic_conchoid(base.get(), a.c_str(), b.c_str(), &opt.budget,
                                 &result));
    ResultHandle handle(result, conch_result_free);
    std::cout << "generic: " << hypersurface_of(handle.get()) << "\n";
}

void run_factor(const Options& opt) {
    conch_factors* factors = nullptr;
    check(conch_factor(resolve_at(opt.curve).c_str(), &factors));
    std::unique_ptr<conch_factors, decltype(&conch_factors_free)> handle(
        factors, conch_factors_free);
    char* unit = nullptr;
    check(conch_factors_unit(factors, &unit));
    std::cout << "unit: " << take(unit) << "\n";
    for (int i = 0; i < conch_factors_count(factors); ++i) {
        char* text = nullptr;
        int multiplicity = 0;
        check(conch_factors_at(factors, i, &text, &multiplicity));
        std::cout << "factor: " << take(text) << "\n";
        if (multiplicity != 1)
            std::cout << "multiplicity: " << multiplicity << "\n";
    }
}

void run_components(const Options& opt) {
    CurveHandle base = parse_curve(opt.curve);
    auto [a, b] = split_focus(opt.focus);
    ResultHandle result = conchoid_of(base.get(), a, b, opt.distance, opt.budget);
    ComponentsHandle comps = components_of(result.get());
    for (int i = 0; i < conch_components_count(comps.get()); ++i) {
        char* text = nullptr;
        check(conch_components_at(comps.get(), i, &text));
        std::cout << "component: " << take(text) << "\n";
    }
}

// The classification base is found by walking the conchoid chain from the
// given curve: the component may belong to the conchoid of the curve itself
// or, as in the cardioid chain, to the conchoid of that conchoid.
void run_classify(const Options& opt) {
    CurveHandle given = parse_curve(opt.curve);
    auto [a, b] = split_focus(opt.focus);

    CurveHandle component = parse_curve(opt.component);
    char* component_text = nullptr;
    check(conch_curve_format(component.get(), &component_text));
    std::string wanted = take(component_text);

    conch_curve* base = given.get();
    CurveHandle hop(nullptr, conch_curve_free);
    for (int step = 0; step < 2; ++step) {
        ResultHandle result = conchoid_of(base, a, b, opt.distance, opt.budget);
        ComponentsHandle comps = components_of(result.get());
        for (int i = 0; i < conch_components_count(comps.get()); ++i) {
            char* text = nullptr;
            check(conch_components_at(comps.get(), i, &text));
            if (take(text) != wanted) continue;
            char* label = nullptr;
            check(conch_classify(wanted.c_str(), base, a.c_str(), b.c_str(),
                                 opt.distance.c_str(), &opt.budget, &label));
            std::cout << "classification: " << lowercase(take(label)) << "\n";
            return;
        }
        if (step == 0) {
            conch_curve* next = nullptr;
            check(conch_curve_parse(hypersurface_of(result.get()).c_str(), &next));
            hop = CurveHandle(next, conch_curve_free);
            base = hop.get();
        }
    }
    throw CommandError{kExitDomain,
                       "component does not divide the conchoid of the given curve "
                       "or of its conchoid"};
}

void run_verify_map(const Options& opt) {
    int ok = 0;
    std::string source = resolve_at(opt.curve);
    std::string target = resolve_at(opt.target);
    std::string map = resolve_at(opt.map);
    if (opt.inverse.empty()) {
        check(conch_verify_map(source.c_str(), target.c_str(), map.c_str(),
                               &opt.budget, &ok));
    } else {
        std::string inverse = resolve_at(opt.inverse);
        check(conch_verify_pair(source.c_str(), target.c_str(), map.c_str(),
                                inverse.c_str(), &opt.budget, &ok));
    }
    std::cout << "verified: " << (ok ? "true" : "false") << "\n";
}

void run_detect_focus(const Options& opt) {
    CurveHandle curve = parse_curve(opt.curve);
    conch_locus* locus = nullptr;
    check(conch_focus_locus(curve.get(), &opt.budget, &locus));
    std::unique_ptr<conch_locus, decltype(&conch_locus_free)> handle(locus,
                                                                     conch_locus_free);
    if (conch_locus_count(locus) == 0) {
        std::cout << "locus: 0\n"; // zero ideal: every focus admits candidates
        return;
    }
    for (int i = 0; i < conch_locus_count(locus); ++i) {
        char* text = nullptr;
        check(conch_locus_at(locus, i, &text));
        std::cout << "locus: " << take(text) << "\n";
    }
}

void run_detect(const Options& opt) {
    CurveHandle curve = parse_curve(opt.curve);
    auto [a, b] = split_focus(opt.focus);
    conch_detection* detection = nullptr;
    check(conch_detect(curve.get(), a.c_str(), b.c_str(), &opt.budget, &detection));
    std::unique_ptr<conch_detection, decltype(&conch_detection_free)> handle(
        detection, conch_detection_free);
    for (int i = 0; i < conch_detection_count(detection); ++i) {
        char* text = nullptr;
        check(conch_detection_base(detection, i, &text));
        std::cout << "candidate: " << take(text) << "\n";

        int identical = 0;
        check(conch_detection_identical(detection, i, &identical));
        if (identical) {
            std::cout << "distances: (any)\n";
        } else if (conch_detection_distance_count(detection, i) == 0) {
            std::cout << "distances: (none)\n";
        } else {
            std::cout << "distances: ";
            for (int j = 0; j < conch_detection_distance_count(detection, i); ++j) {
                char* d = nullptr;
                check(conch_detection_distance(detection, i, j, &d));
                std::cout << (j ? ", " : "") << take(d);
            }
            std::cout << "\n";
        }
        int verified = 0;
        check(conch_detection_verified(detection, i, &verified));
        std::cout << "verified: " << (verified ? "true" : "false") << "\n";
        int irrational = 0;
        check(conch_detection_irrational(detection, i, &irrational));
        if (irrational) std::cout << "irrational: true\n";
    }
}

void run_plot(const Options& opt) {
    std::vector<std::string> window = split_window(opt.window);
    conch_plot* plot = nullptr;
    check(conch_plot_new(window[0].c_str(), window[1].c_str(), window[2].c_str(),
                         window[3].c_str(), opt.resolution, &plot));
    std::unique_ptr<conch_plot, decltype(&conch_plot_free)> handle(plot,
                                                                   conch_plot_free);
    for (std::size_t i = 0; i < opt.plot_curves.size(); ++i) {
        std::string style = "curve" + std::to_string(i);
        check(conch_plot_add(plot, resolve_at(opt.plot_curves[i]).c_str(),
                             style.c_str()));
    }
    char* body = nullptr;
    check(conch_plot_render(plot, opt.format.c_str(), &body));
    std::cout << take(body);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact conchoid computation, classification, and detection"};
    app.require_subcommand(1);
    Options opt;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--max-pairs", opt.budget.max_pairs,
                        "S-pair cap for basis computations");
        cmd->add_option("--max-degree", opt.budget.max_degree,
                        "intermediate total degree cap");
    };
    auto add_curve = [&](CLI::App* cmd) {
        cmd->add_option("--curve", opt.curve, "polynomial text or @file")->required();
    };
    auto add_focus = [&](CLI::App* cmd) {
        cmd->add_option("--focus", opt.focus, "focus point a,b")->required();
    };
    auto add_distance = [&](CLI::App* cmd) {
        cmd->add_option("--distance", opt.distance, "rational distance p/q")->required();
    };

    CLI::App* conchoid_cmd =
        app.add_subcommand("conchoid", "conchoid of a curve at a fixed distance");
    add_curve(conchoid_cmd);
    add_focus(conchoid_cmd);
    add_distance(conchoid_cmd);
    add_budget(conchoid_cmd);

    CLI::App* generic_cmd =
        app.add_subcommand("generic", "conchoid with the distance left symbolic");
    add_curve(generic_cmd);
    add_focus(generic_cmd);
    add_budget(generic_cmd);

    CLI::App* factor_cmd = app.add_subcommand("factor", "factor a polynomial over Q");
    add_curve(factor_cmd);

    CLI::App* components_cmd =
        app.add_subcommand("components", "irreducible components of a conchoid");
    add_curve(components_cmd);
    add_focus(components_cmd);
    add_distance(components_cmd);
    add_budget(components_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a conchoid component");
    add_curve(classify_cmd);
    add_focus(classify_cmd);
    add_distance(classify_cmd);
    classify_cmd->add_option("--component", opt.component, "component polynomial or @file")
        ->required();
    add_budget(classify_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify-map", "verify a rational map between curves");
    add_curve(verify_cmd);
    verify_cmd->add_option("--target", opt.target, "target curve polynomial or @file")
        ->required();
    verify_cmd
        ->add_option("--map", opt.map,
                     "four ';'-separated polynomials: num;den;num;den")
        ->required();
    verify_cmd->add_option("--inverse", opt.inverse,
                           "inverse map; also checks both compositions");
    add_budget(verify_cmd);

    CLI::App* locus_cmd =
        app.add_subcommand("detect-focus", "focus locus of a curve in a, b");
    add_curve(locus_cmd);
    add_budget(locus_cmd);

    CLI::App* detect_cmd =
        app.add_subcommand("detect", "candidate base curves and distances");
    add_curve(detect_cmd);
    add_focus(detect_cmd);
    add_budget(detect_cmd);

    CLI::App* plot_cmd = app.add_subcommand("plot", "sample curves to csv or svg");
    plot_cmd->add_option("--curve", opt.plot_curves, "polynomial text or @file")
        ->required();
    plot_cmd->add_option("--window", opt.window, "window xmin,xmax,ymin,ymax");
    plot_cmd->add_option("--resolution", opt.resolution, "samples per axis");
    plot_cmd->add_option("--format", opt.format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (conchoid_cmd->parsed()) run_conchoid(opt);
        if (generic_cmd->parsed()) run_generic(opt);
        if (factor_cmd->parsed()) run_factor(opt);
        if (components_cmd->parsed()) run_components(opt);
        if (classify_cmd->parsed()) run_classify(opt);
        if (verify_cmd->parsed()) run_verify_map(opt);
        if (locus_cmd->parsed()) run_detect_focus(opt);
        if (detect_cmd->parsed()) run_detect(opt);
        if (plot_cmd->parsed()) run_plot(opt);
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return 0;
}
