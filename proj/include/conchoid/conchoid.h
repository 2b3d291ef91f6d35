#ifndef CONCHOID_CONCHOID_H
#define CONCHOID_CONCHOID_H

/* C interface to the conchoid toolkit.
 *
 * Polynomials cross the boundary as text in the library grammar: terms over
 * the variables x1, x2 (or y1, y2 for base curves; d appears in generic
 * conchoids), integer or p/q rational coefficients, operators + - * ^ and
 * parentheses.  Rational scalars (focus coordinates, distances, window
 * bounds) are passed as "p", "-p", or "p/q" strings.  Every returned char*
 * is heap-allocated and must be released with conch_free_string; every
 * returned handle has its matching _free function.  Handles are immutable
 * once created and safe to share across threads; the error message of the
 * most recent failing call is kept per thread.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum conch_status {
    CONCH_OK = 0,
    CONCH_ERROR_PARSE = 1,    /* malformed polynomial or rational text */
    CONCH_ERROR_DOMAIN = 2,   /* valid input outside an operation's domain */
    CONCH_ERROR_BUDGET = 3,   /* configured resource caps exhausted */
    CONCH_ERROR_ARGUMENT = 4, /* null handle, index out of range, bad flag */
    CONCH_ERROR_INTERNAL = 5
} conch_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* conch_last_error(void);

void conch_free_string(char* text);

/* Resource caps forwarded to every elimination; NULL means defaults. */
typedef struct conch_budget {
    long max_pairs;  /* S-pairs processed per basis computation */
    int max_degree;  /* total degree of any intermediate polynomial */
} conch_budget;

conch_budget conch_default_budget(void);

/* ---- curves ------------------------------------------------------------ */

typedef struct conch_curve conch_curve;

/* Parses a plane curve in either x1,x2 or y1,y2.  The defining polynomial is
 * replaced by its squarefree, integer-primitive normal form. */
conch_status conch_curve_parse(const char* text, conch_curve** out);
/* The curve's defining polynomial over x1, x2. */
conch_status conch_curve_format(const conch_curve* curve, char** out);
void conch_curve_free(conch_curve* curve);

/* ---- conchoid construction --------------------------------------------- */

typedef struct conch_result conch_result;

/* Conchoid of `base` from focus (a, b) at rational distance `d` (nonzero). */
conch_status conch_conchoid(const conch_curve* base, const char* a, const char* b,
                            const char* d, const conch_budget* budget,
                            conch_result** out);
/* Conchoid with the distance left symbolic; the hypersurface involves d. */
conch_status conch_generic_conchoid(const conch_curve* base, const char* a,
                                    const char* b, const conch_budget* budget,
                                    conch_result** out);

conch_status conch_result_hypersurface(const conch_result* result, char** out);
/* Generators of the lower-dimensional residual part, if any. */
int conch_result_residual_count(const conch_result* result);
conch_status conch_result_residual(const conch_result* result, int index, char** out);
void conch_result_free(conch_result* result);

/* ---- factorization ----------------------------------------------------- */

typedef struct conch_factors conch_factors;

/* Exact factorization over the rationals; unit * product(factor^mult)
 * reproduces the input. */
conch_status conch_factor(const char* poly_text, conch_factors** out);
conch_status conch_factors_unit(const conch_factors* factors, char** out);
int conch_factors_count(const conch_factors* factors);
conch_status conch_factors_at(const conch_factors* factors, int index,
                              char** poly_out, int* multiplicity_out);
void conch_factors_free(conch_factors* factors);

/* ---- components and classification ------------------------------------- */

typedef struct conch_components conch_components;

/* Irreducible components of a conchoid's hypersurface. */
conch_status conch_components_of(const conch_result* result,
                                 conch_components** out);
int conch_components_count(const conch_components* components);
conch_status conch_components_at(const conch_components* components, int index,
                                 char** out);
void conch_components_free(conch_components* components);

/* Classifies `component_text` (a component of the conchoid of `base` from
 * (a, b) at distance d) as "Simple" or "Special": special components have a
 * conchoid reproducing the base curve. */
conch_status conch_classify(const char* component_text, const conch_curve* base,
                            const char* a, const char* b, const char* d,
                            const conch_budget* budget, char** out);

/* ---- rational map verification ----------------------------------------- */

/* `map_text` is four polynomial texts in the source curve's variables
 * separated by ';': numerator and denominator of each coordinate function.
 * Sets *out to 1 when the map carries the source curve into the target. */
conch_status conch_verify_map(const char* source_text, const char* target_text,
                              const char* map_text, const conch_budget* budget,
                              int* out);
/* Additionally requires `inverse_text` to undo the map on the source. */
conch_status conch_verify_pair(const char* source_text, const char* target_text,
                               const char* map_text, const char* inverse_text,
                               const conch_budget* budget, int* out);

/* ---- detection --------------------------------------------------------- */

typedef struct conch_locus conch_locus;

/* Polynomials in a, b whose common zeros contain every focus from which the
 * curve has a special conchoid component; zero generators mean the locus is
 * the whole plane. */
conch_status conch_focus_locus(const conch_curve* curve,
                               const conch_budget* budget, conch_locus** out);
int conch_locus_count(const conch_locus* locus);
conch_status conch_locus_at(const conch_locus* locus, int index, char** out);
void conch_locus_free(conch_locus* locus);

typedef struct conch_detection conch_detection;

/* Candidate base curves visible from the focus, each with its verified
 * distances. */
conch_status conch_detect(const conch_curve* curve, const char* a, const char* b,
                          const conch_budget* budget, conch_detection** out);
int conch_detection_count(const conch_detection* detection);
conch_status conch_detection_base(const conch_detection* detection, int index,
                                  char** out);
/* 1 when some distance was confirmed by a forward conchoid computation. */
conch_status conch_detection_verified(const conch_detection* detection, int index,
                                      int* out);
/* 1 when every distance matches (a line through the focus). */
conch_status conch_detection_identical(const conch_detection* detection, int index,
                                       int* out);
/* 1 when matching also has non-rational real solutions. */
conch_status conch_detection_irrational(const conch_detection* detection, int index,
                                        int* out);
int conch_detection_distance_count(const conch_detection* detection, int index);
conch_status conch_detection_distance(const conch_detection* detection, int index,
                                      int position, char** out);
void conch_detection_free(conch_detection* detection);

/* ---- plotting ---------------------------------------------------------- */

typedef struct conch_plot conch_plot;

/* Window bounds are rational strings with x_min < x_max, y_min < y_max;
 * resolution is the number of sample columns per axis. */
conch_status conch_plot_new(const char* x_min, const char* x_max,
                            const char* y_min, const char* y_max, int resolution,
                            conch_plot** out);
/* Adds a curve in x1, x2 with a style tag; equal tags share a color. */
conch_status conch_plot_add(conch_plot* plot, const char* poly_text,
                            const char* style);
/* Samples every added curve and emits "csv" rows or an "svg" document. */
conch_status conch_plot_render(const conch_plot* plot, const char* format,
                               char** out);
void conch_plot_free(conch_plot* plot);

#ifdef __cplusplus
}
#endif

#endif /* CONCHOID_CONCHOID_H */
