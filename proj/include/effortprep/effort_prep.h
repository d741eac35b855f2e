/*
 * effort-prep C API.
 *
 * Software effort estimation toolkit: project datasets, size preprocessing
 * (identity, padded min-max, logarithm), the basic COCOMO effort equation,
 * log-space least-squares calibration, MRE/MMRE/PRED accuracy metrics, and
 * deterministic chart emission.
 *
 * Conventions:
 *   - Handles (ep_dataset, ep_transform, ep_comparison, ep_report) are opaque
 *     and owned by the caller; release them with the matching *_free.
 *   - Functions returning ep_status write results through out parameters only
 *     on EP_OK. On failure, ep_last_error() describes the problem; the message
 *     is thread-local and valid until the next failing call on that thread.
 *   - char** outputs receive a NUL-terminated buffer owned by the caller;
 *     release with ep_string_free. const char* returns are owned by the
 *     library or the queried handle and must not be freed.
 *   - Handles are immutable after creation and safe for concurrent reads.
 */

#ifndef EFFORTPREP_EFFORT_PREP_H
#define EFFORTPREP_EFFORT_PREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EP_API __declspec(dllexport)
#else
#define EP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ep_status {
    EP_OK = 0,
    EP_ERROR_INVALID_ARGUMENT = 1, /* bad token, bad call argument, violated precondition */
    EP_ERROR_IO = 2,               /* file not found, unreadable, unwritable */
    EP_ERROR_PARSE = 3,            /* malformed file contents */
    EP_ERROR_VALIDATION = 4,       /* data violates a dataset invariant */
    EP_ERROR_DOMAIN = 5,           /* log of non-positive, degenerate range, under-determined fit */
    EP_ERROR_INTERNAL = 6
} ep_status;

typedef enum ep_column {
    EP_COLUMN_SIZE = 0,
    EP_COLUMN_EFFORT = 1
} ep_column;

typedef enum ep_format {
    EP_FORMAT_TABLE = 0,
    EP_FORMAT_CSV = 1,
    EP_FORMAT_JSON = 2
} ep_format;

typedef struct ep_dataset ep_dataset;
typedef struct ep_transform ep_transform;
typedef struct ep_comparison ep_comparison;
typedef struct ep_report ep_report;

typedef struct ep_column_stats {
    double min;
    double max;
    double mean;
    size_t count;
} ep_column_stats;

typedef struct ep_estimation {
    int32_t project_id;
    double raw_size;         /* KLOC */
    double transformed_size; /* model input after preprocessing */
    double estimated_effort; /* person-months for `none`, transformed units otherwise */
    double actual_effort;    /* person-months */
} ep_estimation;

typedef struct ep_calibration {
    double a;
    double b;
    double log_rss; /* residual sum of squares, log-log space */
    double log_r2;  /* coefficient of determination, log-log space */
    size_t samples;
} ep_calibration;

EP_API const char* ep_version(void);
EP_API const char* ep_last_error(void);
EP_API void ep_string_free(char* text);

/* Fixed-point rendering with the library's presentation rounding (half away
 * from zero). decimals must lie in 0..12. */
EP_API ep_status ep_format_fixed(double value, int decimals, char** out);

/* ---- datasets ---------------------------------------------------------- */

/* The bundled 24-project IVR dataset (ids 1..24). */
EP_API ep_status ep_dataset_builtin(ep_dataset** out);

/* Loads a CSV file with a header row. Column names default to
 * project_id/kloc/actual_effort; pass NULL to keep a default. */
EP_API ep_status ep_dataset_load_csv(const char* path, const char* id_column,
                                     const char* size_column, const char* effort_column,
                                     ep_dataset** out);

/* Full-precision CSV emission; loading it back reproduces the dataset. */
EP_API ep_status ep_dataset_write_csv(const ep_dataset* dataset, const char* path);

EP_API void ep_dataset_free(ep_dataset* dataset);
EP_API const char* ep_dataset_name(const ep_dataset* dataset);
EP_API size_t ep_dataset_count(const ep_dataset* dataset);
EP_API ep_status ep_dataset_record(const ep_dataset* dataset, size_t index, int32_t* project_id,
                                   double* size_kloc, double* effort_pm);
EP_API ep_status ep_dataset_column_stats(const ep_dataset* dataset, ep_column column,
                                         ep_column_stats* out);

/* Summary rendering (record count plus per-column stats). */
EP_API ep_status ep_dataset_render(const ep_dataset* dataset, ep_format format, int decimals,
                                   int color, char** out);

/* ---- preprocessing transforms ------------------------------------------ */

/* Technique tokens: `none`, `norm[:pad=<real>]`, `log[:base=<e|2|10>]`
 * (bare parameter values such as `norm:1` and `log:e` are accepted).
 * Fits the transform's parameters on `values`: min-max freezes the padded
 * bounds [min - pad, max + pad]; `none` and `log` have no fitted state. */
EP_API ep_status ep_transform_fit(const char* technique, const double* values, size_t count,
                                  ep_transform** out);

EP_API ep_status ep_transform_apply(const ep_transform* transform, double value, double* out);

/* Inverse of apply: invert(apply(x)) == x up to rounding. */
EP_API ep_status ep_transform_invert(const ep_transform* transform, double value, double* out);

/* Canonical technique token, owned by the handle. */
EP_API const char* ep_transform_token(const ep_transform* transform);

EP_API void ep_transform_free(ep_transform* transform);

/* ---- effort model ------------------------------------------------------ */

/* Model tokens: `organic | semi | embedded | custom:a=<real>,b=<real>`. */
EP_API ep_status ep_model_parse(const char* token, double* a, double* b);

/* Effort = a * size^b. size 0 yields 0; negative size is a domain error. */
EP_API ep_status ep_estimate(double a, double b, double size, double* out);

/* Magnitude of relative error |actual - estimated| / actual; actual > 0. */
EP_API ep_status ep_mre(double actual, double estimated, double* out);

/* Least-squares fit of (a, b) in log-log space, with diagnostics. Requires
 * at least two records with distinct sizes. */
EP_API ep_status ep_calibrate(const ep_dataset* dataset, ep_calibration* out);

EP_API ep_status ep_calibration_render(const ep_calibration* calibration, ep_format format,
                                       int decimals, int color, char** out);

/* ---- technique comparison ---------------------------------------------- */

/* Runs every technique over the dataset with the given model: each transform
 * is fitted once on the full size column, then every record is mapped through
 * apply + estimate. Columns keep the given order; rows keep dataset order. */
EP_API ep_status ep_compare(const ep_dataset* dataset, const char* const* techniques,
                            size_t technique_count, const char* model_token, ep_comparison** out);

EP_API size_t ep_comparison_row_count(const ep_comparison* comparison);
EP_API size_t ep_comparison_technique_count(const ep_comparison* comparison);

/* Canonical token of one technique column, owned by the handle. */
EP_API const char* ep_comparison_technique(const ep_comparison* comparison, size_t technique);

/* Filesystem-safe label for one technique column, owned by the handle. */
EP_API const char* ep_comparison_file_label(const ep_comparison* comparison, size_t technique);

EP_API ep_status ep_comparison_cell(const ep_comparison* comparison, size_t row, size_t technique,
                                    ep_estimation* out);

EP_API ep_status ep_comparison_render(const ep_comparison* comparison, ep_format format,
                                      int decimals, int color, char** out);

EP_API void ep_comparison_free(ep_comparison* comparison);

/* ---- accuracy metrics -------------------------------------------------- */

/* Scores one technique column against actual efforts: per-project MRE, mean
 * MRE, PRED(threshold) with ties counting as accurate. threshold must lie in
 * (0, 1); 0.25 is the customary accuracy cut-off. */
EP_API ep_status ep_evaluate(const ep_comparison* comparison, size_t technique, double threshold,
                             ep_report** out);

EP_API size_t ep_report_count(const ep_report* report);
EP_API ep_status ep_report_row(const ep_report* report, size_t index, int32_t* project_id,
                               double* actual, double* estimated, double* mre);
EP_API ep_status ep_report_summary(const ep_report* report, double* mmre, double* pred,
                                   size_t* accurate_count);

/* Non-zero when the scored estimates are in transformed units rather than
 * person-months (any technique other than `none`), which makes the raw-scale
 * comparison dimensionally suspect. */
EP_API int ep_report_unit_warning(const ep_report* report);

EP_API ep_status ep_report_render(const ep_report* report, ep_format format, int decimals,
                                  int color, char** out);

EP_API void ep_report_free(ep_report* report);

/* ---- charts ------------------------------------------------------------ */

/* Self-contained SVG of one technique column (project index vs estimated
 * effort). Byte output is deterministic for fixed input; every data point
 * carries data-project and data-value attributes. */
EP_API ep_status ep_chart_svg(const ep_comparison* comparison, size_t technique, int decimals,
                              char** out);

/* Companion CSV of the plotted points (project_id, estimated_effort). */
EP_API ep_status ep_chart_csv(const ep_comparison* comparison, size_t technique, int decimals,
                              char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EFFORTPREP_EFFORT_PREP_H */
