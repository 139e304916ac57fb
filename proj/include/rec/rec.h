#ifndef REC_H
#define REC_H

/* C interface to the REC/A language core.
 *
 * All objects returned by rec_compile / rec_run / rec_job_run are opaque
 * handles owned by the caller; release them with the matching *_free.
 * Strings returned from accessor functions point into the handle and stay
 * valid until it is freed. rec_program_dump returns a fresh buffer that
 * must be released with rec_text_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define REC_API __declspec(dllexport)
#else
#define REC_API __attribute__((visibility("default")))
#endif

/* Error codes. REC_OK means no error; E01..E12 match the printed catalog. */
enum {
    REC_OK = 0,
    REC_E01_STACK_UNDERFLOW = 1,
    REC_E02_INPUT_EXHAUSTED = 2,
    REC_E03_UNDEFINED_SUBROUTINE = 3,
    REC_E04_DIVISION_BY_ZERO = 4,
    REC_E05_SQRT_OF_NEGATIVE = 5,
    REC_E06_UNBALANCED_PARENTHESES = 6,
    REC_E07_BAD_CONSTANT = 7,
    REC_E08_UNKNOWN_OPERATOR = 8,
    REC_E09_RECURSION_DEPTH_EXCEEDED = 9,
    REC_E10_UNTERMINATED_QUOTE = 10,
    REC_E11_STEP_BUDGET_EXCEEDED = 11,
    REC_E12_CARD_FORMAT = 12,
    REC_EINVAL = -1 /* bad argument to an API call, not a language error */
};

enum { REC_PHASE_LEX = 0, REC_PHASE_COMPILE = 1, REC_PHASE_RUN = 2 };

/* Unit status. Matches the STATUS line of a listing. */
enum { REC_FALSE = 0, REC_TRUE = 1, REC_ERROR = -1 };

typedef struct rec_error_info {
    int code;          /* REC_OK or 1..12 */
    int phase;         /* REC_PHASE_* */
    int card;          /* 1-based card (or line) number, 0 when unknown */
    int column;        /* 1-based column, 0 when unknown */
    char message[40];  /* catalog text, NUL terminated */
} rec_error_info;

typedef struct rec_options {
    long long step_budget;        /* executed instructions before E11 */
    int depth_limit;              /* frames (root + blocks + calls) before E09 */
    int single_precision;        /* nonzero: round every value through float */
    const double* input_override; /* non-NULL: replaces the unit's data cards */
    size_t input_override_len;
} rec_options;

typedef struct rec_program rec_program;
typedef struct rec_result rec_result;
typedef struct rec_job rec_job;

/* Fills *opt with the defaults (budget 10^7, depth 512, doubles, no override). */
REC_API void rec_options_init(rec_options* opt);

REC_API const char* rec_version(void);

/* Catalog text for an error code, or NULL if the code is not 1..12. */
REC_API const char* rec_error_message(int code);

/* Renders the printer-style error line into buf. Returns the full length of
 * the line (excluding the NUL), like snprintf; buf may be NULL when len is 0. */
REC_API int rec_error_render(const rec_error_info* err, char* buf, size_t len);

/* Compiles one program unit. Returns NULL on error and fills *err (err may
 * be NULL if the caller does not care). */
REC_API rec_program* rec_compile(const char* source, rec_error_info* err);
REC_API void rec_program_free(rec_program* prog);

/* Human-readable disassembly. Free with rec_text_free. */
REC_API char* rec_program_dump(const rec_program* prog);
REC_API void rec_text_free(char* text);

/* Runs a compiled program against an input queue. opt may be NULL for the
 * defaults; its input_override is ignored here (pass input directly).
 * Returns NULL only when prog is NULL. */
REC_API rec_result* rec_run(const rec_program* prog, const double* input,
                            size_t input_len, const rec_options* opt,
                            int want_trace);
REC_API void rec_result_free(rec_result* res);

REC_API int rec_result_status(const rec_result* res); /* REC_TRUE/FALSE/ERROR */
/* Returns the error code (REC_OK when the run finished) and, when info is
 * non-NULL, fills it. */
REC_API int rec_result_error(const rec_result* res, rec_error_info* info);
REC_API size_t rec_result_output_count(const rec_result* res);
REC_API const char* rec_result_output_line(const rec_result* res, size_t i);
REC_API long long rec_result_steps(const rec_result* res);
REC_API size_t rec_result_stack_depth(const rec_result* res);
/* i = 0 is the bottom of the stack. Returns 0.0 out of range. */
REC_API double rec_result_stack_value(const rec_result* res, size_t i);
/* Step-by-step trace, empty unless want_trace was nonzero. */
REC_API const char* rec_result_trace(const rec_result* res);

/* Runs a whole card deck. Returns NULL when the deck itself is malformed
 * (bad card, data before any unit, ...) and fills *err; unit-level errors
 * do not fail the job, they show up in the listing and per-unit status. */
REC_API rec_job* rec_job_run(const char* deck_text, const rec_options* opt,
                             int want_trace, rec_error_info* err);
REC_API void rec_job_free(rec_job* job);

REC_API const char* rec_job_listing(const rec_job* job);
REC_API size_t rec_job_unit_count(const rec_job* job);
REC_API int rec_job_unit_status(const rec_job* job, size_t i);
REC_API int rec_job_unit_error(const rec_job* job, size_t i, rec_error_info* info);
REC_API const char* rec_job_unit_trace(const rec_job* job, size_t i);

/* Formats value in the fixed 12-character printer field (13th byte is the
 * NUL). Returns REC_E07 when the value does not fit (non-finite or |exp|>99). */
REC_API int rec_format_e(double value, char out[13]);
/* Parses a printer field back to a double. Blanks around and inside the
 * exponent sign position are accepted. */
REC_API int rec_parse_e(const char* text, double* out);

#ifdef __cplusplus
}
#endif

#endif /* REC_H */
