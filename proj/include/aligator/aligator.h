/* C interface to the loop invariant generator.
 *
 * All strings returned through `char**` out-parameters are heap-allocated and
 * must be released with aligator_string_free. Strings returned directly by
 * accessor functions are owned by the handle and stay valid until it is
 * freed. Handles are not shared between threads, but independent handles may
 * be used concurrently. */
#ifndef ALIGATOR_ALIGATOR_H
#define ALIGATOR_ALIGATOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#pragma GCC visibility push(default)
#endif

typedef enum aligator_status {
    ALIGATOR_OK = 0,
    ALIGATOR_SYNTAX_ERROR = 1,
    ALIGATOR_UNSUPPORTED = 2,
    ALIGATOR_TIMEOUT = 3,
    ALIGATOR_NONTERMINATION = 4,
    ALIGATOR_IO_ERROR = 5,
    ALIGATOR_INVALID_ARGUMENT = 6,
    ALIGATOR_INTERNAL_ERROR = 7,
    ALIGATOR_VERIFICATION_FAILED = 8
} aligator_status;

typedef struct aligator_options {
    int verify;             /* nonzero: run the randomized execution check */
    int trials;             /* random initial states (default 100) */
    int max_steps;          /* iterations per trial (default 30) */
    uint64_t seed;          /* random seed (default 0) */
    double timeout_seconds; /* <= 0 disables the limit (default 60) */
    int omit_timings;       /* nonzero: leave timings out of the JSON report */
} aligator_options;

typedef struct aligator_report aligator_report;
typedef struct aligator_bench aligator_bench;

aligator_options aligator_options_default(void);

const char* aligator_version(void);
const char* aligator_status_name(aligator_status status);
void aligator_string_free(char* s);

/* Analysis of one loop. On success (any status) *out receives a report that
 * must be freed; the return value equals aligator_report_status(*out). Only
 * ALIGATOR_INVALID_ARGUMENT is returned without a report. */
aligator_status aligator_analyze(const char* source, const aligator_options* options, aligator_report** out);
void aligator_report_free(aligator_report* report);

aligator_status aligator_report_status(const aligator_report* report);
size_t aligator_report_basis_count(const aligator_report* report);
const char* aligator_report_basis(const aligator_report* report, size_t index);
int aligator_report_trivial_ideal(const aligator_report* report);
size_t aligator_report_diagnostic_count(const aligator_report* report);
const char* aligator_report_diagnostic_code(const aligator_report* report, size_t index);
const char* aligator_report_diagnostic_message(const aligator_report* report, size_t index);
const char* aligator_report_json(const aligator_report* report);
const char* aligator_report_text(const aligator_report* report);

/* Checks polynomials (text over the loop variables and their x_0 initial
 * values) against random executions of the loop. *passed is set to 1 or 0;
 * on failure *counterexample_json (if non-null) receives a description. */
aligator_status aligator_verify(const char* source, const char* const* basis, size_t count, int trials, int max_steps,
                                uint64_t seed, int* passed, char** counterexample_json);

/* Runs every *.loop file of a directory. jobs <= 0 means one worker. */
aligator_status aligator_bench_run(const char* directory, const aligator_options* options, int jobs,
                                   aligator_bench** out);
void aligator_bench_free(aligator_bench* bench);
size_t aligator_bench_count(const aligator_bench* bench);
int aligator_bench_all_passed(const aligator_bench* bench);
const char* aligator_bench_text(const aligator_bench* bench);
const char* aligator_bench_json(const aligator_bench* bench);
const char* aligator_bench_csv(const aligator_bench* bench);

#if defined(__GNUC__)
#pragma GCC visibility pop
#endif

#ifdef __cplusplus
}
#endif

#endif
