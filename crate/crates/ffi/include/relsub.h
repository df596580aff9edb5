#ifndef RELSUB_H
#define RELSUB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RelsubStatus {
  RELSUB_STATUS_OK = 0,
  // The call ran but a check did not pass.
  RELSUB_STATUS_VERIFICATION_FAILED = 1,
  // Unknown name or invalid number.
  RELSUB_STATUS_USAGE = 2,
  // Argument outside the documented range.
  RELSUB_STATUS_CONTRACT = 3,
  // Physically unusable input.
  RELSUB_STATUS_DOMAIN = 4,
  RELSUB_STATUS_NULL_POINTER = 5,
  RELSUB_STATUS_INVALID_UTF8 = 6,
  RELSUB_STATUS_PANIC = 7,
} RelsubStatus;

// Opaque verification report.
typedef struct RelsubReport RelsubReport;

// Opaque solution basis.
typedef struct RelsubSolution RelsubSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *relsub_version(void);

// Message for the last failing call on this thread, or null. Valid until
// the next call into the library from the same thread.
const char *relsub_last_error(void);

// Runs a verification suite. On `Ok` or `VerificationFailed` a report is
// written to `out`.
//
// # Safety
// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
enum RelsubStatus relsub_verify(const char *suite,
                                uint64_t seed,
                                uint64_t trials,
                                double tol,
                                struct RelsubReport **out);

// # Safety
// `report` must be null or a handle from [`relsub_verify`].
uint64_t relsub_report_passed(const struct RelsubReport *report);

// # Safety
// `report` must be null or a handle from [`relsub_verify`].
uint64_t relsub_report_failed(const struct RelsubReport *report);

// NaN for a null handle.
//
// # Safety
// `report` must be null or a handle from [`relsub_verify`].
double relsub_report_max_residual(const struct RelsubReport *report);

// Canonical JSON of the report; release with [`relsub_string_free`].
//
// # Safety
// `report` must be a handle from [`relsub_verify`] and `out` a valid pointer.
enum RelsubStatus relsub_report_json(const struct RelsubReport *report, char **out);

// # Safety
// `report` must be null or a handle from [`relsub_verify`] not yet freed.
void relsub_report_free(struct RelsubReport *report);

// Solution basis of `equation` (`dirac`, `dkp0`, `dkp1` or `susy`) at
// spatial momentum `(px, py, pz)` and mass `m`.
//
// # Safety
// `equation` must be a valid NUL-terminated string and `out` a valid pointer.
enum RelsubStatus relsub_solve(const char *equation,
                               double px,
                               double py,
                               double pz,
                               double mass,
                               double tol,
                               struct RelsubSolution **out);

// Kernel dimension; zero for a null handle.
//
// # Safety
// `solution` must be null or a handle from [`relsub_solve`].
size_t relsub_solution_dimension(const struct RelsubSolution *solution);

// # Safety
// `solution` must be a handle from [`relsub_solve`] and `out` a valid pointer.
enum RelsubStatus relsub_solution_json(const struct RelsubSolution *solution, char **out);

// # Safety
// `solution` must be null or a handle from [`relsub_solve`] not yet freed.
void relsub_solution_free(struct RelsubSolution *solution);

// `Ok` when `¼(3 + γ⁵ − γ⁰γ³ + iγ¹γ²)` equals `diag(1, 1, 1, 0)` exactly.
enum RelsubStatus relsub_check_p4(void);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void relsub_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELSUB_H */
