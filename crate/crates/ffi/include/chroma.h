#ifndef CHROMA_H
#define CHROMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChromaStatus {
  CHROMA_STATUS_OK = 0,
  CHROMA_STATUS_NULL_POINTER = 1,
  CHROMA_STATUS_INVALID_UTF8 = 2,
  CHROMA_STATUS_PARSE_ERROR = 3,
  CHROMA_STATUS_INVALID_ARGUMENT = 4,
  CHROMA_STATUS_TOO_LARGE = 5,
  /**
   * A verification ran and found a failing instance.
   */
  CHROMA_STATUS_VERIFICATION_FAILED = 6,
  CHROMA_STATUS_IO = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  CHROMA_STATUS_INTERNAL = 8,
} ChromaStatus;

/**
 * A unit interval order.
 */
typedef struct ChromaUio ChromaUio;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a UIO from a 1-based next-vector of length `len`.
 *
 * # Safety
 * `next` must point to `len` readable values and `out` must be writable.
 */
enum ChromaStatus chroma_uio_from_next(const size_t *next, size_t len, struct ChromaUio **out);

/**
 * Parses a comma-separated 1-based next-vector such as `"3,4,4"`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` must be writable.
 */
enum ChromaStatus chroma_uio_parse(const char *text, struct ChromaUio **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `u` must come from this library and not be used afterwards.
 */
void chroma_uio_free(struct ChromaUio *u);

/**
 * Number of elements, or 0 for null.
 *
 * # Safety
 * `u` must be null or a live handle.
 */
size_t chroma_uio_len(const struct ChromaUio *u);

/**
 * The chromatic symmetric function of the incomparability graph as JSON:
 * `{"basis": "e", "coefficients": {"2,1": 1, "3": 3}, "ePositive": true,
 * "sPositive": true}`. `basis` is one of `"e"`, `"m"`, `"p"`, `"s"`.
 *
 * # Safety
 * `u` must be a live handle, `basis` a nul-terminated string and `out`
 * writable.
 */
enum ChromaStatus chroma_csf_json(const struct ChromaUio *u, const char *basis, char **out);

/**
 * The power-sum analogue `p_k^G` as polynomial JSON.
 *
 * # Safety
 * `u` must be a live handle and `out` writable.
 */
enum ChromaStatus chroma_power_g_json(const struct ChromaUio *u, size_t k, char **out);

/**
 * Corrects of length `n` that use every element once.
 *
 * # Safety
 * `u` must be a live handle and `out` writable.
 */
enum ChromaStatus chroma_covering_corrects_count(const struct ChromaUio *u, uint64_t *out);

/**
 * Runs a verification suite and writes its JSON report. Zero bounds select
 * the suite's defaults. Returns `ChromaStatus::VerificationFailed` (with the
 * report still written) when any check fails.
 *
 * # Safety
 * `suite` must be a nul-terminated string and `out` writable.
 */
enum ChromaStatus chroma_verify_json(const char *suite, size_t max_n, size_t max_k, char **out);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *chroma_last_error_message(void);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void chroma_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHROMA_H */
