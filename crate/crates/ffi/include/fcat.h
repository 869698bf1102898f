#ifndef FCAT_H
#define FCAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

/**
 * Status codes returned by every function in this library.
 */
typedef enum FcatStatus {
  FCAT_STATUS_OK = 0,
  /**
   * A check ran and at least one law failed.
   */
  FCAT_STATUS_CHECK_FAILED = 1,
  /**
   * The command could not run: usage, cap or structural error.
   */
  FCAT_STATUS_COMMAND_ERROR = 2,
  FCAT_STATUS_NULL_ARGUMENT = 3,
  FCAT_STATUS_INVALID_UTF8 = 4,
  FCAT_STATUS_PARSE_ERROR = 5,
  FCAT_STATUS_PANIC = 6,
} FcatStatus;

/**
 * A parsed document.
 */
typedef struct FcatDocument FcatDocument;

/**
 * The output of one invocation.
 */
typedef struct FcatResult FcatResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or null. The
 * pointer stays valid until the next call into the library on this thread.
 */
const char *fcat_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *fcat_version(void);

/**
 * Parses `len` bytes of JSON into a document.
 *
 * # Safety
 * `bytes` must point to `len` readable bytes and `out` must be writable.
 */
enum FcatStatus fcat_document_parse(const uint8_t *bytes, size_t len, struct FcatDocument **out);

/**
 * Kind label of a document, for example `"two_monad"`; a static string.
 *
 * # Safety
 * `doc` must be null or a live handle from [`fcat_document_parse`].
 */
const char *fcat_document_kind(const struct FcatDocument *doc);

/**
 * Canonical JSON of a document; free it with [`fcat_string_free`].
 *
 * # Safety
 * `doc` must be a live handle and `out` writable.
 */
enum FcatStatus fcat_document_to_json(const struct FcatDocument *doc, char **out);

/**
 * Releases a document. Null is ignored.
 *
 * # Safety
 * `doc` must be null or a handle not yet freed.
 */
void fcat_document_free(struct FcatDocument *doc);

/**
 * Runs the command line `argv[0..argc]` (without a program name) exactly as
 * the `fcat` binary would. The status mirrors the exit code; `*out`
 * receives the result even when a check fails or the command errors.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings and `out` must be writable.
 */
enum FcatStatus fcat_run(int argc, const char *const *argv, struct FcatResult **out);

/**
 * Process exit code the invocation would have produced, or -1 for null.
 *
 * # Safety
 * `res` must be null or a live handle from [`fcat_run`].
 */
int fcat_result_exit_code(const struct FcatResult *res);

/**
 * Borrowed view of the report written to standard output.
 *
 * # Safety
 * `res` must be a live handle; `len` must be null or writable.
 */
const uint8_t *fcat_result_stdout(const struct FcatResult *res, size_t *len);

/**
 * Borrowed view of the diagnostics written to standard error.
 *
 * # Safety
 * As for [`fcat_result_stdout`].
 */
const uint8_t *fcat_result_stderr(const struct FcatResult *res, size_t *len);

/**
 * Releases a result. Null is ignored.
 *
 * # Safety
 * `res` must be null or a handle not yet freed.
 */
void fcat_result_free(struct FcatResult *res);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void fcat_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FCAT_H */
