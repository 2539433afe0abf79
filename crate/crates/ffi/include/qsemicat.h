#ifndef QSEMICAT_H
#define QSEMICAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stdint.h>

/**
 * Result of every call.
 */
typedef enum QsStatus {
  QS_STATUS_OK = 0,
  QS_STATUS_NULL_ARGUMENT = 1,
  QS_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed document, unknown name or unreadable file.
   */
  QS_STATUS_PARSE = 3,
  /**
   * An object fails its axioms or the inputs do not fit together.
   */
  QS_STATUS_INVALID = 4,
  QS_STATUS_NOT_REGULAR = 5,
  QS_STATUS_CAP_EXCEEDED = 6,
  /**
   * An internal panic was caught at the boundary.
   */
  QS_STATUS_PANIC = 7,
} QsStatus;

typedef enum QsPresheafClass {
  QS_PRESHEAF_CLASS_ALL = 0,
  QS_PRESHEAF_CLASS_REGULAR = 1,
  QS_PRESHEAF_CLASS_YONEDA = 2,
} QsPresheafClass;

typedef enum QsVariance {
  QS_VARIANCE_CONTRAVARIANT = 0,
  QS_VARIANCE_COVARIANT = 1,
} QsVariance;

/**
 * Opaque handle to a loaded workspace.
 */
typedef struct QsWorkspace QsWorkspace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *qs_last_error(void);

/**
 * Static name of a status code.
 */
const char *qs_status_name(enum QsStatus status);

/**
 * Parses a workspace document. Objects that fail validation do not make
 * this call fail; see `qs_validate_json`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum QsStatus qs_workspace_from_json(const char *json, struct QsWorkspace **out);

/**
 * Reads and parses a workspace document from a file.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum QsStatus qs_workspace_load(const char *path, struct QsWorkspace **out);

/**
 * Releases a workspace. Null is ignored.
 *
 * # Safety
 * `ws` must come from this library and not be used afterwards.
 */
void qs_workspace_free(struct QsWorkspace *ws);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void qs_string_free(char *s);

/**
 * Validation report as JSON.
 *
 * # Safety
 * Pointers must be valid; `ws` must be a live handle.
 */
enum QsStatus qs_validate_json(const struct QsWorkspace *ws, char **out);

/**
 * Presheaf listing as JSON. `ty` may be null for every type.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_presheaves_json(const struct QsWorkspace *ws,
                                 const char *name,
                                 const char *ty,
                                 enum QsPresheafClass cls,
                                 enum QsVariance var,
                                 uint64_t cap,
                                 char **out);

/**
 * Morita report as JSON.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_morita_json(const struct QsWorkspace *ws,
                             const char *a,
                             const char *b,
                             uint64_t cap,
                             char **out);

/**
 * Objects and homs of the idempotent completion of a quantaloid, as JSON.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_completion_idm_json(const struct QsWorkspace *ws,
                                     const char *quantaloid,
                                     char **out);

/**
 * Report on regular semidistributors `a => b` as fixed matrices, as JSON.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_completion_verify_json(const struct QsWorkspace *ws,
                                        const char *a,
                                        const char *b,
                                        uint64_t cap,
                                        char **out);

/**
 * Whether a semicategory of the workspace is regular.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_is_regular(const struct QsWorkspace *ws, const char *name, bool *out);

/**
 * Whether a semicategory of the workspace is a category.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_is_category(const struct QsWorkspace *ws, const char *name, bool *out);

/**
 * Number of presheaves of one type in a class.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_presheaf_count(const struct QsWorkspace *ws,
                                const char *name,
                                const char *ty,
                                enum QsPresheafClass cls,
                                enum QsVariance var,
                                uint64_t cap,
                                uint64_t *out);

/**
 * Whether two regular semicategories are Morita equivalent.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_morita(const struct QsWorkspace *ws,
                        const char *a,
                        const char *b,
                        uint64_t cap,
                        bool *out);

/**
 * Whether regular semidistributors `a => b` coincide with the fixed
 * matrices of the idempotent completion.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum QsStatus qs_verify_rsdist_idm(const struct QsWorkspace *ws,
                                   const char *a,
                                   const char *b,
                                   uint64_t cap,
                                   bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QSEMICAT_H */
