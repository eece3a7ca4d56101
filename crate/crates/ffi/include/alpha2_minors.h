#ifndef ALPHA2_MINORS_H
#define ALPHA2_MINORS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  A2_STATUS_OK = 0,
  A2_STATUS_NULL_POINTER = 1,
  A2_STATUS_INVALID_UTF8 = 2,
  A2_STATUS_PARSE = 3,
  A2_STATUS_PRECONDITION = 4,
  A2_STATUS_ALPHA_AT_LEAST_THREE = 5,
  A2_STATUS_INVARIANT = 6,
  A2_STATUS_ORACLE_CAP = 7,
  A2_STATUS_TIMEOUT = 8,
  A2_STATUS_OUT_OF_RANGE = 9,
  A2_STATUS_PANIC = 10,
  A2_STATUS_OTHER = 11,
} A2Status;

/**
 * Opaque certificate handle.
 */
typedef struct A2Certificate A2Certificate;

/**
 * Opaque graph handle.
 */
typedef struct A2Graph A2Graph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into this library on the same thread.
 */
const char *a2_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *a2_status_name(A2Status status);

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
A2Status a2_graph_from_graph6(const char *text, A2Graph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void a2_graph_free(A2Graph *g);

/**
 * Writes a newly allocated graph6 string; free it with [`a2_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_graph_to_graph6(const A2Graph *g, char **out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_graph_vertex_count(const A2Graph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_graph_has_edge(const A2Graph *g, size_t u, size_t v, bool *out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_alpha_at_most_two(const A2Graph *g, bool *out);

/**
 * χ(G); fails with `ALPHA_AT_LEAST_THREE` outside the supported class.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_chromatic_number(const A2Graph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_clique_number(const A2Graph *g, size_t *out);

/**
 * Certificate for `K^ell_{ell, ceil(n/2) - ell}`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_construct_half_minor(const A2Graph *g, size_t ell, A2Certificate **out);

/**
 * Certificate for `K^ell_{ell, chi - ell}`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
A2Status a2_construct_chi_minor(const A2Graph *g, size_t ell, A2Certificate **out);

/**
 * # Safety
 * `c` must be NULL or a handle from this library not yet freed.
 */
void a2_certificate_free(A2Certificate *c);

/**
 * # Safety
 * `c` must be a live certificate handle; `out` must be writable.
 */
A2Status a2_certificate_validated(const A2Certificate *c, bool *out);

/**
 * Writes the certificate as JSON; free it with [`a2_string_free`].
 *
 * # Safety
 * `c` must be a live certificate handle; `out` must be writable.
 */
A2Status a2_certificate_to_json(const A2Certificate *c, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void a2_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALPHA2_MINORS_H */
