#ifndef QMAX_H
#define QMAX_H

/* This header is generated by cbindgen from qmax-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Family selector for [`qmax_graph_family`].
typedef enum QmaxFamily {
  QMAX_FAMILY_FAN = 0,
  QMAX_FAMILY_NEAR_FAN = 1,
  QMAX_FAMILY_D1 = 2,
  QMAX_FAMILY_D2 = 3,
  QMAX_FAMILY_D3 = 4,
  QMAX_FAMILY_STAR = 5,
} QmaxFamily;

// Result of every call in this ABI.
typedef enum QmaxStatus {
  QMAX_STATUS_OK = 0,
  // A required pointer argument was null.
  QMAX_STATUS_NULL_ARGUMENT = 1,
  // A parameter was out of range for the requested operation.
  QMAX_STATUS_INVALID_ARGUMENT = 2,
  // The graph6 input could not be parsed.
  QMAX_STATUS_PARSE_ERROR = 3,
  // The graph is disconnected, so no Perron eigenvector exists.
  QMAX_STATUS_DISCONNECTED = 4,
  // The eigensolver hit its iteration cap.
  QMAX_STATUS_NO_CONVERGENCE = 5,
  // The caller's buffer is too small for the result.
  QMAX_STATUS_BUFFER_TOO_SMALL = 6,
  // An unexpected internal failure (a caught panic).
  QMAX_STATUS_INTERNAL_ERROR = 7,
} QmaxStatus;

// Opaque graph handle.
typedef struct QmaxGraph QmaxGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses one short-form graph6 line into a new graph handle.
//
// # Safety
// `line` must be a NUL-terminated string; `out` must be a valid pointer.
enum QmaxStatus qmax_graph_from_graph6(const char *line, struct QmaxGraph **out);

// Builds a named family instance. `k` is the apex parameter (ignored for
// fan/star), `j` the gap parameter (D3 only).
//
// # Safety
// `out` must be a valid pointer.
enum QmaxStatus qmax_graph_family(enum QmaxFamily family,
                                  uint32_t n,
                                  uint32_t k,
                                  uint32_t j,
                                  struct QmaxGraph **out);

// Releases a handle. Null is a no-op.
//
// # Safety
// `g` must have come from this library and not be freed twice.
void qmax_graph_free(struct QmaxGraph *g);

// Number of vertices.
//
// # Safety
// `g` and `out` must be valid pointers.
enum QmaxStatus qmax_graph_order(const struct QmaxGraph *g, uint32_t *out);

// Number of edges.
//
// # Safety
// `g` and `out` must be valid pointers.
enum QmaxStatus qmax_graph_size(const struct QmaxGraph *g, uint32_t *out);

// Maximum vertex degree.
//
// # Safety
// `g` and `out` must be valid pointers.
enum QmaxStatus qmax_graph_max_degree(const struct QmaxGraph *g, uint32_t *out);

// Writes the short-form graph6 encoding (NUL-terminated) into `buf`.
//
// # Safety
// `buf` must point to at least `cap` writable bytes.
enum QmaxStatus qmax_graph_to_graph6(const struct QmaxGraph *g, char *buf, uintptr_t cap);

// Q-index (largest signless-Laplacian eigenvalue) by power iteration.
//
// # Safety
// `g` and `out_q` must be valid pointers.
enum QmaxStatus qmax_qindex(const struct QmaxGraph *g, double tol, double *out_q);

// Q-index together with the unit Perron eigenvector; `vec` must hold
// exactly `order` doubles.
//
// # Safety
// `g`, `out_q` and `vec` must be valid; `vec` must have space for `len`
// doubles.
enum QmaxStatus qmax_perron(const struct QmaxGraph *g,
                            double tol,
                            double *out_q,
                            double *vec,
                            uintptr_t len);

// All signless-Laplacian eigenvalues in descending order (cyclic Jacobi);
// `out` must hold exactly `order` doubles.
//
// # Safety
// `g` and `out` must be valid; `out` must have space for `len` doubles.
enum QmaxStatus qmax_spectrum(const struct QmaxGraph *g, double *out, uintptr_t len);

// Number of labeled triangulations of the n-gon (the Catalan number
// C_{n-2}); fails with `QMAX_STATUS_INVALID_ARGUMENT` when it does not fit
// in 64 bits.
//
// # Safety
// `out` must be a valid pointer.
enum QmaxStatus qmax_labeled_count(uint32_t n, uint64_t *out);

// Number of isomorphism classes of maximal outer-planar graphs of order n
// (exhaustive enumeration; keep n small).
//
// # Safety
// `out` must be a valid pointer.
enum QmaxStatus qmax_class_count(uint32_t n, uint64_t *out);

// Runs the exhaustive extremality check at order n; writes 1 when the fan
// is the unique Q-index maximizer, 0 otherwise.
//
// # Safety
// `out_holds` must be a valid pointer.
enum QmaxStatus qmax_theorem_check(uint32_t n, uint8_t *out_holds);

// Library version as a static NUL-terminated string.
const char *qmax_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QMAX_H */
