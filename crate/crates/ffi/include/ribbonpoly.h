#ifndef RIBBONPOLY_H
#define RIBBONPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum RpStatus {
  RP_STATUS_OK = 0,
  RP_STATUS_NULL_POINTER = 1,
  RP_STATUS_INVALID_UTF8 = 2,
  RP_STATUS_PARSE = 3,
  RP_STATUS_UNKNOWN_EDGE = 4,
  RP_STATUS_GUARD_EXCEEDED = 5,
  RP_STATUS_INVALID_ARGUMENT = 6,
  RP_STATUS_PANIC = 7,
} RpStatus;

typedef enum RpFormat {
  RP_FORMAT_RIBBON = 0,
  /**
   * Falls back to the ribbon format for graphs with more than one vertex.
   */
  RP_FORMAT_BOUQUET = 1,
  RP_FORMAT_JSON = 2,
} RpFormat;

typedef enum RpSubgroup {
  RP_SUBGROUP_DELTA = 0,
  RP_SUBGROUP_TAU = 1,
  RP_SUBGROUP_WILSON = 2,
  RP_SUBGROUP_TRIALITY = 3,
  RP_SUBGROUP_FULL = 4,
} RpSubgroup;

typedef enum RpMethod {
  RP_METHOD_BRUTE = 0,
  RP_METHOD_RECURSIVE = 1,
} RpMethod;

/**
 * Opaque ribbon graph handle.
 */
typedef struct RpGraph RpGraph;

/**
 * Opaque integer polynomial handle.
 */
typedef struct RpPoly RpPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a ribbon-file text, an inline bouquet such as `"(1,2,-1,2)"`, or
 * the JSON form.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum RpStatus rp_graph_parse(const char *text, struct RpGraph **out);

/**
 * # Safety
 * `g` must be null or a handle returned by this library, freed once.
 */
void rp_graph_free(struct RpGraph *g);

/**
 * Vertex, edge and boundary component counts; any out-pointer may be null.
 *
 * # Safety
 * `g` must be a valid handle; non-null out-pointers must be valid.
 */
enum RpStatus rp_graph_counts(const struct RpGraph *g,
                              uintptr_t *vertices,
                              uintptr_t *edges,
                              uintptr_t *boundaries);

/**
 * Renders a graph; free the result with [`rp_string_free`].
 *
 * # Safety
 * `g` must be a valid handle and `out` a valid pointer.
 */
enum RpStatus rp_graph_to_string(const struct RpGraph *g, enum RpFormat format, char **out);

/**
 * Partial dual with respect to a comma-separated edge list.
 *
 * # Safety
 * `g` must be a valid handle, `edges` a valid C string, `out` valid.
 */
enum RpStatus rp_graph_partial_dual(const struct RpGraph *g,
                                    const char *edges,
                                    struct RpGraph **out);

/**
 * Partial Petrial with respect to a comma-separated edge list.
 *
 * # Safety
 * `g` must be a valid handle, `edges` a valid C string, `out` valid.
 */
enum RpStatus rp_graph_partial_petrial(const struct RpGraph *g,
                                       const char *edges,
                                       struct RpGraph **out);

/**
 * Applies a word over `d`/`t` to an edge set; the last letter acts first.
 *
 * # Safety
 * `g` must be a valid handle, `word` and `edges` valid C strings, `out` valid.
 */
enum RpStatus rp_graph_apply_word(const struct RpGraph *g,
                                  const char *word,
                                  const char *edges,
                                  struct RpGraph **out);

/**
 * Vertex polynomial of a graph for one ribbon subgroup.
 *
 * # Safety
 * `g` must be a valid handle and `out` a valid pointer.
 */
enum RpStatus rp_vertex_polynomial(const struct RpGraph *g,
                                   enum RpSubgroup subgroup,
                                   enum RpMethod method,
                                   struct RpPoly **out);

/**
 * Text form, e.g. `3x + x^2`.
 *
 * # Safety
 * `p` must be a valid handle and `out` a valid pointer.
 */
enum RpStatus rp_poly_to_string(const struct RpPoly *p, char **out);

/**
 * JSON form mapping exponents to decimal coefficient strings.
 *
 * # Safety
 * `p` must be a valid handle and `out` a valid pointer.
 */
enum RpStatus rp_poly_to_json(const struct RpPoly *p, char **out);

/**
 * Degree of a nonzero polynomial.
 *
 * # Safety
 * `p` must be a valid handle and `out` a valid pointer.
 */
enum RpStatus rp_poly_degree(const struct RpPoly *p, uint32_t *out);

/**
 * Coefficient of `x^exp` as a decimal string.
 *
 * # Safety
 * `p` must be a valid handle and `out` a valid pointer.
 */
enum RpStatus rp_poly_coefficient(const struct RpPoly *p, uint32_t exp, char **out);

/**
 * # Safety
 * `p` must be null or a handle returned by this library, freed once.
 */
void rp_poly_free(struct RpPoly *p);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void rp_string_free(char *s);

/**
 * Message for the last failure on this thread; empty if none. Valid until
 * the next failing call on the same thread.
 */
const char *rp_last_error_message(void);

/**
 * Library version as a static C string.
 */
const char *rp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIBBONPOLY_H */
