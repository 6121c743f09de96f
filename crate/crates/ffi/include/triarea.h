#ifndef TRIAREA_H
#define TRIAREA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TaStatus {
  TaStatus_Ok = 0,
  TaStatus_NullPointer = 1,
  TaStatus_InvalidArgument = 2,
  TaStatus_ParseError = 3,
  TaStatus_Degenerate = 4,
  TaStatus_NoNonzeroTriangle = 5,
  TaStatus_ConstructionFailed = 6,
  TaStatus_ParallelAxes = 7,
  TaStatus_InvariantViolated = 8,
  TaStatus_Panic = 9,
} TaStatus;

/**
 * Opaque point set (planar, spatial or a line arrangement).
 */
typedef struct TaPointSet TaPointSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call on the same thread.
 */
const char *ta_last_error(void);

void ta_string_free(char *s);

/**
 * Parses a point file (`dim=2`, `dim=3`) or line file (`lines`).
 */
enum TaStatus ta_pointset_parse(const char *text, struct TaPointSet **out);

/**
 * Planar set from `n` integer pairs `xy[2i], xy[2i+1]`.
 */
enum TaStatus ta_pointset_new_2d(const int64_t *xy, uintptr_t n, struct TaPointSet **out);

/**
 * Spatial set from `n` integer triples.
 */
enum TaStatus ta_pointset_new_3d(const int64_t *xyz, uintptr_t n, struct TaPointSet **out);

void ta_pointset_free(struct TaPointSet *ps);

enum TaStatus ta_pointset_len(const struct TaPointSet *ps, uintptr_t *out);

/**
 * 2 or 3 for point sets, 0 for line sets.
 */
enum TaStatus ta_pointset_dim(const struct TaPointSet *ps, uint8_t *out);

/**
 * Canonical file text; free with `ta_string_free`.
 */
enum TaStatus ta_pointset_to_text(const struct TaPointSet *ps, char **out);

enum TaStatus ta_gen_grid(uintptr_t w, uintptr_t h, struct TaPointSet **out);

enum TaStatus ta_gen_convex_unit(uint32_t i, uint64_t seed, struct TaPointSet **out);

/**
 * Number of triples, `C(n,3)`, and of collinear triples.
 */
enum TaStatus ta_census_totals(const struct TaPointSet *ps,
                               uint64_t *triples,
                               uint64_t *degenerate);

/**
 * Number of distinct nonzero areas.
 */
enum TaStatus ta_census_distinct(const struct TaPointSet *ps, uint64_t *out);

/**
 * Unit-area triangles (doubled area 2 in the plane, `4A²` = 4 in space).
 */
enum TaStatus ta_census_unit(const struct TaPointSet *ps, uint64_t *out);

/**
 * Minimum nonzero area class: its key as a `p/q` string (optional, free with
 * `ta_string_free`) and its size.
 */
enum TaStatus ta_census_min(const struct TaPointSet *ps, char **key, uint64_t *count);

enum TaStatus ta_census_max(const struct TaPointSet *ps, char **key, uint64_t *count);

/**
 * Common points of three cylinders given as JSON (see the CLI's
 * `--cyl-triple` format).
 */
enum TaStatus ta_cylinder_triple_count(const char *json, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIAREA_H */
