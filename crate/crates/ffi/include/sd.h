#ifndef SD_FFI_H
#define SD_FFI_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SdShape {
  SD_SHAPE_S = 0,
  SD_SHAPE_PI = 1,
} SdShape;

typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_UTF8 = 2,
  SD_STATUS_PARSE = 3,
  SD_STATUS_MATH = 4,
  SD_STATUS_NOT_FOUND = 5,
  SD_STATUS_IO = 6,
  SD_STATUS_PANIC = 7,
} SdStatus;

// A loaded, validated catalog.
typedef struct SdCatalog SdCatalog;

// A frame product `prod (1 - t^l)^{a_l}`.
typedef struct SdFrame SdFrame;

// A polynomial in `x, y, z, w` with rational coefficients.
typedef struct SdPolynomial SdPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. Valid until the
// next library call on the same thread; do not free.
const char *sd_last_error(void);

// # Safety
// `s` must come from this library or be null.
void sd_string_free(char *s);

// # Safety
// `data` must be an array returned by this library with its length, or null.
void sd_i64_array_free(int64_t *data, uintptr_t len);

// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum SdStatus sd_poly_parse(const char *text, struct SdPolynomial **out);

// # Safety
// `p` must come from this library or be null.
void sd_poly_free(struct SdPolynomial *p);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SdStatus sd_poly_to_string(const struct SdPolynomial *p, char **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum SdStatus sd_poly_add(const struct SdPolynomial *a,
                          const struct SdPolynomial *b,
                          struct SdPolynomial **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum SdStatus sd_poly_sub(const struct SdPolynomial *a,
                          const struct SdPolynomial *b,
                          struct SdPolynomial **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum SdStatus sd_poly_mul(const struct SdPolynomial *a,
                          const struct SdPolynomial *b,
                          struct SdPolynomial **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum SdStatus sd_poly_equal(const struct SdPolynomial *a, const struct SdPolynomial *b, bool *out);

// Berglund-Hubsch transpose of an invertible polynomial over the
// comma-separated variable list `vars`. Matrix rows follow the terms in
// the order written, so `x^2 + x*y^3` and `x*y^3 + x^2` transpose to
// polynomials that differ by a swap of variables.
//
// # Safety
// `text` and `vars` must be NUL-terminated strings; `out` must be writable.
enum SdStatus sd_bh_transpose(const char *text, const char *vars, struct SdPolynomial **out);

// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum SdStatus sd_frame_parse(const char *text, struct SdFrame **out);

// # Safety
// `f` must come from this library or be null.
void sd_frame_free(struct SdFrame *f);

// # Safety
// `f` must be a live handle; `out` must be writable.
enum SdStatus sd_frame_to_string(const struct SdFrame *f, char **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum SdStatus sd_frame_mul(const struct SdFrame *a, const struct SdFrame *b, struct SdFrame **out);

// Poincare series of a weight system written `"w1,w2,w3,w4;d1,d2"`.
//
// # Safety
// `weights` must be a NUL-terminated string; `out` must be writable.
enum SdStatus sd_poincare(const char *weights, struct SdFrame **out);

// # Safety
// `f` must be a live handle; `out` must be writable.
enum SdStatus sd_saito_dual(const struct SdFrame *f, uint64_t degree, struct SdFrame **out);

// Coefficients of the frame as a polynomial, ascending powers. Free with
// [`sd_i64_array_free`].
//
// # Safety
// `f` must be a live handle; `out_data`, `out_len` must be writable.
enum SdStatus sd_frame_to_polynomial(const struct SdFrame *f,
                                     int64_t **out_data,
                                     uintptr_t *out_len);

// Characteristic polynomial of the Coxeter element for `g[0..4]`,
// ascending powers. Free with [`sd_i64_array_free`].
//
// # Safety
// `g` must point to four integers; `out_data`, `out_len` must be writable.
enum SdStatus sd_charpoly(const uint64_t *g,
                          enum SdShape shape,
                          int64_t **out_data,
                          uintptr_t *out_len);

// Dolgachev pair of `(h1, h2)` under the weights `w[0..4]`, ascending.
//
// # Safety
// `h1`, `h2` must be live handles, `w` four integers, `out` two writable
// integers.
enum SdStatus sd_dolgachev(const struct SdPolynomial *h1,
                           const struct SdPolynomial *h2,
                           const uint64_t *w,
                           uint64_t *out);

// # Safety
// `out` must be writable.
enum SdStatus sd_catalog_shipped(struct SdCatalog **out);

// # Safety
// `path` must be a NUL-terminated string; `out` must be writable.
enum SdStatus sd_catalog_load(const char *path, struct SdCatalog **out);

// # Safety
// `c` must come from this library or be null.
void sd_catalog_free(struct SdCatalog *c);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum SdStatus sd_catalog_len(const struct SdCatalog *c, uintptr_t *out);

// Runs every check. `report_json` may be null; otherwise it receives the
// full report as JSON.
//
// # Safety
// `c` must be a live handle; `passed`, `total` must be writable.
enum SdStatus sd_catalog_verify(const struct SdCatalog *c,
                                uintptr_t *passed,
                                uintptr_t *total,
                                char **report_json);

// Text description of one entry, looked up by id or name.
//
// # Safety
// `c` must be a live handle, `name` a NUL-terminated string, `out` writable.
enum SdStatus sd_catalog_show(const struct SdCatalog *c, const char *name, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SD_FFI_H */
