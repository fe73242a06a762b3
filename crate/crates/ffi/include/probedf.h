#ifndef PROBEDF_H
#define PROBEDF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum PdfStatus {
  PDF_STATUS_OK = 0,
  PDF_STATUS_NULL_POINTER = 1,
  PDF_STATUS_PARSE = 2,
  PDF_STATUS_INVALID_ARGUMENT = 3,
  PDF_STATUS_BUFFER_TOO_SMALL = 4,
  PDF_STATUS_INTERNAL = 5,
} PdfStatus;

// Input text format for `pdf_graph_parse`.
typedef enum PdfFormat {
  PDF_FORMAT_EDGELIST = 0,
  PDF_FORMAT_DIMACS = 1,
} PdfFormat;

// Opaque certificate handle.
typedef struct PdfCertificate PdfCertificate;

// Opaque graph handle.
typedef struct PdfGraph PdfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty if none. The
// pointer stays valid until the next failing call on the same thread.
const char *pdf_last_error(void);

// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
// consecutive endpoints.
//
// # Safety
// `edges` must point to `2 * m` readable values (or may be null when
// `m == 0`), and `out` must be writable.
enum PdfStatus pdf_graph_new(size_t n, const size_t *edges, size_t m, struct PdfGraph **out);

// Parses a NUL-terminated edgelist or DIMACS text.
//
// # Safety
// `text` must be a valid C string and `out` writable.
enum PdfStatus pdf_graph_parse(const char *text, enum PdfFormat format, struct PdfGraph **out);

// # Safety
// `g` must come from this library and not be freed twice. Null is ignored.
void pdf_graph_free(struct PdfGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t pdf_graph_vertex_count(const struct PdfGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t pdf_graph_edge_count(const struct PdfGraph *g);

// Runs recognition and returns a new certificate handle.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum PdfStatus pdf_recognize(const struct PdfGraph *g, struct PdfCertificate **out);

// # Safety
// `c` must come from this library and not be freed twice. Null is ignored.
void pdf_certificate_free(struct PdfCertificate *c);

// 1 for a member, 0 for a non-member or a null handle.
//
// # Safety
// `c` must be null or a live handle.
int32_t pdf_certificate_is_member(const struct PdfCertificate *c);

// Forbidden-subgraph indicator (1..=17), or 0 for a positive certificate
// or a null handle.
//
// # Safety
// `c` must be null or a live handle.
uint8_t pdf_certificate_indicator(const struct PdfCertificate *c);

// Ordered obstruction vertices of a negative certificate, or the
// nonprobes of a positive one. `*len` always receives the full length;
// returns `BufferTooSmall` when `cap` is short.
//
// # Safety
// `buf` must have room for `cap` values; `len` must be writable.
enum PdfStatus pdf_certificate_vertices(const struct PdfCertificate *c,
                                        size_t *buf,
                                        size_t cap,
                                        size_t *len);

// Completion edges of a positive certificate as `2 * pairs` endpoints;
// zero pairs for a negative one. Sizes count values, not pairs.
//
// # Safety
// `buf` must have room for `cap` values; `len` must be writable.
enum PdfStatus pdf_certificate_completion(const struct PdfCertificate *c,
                                          size_t *buf,
                                          size_t cap,
                                          size_t *len);

// Certificate as JSON; release the string with `pdf_string_free`.
//
// # Safety
// `c` must be a live handle and `out` writable.
enum PdfStatus pdf_certificate_to_json(const struct PdfCertificate *c, char **out);

// Parses a JSON certificate.
//
// # Safety
// `json` must be a valid C string and `out` writable.
enum PdfStatus pdf_certificate_from_json(const char *json, struct PdfCertificate **out);

// # Safety
// `s` must come from `pdf_certificate_to_json`. Null is ignored.
void pdf_string_free(char *s);

// Checks `c` against `g`; `*valid` receives 1 or 0.
//
// # Safety
// Both handles must be live and `valid` writable.
enum PdfStatus pdf_verify(const struct PdfGraph *g, const struct PdfCertificate *c, int32_t *valid);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PROBEDF_H */
