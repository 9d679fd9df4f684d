#ifndef NETLAB_H
#define NETLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NetlabStatus {
  NETLAB_STATUS_OK = 0,
  NETLAB_STATUS_NULL_POINTER = 1,
  NETLAB_STATUS_INVALID_UTF8 = 2,
  NETLAB_STATUS_PARSE = 3,
  // A point or set does not fit the carrier it was used with.
  NETLAB_STATUS_CARRIER_MISMATCH = 4,
  NETLAB_STATUS_TOO_LARGE = 5,
  NETLAB_STATUS_INVALID_INPUT = 6,
  NETLAB_STATUS_PANIC = 7,
} NetlabStatus;

// A filter on a finite carrier.
typedef struct NetlabFilter NetlabFilter;

// A net over a finite directed set, or an eventually periodic sequence.
typedef struct NetlabNet NetlabNet;

// A finite topological space.
typedef struct NetlabSpace NetlabSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the last failed call on this thread, or null. Valid
// until the next netlab call on the same thread.
const char *netlab_last_error(void);

// Frees a string returned by netlab. Null is ignored.
//
// # Safety
// `s` must come from a netlab function that documents an owned string.
void netlab_string_free(char *s);

// Number of topologies on `n ≤ 4` points.
//
// # Safety
// `out` must be valid for writes.
enum NetlabStatus netlab_enumerate_count(size_t n, size_t *out);

// # Safety
// `text` must be a nul-terminated string and `out` valid for writes.
enum NetlabStatus netlab_space_parse(const char *text, struct NetlabSpace **out);

// # Safety
// `space` must be null or come from [`netlab_space_parse`], and not be
// used afterwards.
void netlab_space_free(struct NetlabSpace *space);

// The space in text form; free it with [`netlab_string_free`].
//
// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_space_format(const struct NetlabSpace *space, char **out);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_space_carrier_size(const struct NetlabSpace *space, size_t *out);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_space_is_open(const struct NetlabSpace *space, uint64_t set, bool *out);

// The smallest open set containing `x`.
//
// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_space_minimal_open(const struct NetlabSpace *space,
                                            size_t x,
                                            uint64_t *out);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_space_closure(const struct NetlabSpace *space,
                                       uint64_t set,
                                       uint64_t *out);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_space_is_hausdorff(const struct NetlabSpace *space, bool *out);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_space_is_sequential(const struct NetlabSpace *space, bool *out);

// Limits of a sequence literal such as `[0,1|2]`.
//
// # Safety
// Pointers must be valid and `literal` nul-terminated.
enum NetlabStatus netlab_seq_limits(const struct NetlabSpace *space,
                                    const char *literal,
                                    uint64_t *out);

// # Safety
// `text` must be a nul-terminated string and `out` valid for writes.
enum NetlabStatus netlab_net_parse(const char *text, struct NetlabNet **out);

// # Safety
// `net` must be null or come from [`netlab_net_parse`], and not be used
// afterwards.
void netlab_net_free(struct NetlabNet *net);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_net_limits(const struct NetlabNet *net,
                                    const struct NetlabSpace *space,
                                    uint64_t *out);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_net_cluster_points(const struct NetlabNet *net,
                                            const struct NetlabSpace *space,
                                            uint64_t *out);

// # Safety
// `text` must be a nul-terminated string and `out` valid for writes.
enum NetlabStatus netlab_filter_parse(const char *text, struct NetlabFilter **out);

// # Safety
// `filter` must be null or come from a netlab filter constructor, and
// not be used afterwards.
void netlab_filter_free(struct NetlabFilter *filter);

// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_filter_limits(const struct NetlabFilter *filter,
                                       const struct NetlabSpace *space,
                                       uint64_t *out);

// An ultrafilter containing `filter`, as a new handle.
//
// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_filter_refine(const struct NetlabFilter *filter,
                                       struct NetlabFilter **out);

// The point an ultrafilter is principal at.
//
// # Safety
// Pointers must be valid.
enum NetlabStatus netlab_filter_ultrafilter_point(const struct NetlabFilter *filter, size_t *out);

// Digit `n` after the binary point of the rational `p/q` in `[0, 1)`.
//
// # Safety
// `rational` must be nul-terminated and `out` valid for writes.
enum NetlabStatus netlab_binary_digit(const char *rational, uint32_t n, uint8_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NETLAB_H */
