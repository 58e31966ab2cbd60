/* C interface to the pdskit shared library.
 *
 * All functions return a pdskit_status; outputs are passed back through
 * pointers. Strings returned through char** are heap-allocated and must be
 * released with pdskit_string_free. Handles are opaque and released with
 * their _free function. On any failure, pdskit_last_error() describes the
 * problem for the calling thread.
 */
#ifndef PDSKIT_H
#define PDSKIT_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(PDSKIT_BUILD)
#define PDSKIT_API __declspec(dllexport)
#else
#define PDSKIT_API __declspec(dllimport)
#endif
#else
#define PDSKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdskit_status {
  PDSKIT_OK = 0,
  /* well-formed input, mathematical hypothesis not satisfied */
  PDSKIT_DOMAIN_ERROR = 1,
  /* malformed input */
  PDSKIT_PARSE_ERROR = 2,
  /* internal invariant violation; indicates a bug */
  PDSKIT_INTERNAL_ERROR = 3
} pdskit_status;

typedef struct pdskit_group pdskit_group;
typedef struct pdskit_subset pdskit_subset;

PDSKIT_API const char* pdskit_version(void);

/* Message for the most recent failure on this thread; valid until the next
 * pdskit call on the same thread. */
PDSKIT_API const char* pdskit_last_error(void);

PDSKIT_API void pdskit_string_free(char* s);

/* --- groups: comma-separated cyclic orders, canonicalized to primary form */

PDSKIT_API pdskit_status pdskit_group_parse(const char* descriptor, pdskit_group** out_group);
PDSKIT_API void pdskit_group_free(pdskit_group* group);
PDSKIT_API pdskit_status pdskit_group_descriptor(const pdskit_group* group, char** out_text);
PDSKIT_API uint64_t pdskit_group_order(const pdskit_group* group);

/* --- subsets: "<group descriptor> : [rank,rank,...]" */

PDSKIT_API pdskit_status pdskit_subset_parse(const char* text, pdskit_subset** out_subset);
PDSKIT_API void pdskit_subset_free(pdskit_subset* subset);
PDSKIT_API pdskit_status pdskit_subset_text(const pdskit_subset* subset, char** out_text);
PDSKIT_API uint64_t pdskit_subset_size(const pdskit_subset* subset);
/* {"group", "ranks", "params"}; requires the subset to classify as a PDS */
PDSKIT_API pdskit_status pdskit_subset_params_json(const pdskit_subset* subset, char** out_json);

/* --- constructions */

PDSKIT_API pdskit_status pdskit_paley(uint64_t q, pdskit_subset** out_subset);
/* construct document with the field modulus attached */
PDSKIT_API pdskit_status pdskit_paley_construct_json(uint64_t q, char** out_json);
PDSKIT_API pdskit_status pdskit_trivial_from_hall(const pdskit_group* group,
                                                  const char* primes_csv,
                                                  pdskit_subset** out_subset);
PDSKIT_API pdskit_status pdskit_trivial_from_generators(const pdskit_group* group,
                                                        const char* ranks_csv,
                                                        pdskit_subset** out_subset);
PDSKIT_API pdskit_status pdskit_latin_square_lines(uint64_t n, uint64_t r,
                                                   pdskit_subset** out_subset);

/* --- analysis */

PDSKIT_API pdskit_status pdskit_verify_json(const pdskit_subset* subset, char** out_json);
PDSKIT_API pdskit_status pdskit_restrict_json(const pdskit_subset* subset, const char* primes_csv,
                                              char** out_json);
PDSKIT_API pdskit_status pdskit_nonexistence_json(uint64_t v, char** out_json);
PDSKIT_API pdskit_status pdskit_classify_json(uint64_t v, char** out_json);

/* --- exhaustive search
 *
 * Streams each result's text form to the sink in deterministic order; a
 * nonzero sink return stops the stream early. order_bound 0 picks the
 * default (121 pruned, 49 unpruned); max_results 0 means unlimited.
 */
typedef int (*pdskit_subset_sink)(const char* subset_text, void* user);
PDSKIT_API pdskit_status pdskit_search(const char* group_descriptor, int prune,
                                       uint64_t order_bound, uint64_t max_results,
                                       unsigned threads, pdskit_subset_sink sink, void* user,
                                       uint64_t* out_found);

#ifdef __cplusplus
}
#endif

#endif /* PDSKIT_H */
