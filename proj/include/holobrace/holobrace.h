#ifndef HOLOBRACE_H
#define HOLOBRACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HB_API __declspec(dllexport)
#else
#define HB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HB_OK = 0,
  HB_INVALID_INPUT = 1,
  HB_CAPACITY = 2,
  HB_DOMAIN = 3,
  HB_INTERNAL = 4,
  HB_NULL_ARGUMENT = 5
} hb_status;

typedef enum {
  HB_PATH_AUTO = 0,
  HB_PATH_ENUMERATION = 1,
  HB_PATH_STRUCTURED = 2,
  HB_PATH_REDUCTION = 3
} hb_path;

typedef enum { HB_FORMAT_TEXT = 0, HB_FORMAT_CSV = 1, HB_FORMAT_JSON = 2 } hb_format;

typedef struct hb_options hb_options;
typedef struct hb_census hb_census;
typedef struct hb_brace hb_brace;

typedef void (*hb_progress_fn)(const char* message, void* user);

HB_API const char* hb_version(void);
/* Message of the last failed call on this thread, "" if none. */
HB_API const char* hb_last_error(void);
/* Frees strings returned through char** out-parameters. */
HB_API void hb_string_free(char* s);

/* Defaults, with HOLOBRACE_CAP applied when set. */
HB_API hb_status hb_options_new(hb_options** out);
HB_API void hb_options_free(hb_options* opts);
HB_API hb_status hb_options_set_cap(hb_options* opts, uint64_t cap);
HB_API hb_status hb_options_set_workers(hb_options* opts, unsigned workers);
HB_API hb_status hb_options_set_progress(hb_options* opts, hb_progress_fn fn, void* user);

/* opts may be NULL for the defaults. n_spec like "c2xc8", g_spec like "q16". */
HB_API hb_status hb_census_compute(const char* n_spec, const char* g_spec, hb_path path, const hb_options* opts,
                                   hb_census** out);
HB_API void hb_census_free(hb_census* c);
HB_API uint64_t hb_census_c(const hb_census* c);
HB_API uint64_t hb_census_r(const hb_census* c);
HB_API uint64_t hb_census_h(const hb_census* c);
/* "full", "sylow", "structured" or "reduction"; owned by the census. */
HB_API const char* hb_census_path(const hb_census* c);
HB_API hb_status hb_census_class(const hb_census* c, size_t index, uint64_t* orbit_size, uint64_t* stabilizer);
/* dump_aut != 0 adds a generating set of Aut(N). */
HB_API hb_status hb_census_to_json(const hb_census* c, int dump_aut, const hb_options* opts, char** out);

HB_API hb_status hb_spectrum_json(const char* n_spec, const hb_options* opts, char** out);

/* which is 1, 3 or 4; n_max and s are ignored for table 1. */
HB_API hb_status hb_table(int which, int n_max, uint64_t s, hb_format format, const hb_options* opts, char** out);

/* Sets *ok to 1 iff the closed forms match the sum over every abelian N of
 * order 4m; *out receives a JSON report. */
HB_API hb_status hb_verify_conjecture(uint64_t m, const hb_options* opts, int* ok, char** out);

HB_API hb_status hb_q_closed(uint64_t m, uint64_t* out);
HB_API hb_status hb_d_closed(uint64_t m, uint64_t* out);
HB_API hb_status hb_hgs_count(const char* g_spec, const char* n_spec, uint64_t r, uint64_t* out);

/* Brace of the representative of class `index`. */
HB_API hb_status hb_brace_from_census(const hb_census* c, size_t index, hb_brace** out);
HB_API hb_status hb_brace_from_json(const char* json, hb_brace** out);
HB_API void hb_brace_free(hb_brace* b);
HB_API uint32_t hb_brace_order(const hb_brace* b);
/* a o b. */
HB_API hb_status hb_brace_op(const hb_brace* b, uint32_t x, uint32_t y, uint32_t* out);
HB_API hb_status hb_brace_to_json(const hb_brace* b, char** out);
/* *ok = 1 if the brace axioms hold; otherwise *failure (if non-NULL)
 * receives a description with the offending elements. */
HB_API hb_status hb_brace_verify(const hb_brace* b, int* ok, char** failure);
/* Builds the YBE solution and checks involutivity and the braid relation
 * (HB_INTERNAL if they fail); reports nondegeneracy of both components. */
HB_API hb_status hb_brace_ybe_check(const hb_brace* b, int* left_nondegenerate, int* right_nondegenerate);

#ifdef __cplusplus
}
#endif

#endif
