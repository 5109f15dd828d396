/* C interface to the symmetric-variety cohomology library.
 *
 * All functions return SYMCOH_OK on success; on failure they return a status
 * code and leave a message readable through symcoh_last_error() (thread
 * local).  Strings returned through out parameters are heap allocated and
 * must be released with symcoh_string_free().
 */
#ifndef SYMCOH_H
#define SYMCOH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct symcoh_pair symcoh_pair;

typedef enum {
    SYMCOH_OK = 0,
    SYMCOH_ERROR_INVALID = 2,   /* invalid argument, pair spec, or lambda */
    SYMCOH_ERROR_UNBOUNDED = 3, /* a lattice region required finite is not */
    SYMCOH_ERROR_INTERNAL = 4
} symcoh_status;

const char* symcoh_last_error(void);
void symcoh_string_free(char* s);

/* Construction: built-in catalog name (n for parameterized families), a JSON
 * pair-spec document, a pair-spec file, or the CLI resolution order
 * (catalog, then path, then SYMCOH_PAIR_PATH). */
symcoh_status symcoh_pair_from_catalog(const char* name, int n, symcoh_pair** out);
symcoh_status symcoh_pair_from_spec_json(const char* json_text, symcoh_pair** out);
symcoh_status symcoh_pair_from_file(const char* path, symcoh_pair** out);
symcoh_status symcoh_pair_resolve(const char* name_or_path, int n, symcoh_pair** out);
void symcoh_pair_free(symcoh_pair* pair);

int symcoh_pair_restricted_rank(const symcoh_pair* pair);
int symcoh_pair_ambient_rank(const symcoh_pair* pair);
symcoh_status symcoh_pair_info_json(const symcoh_pair* pair, char** out_json);

/* lambda with restricted-rank entries is read in special-lattice units (the
 * per-family coordinates of the catalog pair); with ambient-rank entries it
 * is read in fundamental-weight coordinates and must lie in the special
 * lattice. */
symcoh_status symcoh_euler_json(const symcoh_pair* pair, const long long* lambda, size_t len,
                                char** out_json);
symcoh_status symcoh_cohomology_json(const symcoh_pair* pair, const long long* lambda, size_t len,
                                     int exact, char** out_json);

/* Lattice diagram of nonvanishing degrees over a special-basis window;
 * format is "svg" or "ascii". */
symcoh_status symcoh_regions_render(const symcoh_pair* pair, long long x0, long long x1,
                                    long long y0, long long y1, const char* format,
                                    char** out_text);

symcoh_status symcoh_catalog_json(char** out_json);

/* Runs a named verification suite; *failures receives the number of failed
 * properties and *out_report a human-readable PASS/FAIL listing. */
symcoh_status symcoh_check_suite(const char* suite, char** out_report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* SYMCOH_H */
