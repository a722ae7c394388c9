/* C interface to the permdiag library.
 *
 * Every command writes its rendered result into a pd_result owned by the
 * caller.  A command that ran but whose verification failed returns
 * PD_VERIFY_FAILED and still produces a result; any other non-zero status
 * leaves *out untouched and sets a thread-local message read through
 * pd_last_error(). */
#ifndef PERMDIAG_H
#define PERMDIAG_H

#include <stddef.h>

#if defined(_WIN32)
#define PD_API __declspec(dllexport)
#else
#define PD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
    PD_OK = 0,
    PD_VERIFY_FAILED = 1,
    PD_INVALID_ARGUMENT = 2,
    PD_PARSE_ERROR = 3,
    PD_PRECONDITION = 4,
    PD_OUT_OF_RANGE = 5,
    PD_OVERFLOW = 6,
    PD_INTERNAL = 7
} pd_status;

typedef enum pd_format { PD_FORMAT_TEXT = 0, PD_FORMAT_JSON = 1, PD_FORMAT_LATEX = 2 } pd_format;
typedef enum pd_variance { PD_ALGEBRA = 0, PD_COALGEBRA = 1 } pd_variance;
typedef enum pd_sign_rule { PD_SIGNS_LITERAL = 0, PD_SIGNS_COHERENT = 1 } pd_sign_rule;
typedef enum pd_assoc_method { PD_METHOD_PROJECTION = 0, PD_METHOD_DIRECT = 1, PD_METHOD_BOTH = 2 } pd_assoc_method;

typedef struct pd_options pd_options;
typedef struct pd_result pd_result;

PD_API const char* pd_version(void);
PD_API const char* pd_status_name(pd_status s);
/* Message of the last failure on the calling thread, "" if none. */
PD_API const char* pd_last_error(void);

PD_API pd_options* pd_options_create(void);
PD_API void pd_options_destroy(pd_options* o);
PD_API pd_status pd_options_set_format(pd_options* o, pd_format f);
/* Largest size argument accepted by the commands (default 8). */
PD_API pd_status pd_options_set_cap(pd_options* o, int cap);
/* Worker threads used by pd_verify (default 1). */
PD_API pd_status pd_options_set_jobs(pd_options* o, int jobs);

PD_API const char* pd_result_text(const pd_result* r);
PD_API size_t pd_result_size(const pd_result* r);
PD_API void pd_result_destroy(pd_result* r);

PD_API pd_status pd_perm_diagonal(const pd_options* o, int n, pd_result** out);
PD_API pd_status pd_assoc_diagonal(const pd_options* o, int n, pd_assoc_method method, pd_result** out);
PD_API pd_status pd_multi_diagonal(const pd_options* o, int n, pd_result** out);
PD_API pd_status pd_boundary(const pd_options* o, const char* partition, pd_result** out);
PD_API pd_status pd_configs(const pd_options* o, int n, int count_only, pd_result** out);
PD_API pd_status pd_faceword(const pd_options* o, const char* partition, pd_result** out);
PD_API pd_status pd_tonks_classes(const pd_options* o, int n, pd_result** out);
PD_API pd_status pd_relations(const pd_options* o, const char* partition, pd_result** out);
PD_API pd_status pd_qcheck(const pd_options* o, const char* ab, const char* cd, pd_result** out);
PD_API pd_status pd_tensor_ops(const pd_options* o, int n, pd_variance v, pd_sign_rule rule, pd_result** out);
/* filter selects suites by module or name; NULL or "" runs all of them.
 * strict makes known deviations count as failures. */
PD_API pd_status pd_verify(const pd_options* o, int max_n, int strict, const char* filter, pd_result** out);

#ifdef __cplusplus
}
#endif

#endif
