/* C interface to the toric quantum-cohomology library.
 *
 * All functions that can fail take a qk_context; on failure they return
 * NULL (pointer results) or a nonzero status, and the context stores a
 * message retrievable with qk_last_error. Strings returned by *_json
 * functions are owned by the caller and released with qk_string_free.
 *
 * Status codes:
 *   0  success
 *   1  invalid input (schema or option errors)
 *   2  mathematical precondition failure
 */
#ifndef QK_H
#define QK_H

#ifdef __cplusplus
extern "C" {
#endif

#define QK_STATUS_OK 0
#define QK_STATUS_INVALID_INPUT 1
#define QK_STATUS_PRECONDITION 2

typedef struct qk_context qk_context;
typedef struct qk_git_data qk_git_data;
typedef struct qk_presentation qk_presentation;

const char *qk_version_string(void);

qk_context *qk_context_create(void);
void qk_context_destroy(qk_context *ctx);

/* Last error message for this context; empty string when the last call
 * succeeded. The pointer stays valid until the next call on the context. */
const char *qk_last_error(const qk_context *ctx);
int qk_last_status(const qk_context *ctx);

/* Parses {"weights": [[int]], "polarization": ["p/q"], "labels": [...]?}. */
qk_git_data *qk_git_data_parse(qk_context *ctx, const char *json_text);
void qk_git_data_destroy(qk_git_data *git);

int qk_git_data_rank(const qk_git_data *git);
int qk_git_data_coordinates(const qk_git_data *git);

/* Writes 1 or 0 to out_is_dm; returns a status code. */
int qk_git_data_is_dm(qk_context *ctx, const qk_git_data *git, int *out_is_dm);

qk_presentation *qk_presentation_build(qk_context *ctx, const qk_git_data *git);
void qk_presentation_destroy(qk_presentation *pres);
char *qk_presentation_to_json(qk_context *ctx, const qk_presentation *pres);

/* Inertia sectors of the quotient as a JSON array. */
char *qk_inertia_json(qk_context *ctx, const qk_git_data *git);

/* Runs a batch request {"command": ..., "input": ..., "options": ...} and
 * returns the rendered output (JSON or text per options.format). The status
 * is stored on the context; output is non-NULL whenever rendering succeeded,
 * including for error documents. */
char *qk_run_request(qk_context *ctx, const char *request_json);

void qk_string_free(char *text);

#ifdef __cplusplus
}
#endif

#endif /* QK_H */
