/* C interface to the valuation toolkit. All functionality is driven
 * through JSON run-config documents; results come back as an opaque handle
 * holding the exit status, the stdout payload, the diagnostic text, and
 * the primary result document. The library never throws across this
 * boundary and never writes to stdio itself. */

#ifndef VALKIT_H
#define VALKIT_H

#ifdef __cplusplus
extern "C" {
#endif

/* status codes, mirrored in the CLI's exit codes */
#define VK_OK 0        /* command succeeded */
#define VK_EVERIFY 1   /* ran fine but a verification/check failed */
#define VK_EINPUT 2    /* malformed or invalid input; see the error text */
#define VK_EINTERNAL 3 /* a bug in the library, not in the input */

typedef struct vk_result vk_result;

/* Execute one run-config JSON document, e.g.
 *   {"schema":"v1","type":"run_config","command":"eval",
 *    "inputs":{"weights":"w.json","poly":"f.json"}}
 * Returns NULL only when allocation fails or config_json is NULL; every
 * other problem is reported inside the returned handle. Free the handle
 * with vk_result_free. */
vk_result* vk_run_json(const char* config_json);

/* VK_OK / VK_EVERIFY / VK_EINPUT / VK_EINTERNAL */
int vk_result_code(const vk_result* r);
/* stdout payload (result documents, pass/fail lines); never NULL */
const char* vk_result_output(const vk_result* r);
/* diagnostic text with the offending field path; empty when code is VK_OK */
const char* vk_result_error(const vk_result* r);
/* canonical JSON of the primary result document, or "" when none */
const char* vk_result_document(const vk_result* r);
void vk_result_free(vk_result* r);

/* Last error for calls that returned NULL, thread-local; never NULL. */
const char* vk_last_error(void);

const char* vk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* VALKIT_H */
