#ifndef LINIDEAL_H
#define LINIDEAL_H

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque parsed job handle. */
typedef struct li_job li_job;

/* Status codes shared with the CLI exit codes:
   0 success, 2 hypothesis violation, 3 obstruction found,
   4 parse/validation error, 5 internal error. */

/* Parses a JSON job document. On success returns 0 and stores a handle in
   *out; on failure returns a nonzero status and, when error_message is not
   NULL, stores a message to release with li_string_free. */
int li_job_parse(const char* text, li_job** out, char** error_message);

/* Applies a single key/value override (mode, precision, degree, depth,
   strategy, b) to a parsed job. Returns 0 or a status code. */
int li_job_override(li_job* job, const char* key, const char* value,
                    char** error_message);

/* Runs the job. Always produces a JSON report; report and summary (when not
   NULL) receive strings to release with li_string_free. Returns the status
   code of the run. */
int li_job_run(li_job* job, char** report, char** summary);

void li_job_free(li_job* job);
void li_string_free(char* s);

/* Process-wide worker count for the parallel inner loops. */
void li_set_threads(int threads);

const char* li_version(void);

#ifdef __cplusplus
}
#endif

#endif
