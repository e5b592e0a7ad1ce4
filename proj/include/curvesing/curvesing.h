#ifndef CURVESING_H
#define CURVESING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CSG_API __declspec(dllexport)
#else
#  define CSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum csg_status {
  CSG_OK = 0,
  CSG_ERR_INTERNAL = 1,
  CSG_ERR_PARSE = 2,
  CSG_ERR_DEGENERATE = 3,
  CSG_ERR_GENERICITY = 4,
  CSG_ERR_STEP_BUDGET = 5,
  CSG_ERR_INVALID_ARGUMENT = 6
} csg_status;

typedef enum csg_format { CSG_FORMAT_TEXT = 0, CSG_FORMAT_JSON = 1 } csg_format;

typedef struct csg_config {
  uint64_t seed;
  unsigned trials;
  unsigned max_retries;
  uint64_t step_budget;
  csg_format format;
  /* Comma-separated rationals; NULL keeps the file's samples. */
  const char* samples;
  /* Rows separated by ';', entries by ','; NULL draws a random matrix. */
  const char* ci_matrix;
  int timings;
} csg_config;

typedef struct csg_germ csg_germ;
typedef struct csg_result csg_result;

CSG_API void csg_config_init(csg_config* config);

/* Parses a germ file. On failure returns the status and leaves *out NULL;
   csg_last_error() holds the message. */
CSG_API csg_status csg_germ_parse(const char* text, size_t length, csg_germ** out);
CSG_API void csg_germ_free(csg_germ* germ);

/* Always produces a result unless an argument is NULL; failures are reported
   in the result body and exit code. */
CSG_API csg_status csg_run(const csg_germ* germ, const char* command, const csg_config* config,
                           csg_result** out);
/* Parses and runs in one call, so parse errors also yield a result. */
CSG_API csg_status csg_run_source(const char* text, size_t length, const char* command,
                                  const csg_config* config, csg_result** out);

CSG_API const char* csg_result_body(const csg_result* result);
CSG_API int csg_result_exit_code(const csg_result* result);
/* Reads a top-level integer field of the report. */
CSG_API csg_status csg_result_get_int(const csg_result* result, const char* key, int64_t* value);
CSG_API void csg_result_free(csg_result* result);

/* Message of the last failure on this thread; empty when none. */
CSG_API const char* csg_last_error(void);
CSG_API const char* csg_status_string(csg_status status);
CSG_API const char* csg_version(void);

#ifdef __cplusplus
}
#endif

#endif
