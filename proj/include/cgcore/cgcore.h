#ifndef CGCORE_CGCORE_H
#define CGCORE_CGCORE_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes for the CLI. */
typedef enum cgcore_status {
  CGCORE_OK = 0,
  CGCORE_THEOREM_FAILURE = 1, /* a checked claim fails; a report still exists */
  CGCORE_INPUT_ERROR = 2,     /* malformed input or misuse of the API */
  CGCORE_RESOURCE_ERROR = 3,  /* an exhaustive step exceeds its size bound */
  CGCORE_INTERNAL_ERROR = 4
} cgcore_status;

/* One parsed input document: a game, a bare graph (read as a unit-weight
   stable-set game), or a bare matroid. Opaque; free with
   cgcore_instance_free. */
typedef struct cgcore_instance cgcore_instance;

const char* cgcore_version(void);
const char* cgcore_status_name(cgcore_status status);

/* Parse one JSON document. `bound` caps exhaustive instance checks at parse
   time; pass 0 or less for the library default. On success, *out owns the
   instance. On failure, *error_message (when the pointer is non-NULL)
   receives a malloc'd description; free it with cgcore_string_free. */
cgcore_status cgcore_parse_instance(const char* json, int bound,
                                    cgcore_instance** out,
                                    char** error_message);

void cgcore_instance_free(cgcore_instance* instance);
void cgcore_string_free(char* text);

typedef struct cgcore_run_options {
  const char* command;         /* solve | verify-core | audit | check-perfect
                                  | check-matroid | tdi-witness */
  const char* imputation_json; /* verify-core only; otherwise NULL */
  int bound;                   /* 0 or less: per-operation default */
  long long trials;            /* negative: default 100 */
  unsigned long long seed;
} cgcore_run_options;

/* Run one command against a parsed instance. CGCORE_OK and
   CGCORE_THEOREM_FAILURE both fill *report_json (malloc'd; free with
   cgcore_string_free); error statuses fill *error_message instead. */
cgcore_status cgcore_run(const cgcore_instance* instance,
                         const cgcore_run_options* options,
                         char** report_json, char** error_message);

#ifdef __cplusplus
}
#endif

#endif /* CGCORE_CGCORE_H */
