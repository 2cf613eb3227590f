/* C API for the statfield shared library.
 *
 * All entry points return sf_status; on failure sf_last_error() carries a
 * thread-local message. Successful runs hand back an opaque sf_run handle
 * owning a JSON summary; free it with sf_run_free.
 */
#ifndef STATFIELD_H
#define STATFIELD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_INTERNAL = 1,
  SF_ERR_CONFIG = 2,  /* invalid configuration or input file */
  SF_ERR_NUMERIC = 3, /* runtime numerical failure */
  SF_ERR_VERIFY = 4   /* a verification check failed */
} sf_status;

typedef struct sf_run sf_run;

const char* sf_version(void);

/* Thread-local message describing the most recent failure in this thread. */
const char* sf_last_error(void);

/* Runs the scenario in config_path, writing outputs into out_dir.
 * seed_override >= 0 replaces the config seed (and is recorded in the
 * resolved config copy). */
sf_status sf_evolve(const char* config_path, const char* out_dir, int64_t seed_override,
                    sf_run** out_run);

/* Momentum analysis (quantum + hybrid densities, h diagnostic) of the
 * scenario's initial state. */
sf_status sf_spectrum(const char* config_path, const char* out_dir, int64_t seed_override,
                      sf_run** out_run);

/* Constrained maximum-entropy solve on a landscape CSV ("x,E" or "i,E"). */
sf_status sf_maxent(const char* landscape_csv, double e_target, int trials, double delta,
                    uint64_t seed, const char* out_dir, sf_run** out_run);

/* Exact symbolic verification suite over the coefficient window
 * [-window, window]. Returns SF_ERR_VERIFY when a check fails (out_run still
 * carries the per-check report). */
sf_status sf_verify_symbolic(int window, sf_run** out_run);

/* JSON summary of a completed run; the pointer stays valid until
 * sf_run_free. */
const char* sf_run_summary_json(const sf_run* run);

/* 1 when every verification-style check in the run passed. */
int sf_run_ok(const sf_run* run);

void sf_run_free(sf_run* run);

#ifdef __cplusplus
}
#endif

#endif /* STATFIELD_H */
