/*
 * tailfence — asymmetric p-fences, outside-value probabilities and tail
 * parameter estimation for the Exponentiated-Frechet family.
 *
 * C API: every function returns a tf_status; results come back through out
 * pointers.  Handles are opaque and must be released with the matching
 * destroy call.  All functions are thread-safe on distinct handles; a handle
 * itself is immutable after creation.
 */
#ifndef TAILFENCE_H
#define TAILFENCE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
    TF_OK = 0,
    TF_ERR_INVALID_ARGUMENT = 1, /* bad parameter or flag value            */
    TF_ERR_NOT_APPLICABLE = 2,   /* estimator preconditions not met by data */
    TF_ERR_NO_BRACKET = 3,       /* root scan found no sign change          */
    TF_ERR_DEGENERATE = 4,       /* degenerate inputs (equal freqs, ...)    */
    TF_ERR_NON_CONVERGENCE = 5,  /* iteration cap hit above tolerance       */
    TF_ERR_PARSE = 6,            /* malformed sample file                   */
    TF_ERR_INTERNAL = 7
} tf_status;

/* Message for the most recent failing call on this thread. */
const char* tf_last_error_message(void);

/* ---- distribution handle ---- */

typedef struct tf_dist tf_dist;

tf_status tf_dist_create(double alpha, double lambda, double mu, double sigma,
                         tf_dist** out);
void tf_dist_destroy(tf_dist* dist);

tf_status tf_dist_cdf(const tf_dist* dist, double x, double* out);
tf_status tf_dist_quantile(const tf_dist* dist, double p, double* out);
tf_status tf_dist_tail_index(const tf_dist* dist, double* out);

/* n inverse-transform draws in ascending order, deterministic in seed. */
tf_status tf_dist_draw(const tf_dist* dist, size_t n, uint64_t seed, double* out_values);

/* ---- theoretical fences and outside-value probabilities, p in (0, 0.5] ---- */

tf_status tf_right_fence(const tf_dist* dist, double p, double* out);
tf_status tf_left_fence(const tf_dist* dist, double p, double* out);
tf_status tf_prob_right_outside(const tf_dist* dist, double p, double* out);
tf_status tf_prob_left_outside(const tf_dist* dist, double p, double* out);
tf_status tf_p0_threshold(const tf_dist* dist, double* out);

/* ---- sample handle (sorted once at creation) ---- */

typedef struct tf_sample tf_sample;

tf_status tf_sample_create(const double* values, size_t n, tf_sample** out);
void tf_sample_destroy(tf_sample* sample);

tf_status tf_sample_size(const tf_sample* sample, size_t* out);
tf_status tf_sample_emp_cdf(const tf_sample* sample, double x, double* out);
tf_status tf_sample_emp_quantile(const tf_sample* sample, double p, double* out);
tf_status tf_sample_right_fence(const tf_sample* sample, double p, double* out);
tf_status tf_sample_left_fence(const tf_sample* sample, double p, double* out);
tf_status tf_sample_count_outside(const tf_sample* sample, double p,
                                  size_t* n_right, size_t* n_left);

/* Newline-delimited sample files ('#' comments and blank lines ignored).
 * tf_read_sample_file allocates *out_values; free with tf_free_buffer. */
tf_status tf_read_sample_file(const char* path, double** out_values, size_t* out_n);
tf_status tf_write_sample_file(const char* path, const double* values, size_t n);
void tf_free_buffer(double* buffer);

/* ---- estimators ---- */

typedef enum tf_method { TF_METHOD_IAPO = 0, TF_METHOD_IAPO_NM = 1 } tf_method;

typedef struct tf_estimate {
    double alpha_hat;
    double lambda_hat;
    double mu_hat;      /* only valid when has_location_scale != 0 */
    double sigma_hat;
    int has_location_scale;
    tf_method method;
    double p1, p2;
    int iterations;
    double residual;
} tf_estimate;

/* IAPO: inverts the two fence/frequency equations (1-D root in lambda plus a
 * closed form for alpha).  mu/sigma standardize the empirical fences. */
tf_status tf_iapo_estimate(const tf_sample* sample, double p1, double p2,
                           double mu, double sigma, tf_estimate* out);

/* IAPO-NM: least-squares fit of the outside-value frequencies to their
 * theoretical probabilities by Nelder-Mead over (log alpha, log lambda). */
tf_status tf_iapo_nm_estimate(const tf_sample* sample, double p1, double p2,
                              tf_estimate* out);

/* Two-quantile matching for location/scale given fitted shape parameters. */
tf_status tf_match_location_scale(const tf_sample* sample, double alpha, double lambda,
                                  double q_lo, double q_hi,
                                  double* mu_hat, double* sigma_hat);

/* Parametric quantile at estimated shapes; extrapolates beyond the data. */
tf_status tf_extrapolate_quantile(const tf_estimate* est, double mu, double sigma,
                                  double p, double* out);

/* ---- baseline tail-index estimators (gamma = extreme-value index) ---- */

typedef enum tf_baseline {
    TF_BASELINE_HILL = 0,
    TF_BASELINE_PICKANDS = 1,
    TF_BASELINE_DEDH = 2
} tf_baseline;

/* k = 0 selects the default floor(sqrt(n)). */
tf_status tf_baseline_estimate(const tf_sample* sample, tf_baseline method,
                               size_t k, double* gamma_hat, size_t* used_k);

/* ---- simulation study ---- */

enum {
    TF_EST_IAPO = 1 << 0,
    TF_EST_IAPO_NM = 1 << 1,
    TF_EST_HILL = 1 << 2,
    TF_EST_PICKANDS = 1 << 3,
    TF_EST_DEDH = 1 << 4
};

typedef struct tf_study_config {
    double alpha, lambda, mu, sigma;
    int reps;
    int n_min, n_max, n_step;
    double p1, p2;
    uint64_t master_seed;
    unsigned estimators; /* OR of TF_EST_* flags */
    int workers;         /* 0 = all cores */
} tf_study_config;

/* Replicated study aggregated into CSV
 * (n,estimator,target,mean,std_err,ci_lo,ci_hi,n_failed); byte-identical
 * output for a fixed seed regardless of worker count.  Free the returned
 * string with tf_free_string. */
tf_status tf_run_study_csv(const tf_study_config* cfg, char** out_csv);

/* RMSE comparison table of tail-index estimates (wide CSV, one column per
 * requested estimator). */
tf_status tf_compare_csv(const tf_study_config* cfg, char** out_csv);

void tf_free_string(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TAILFENCE_H */
