#include "tailfence/tailfence.h"

#include "core/baselines.hpp"
#include "core/dist.hpp"
#include "core/empirical.hpp"
#include "core/errors.hpp"
#include "core/estimators.hpp"
#include "core/fences.hpp"
#include "core/rng.hpp"
#include "core/sample.hpp"
#include "core/sample_io.hpp"
#include "core/study.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace tailfence;

namespace {

thread_local std::string g_last_error;

tf_status fail(tf_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs `fn`, translating the C++ error taxonomy into status codes.
template <class Fn>
tf_status guarded(Fn&& fn) {
    try {
        fn();
        return TF_OK;
    } catch (const domain_error& e) {
        return fail(TF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const not_applicable_error& e) {
        return fail(TF_ERR_NOT_APPLICABLE, e.what());
    } catch (const no_bracket_error& e) {
        return fail(TF_ERR_NO_BRACKET, e.what());
    } catch (const degenerate_error& e) {
        return fail(TF_ERR_DEGENERATE, e.what());
    } catch (const non_convergence_error& e) {
        return fail(TF_ERR_NON_CONVERGENCE, e.what());
    } catch (const parse_error& e) {
        return fail(TF_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TF_ERR_INTERNAL, e.what());
    }
}

StudyConfig to_config(const tf_study_config& c) {
    StudyConfig cfg;
    cfg.params = DistParams(c.alpha, c.lambda, c.mu, c.sigma);
    cfg.reps = c.reps;
    cfg.n_min = c.n_min;
    cfg.n_max = c.n_max;
    cfg.n_step = c.n_step;
    cfg.p1 = c.p1;
    cfg.p2 = c.p2;
    cfg.master_seed = c.master_seed;
    cfg.workers = c.workers;
    cfg.estimators.clear();
    if (c.estimators & TF_EST_IAPO) cfg.estimators.push_back(StudyEstimator::iapo);
    if (c.estimators & TF_EST_IAPO_NM) cfg.estimators.push_back(StudyEstimator::iapo_nm);
    if (c.estimators & TF_EST_HILL) cfg.estimators.push_back(StudyEstimator::hill);
    if (c.estimators & TF_EST_PICKANDS) cfg.estimators.push_back(StudyEstimator::pickands);
    if (c.estimators & TF_EST_DEDH) cfg.estimators.push_back(StudyEstimator::dedh);
    return cfg;
}

void fill_estimate(const EstimateResult& r, tf_estimate* out) {
    out->alpha_hat = r.alpha_hat;
    out->lambda_hat = r.lambda_hat;
    out->mu_hat = r.mu_hat.value_or(0.0);
    out->sigma_hat = r.sigma_hat.value_or(0.0);
    out->has_location_scale = (r.mu_hat && r.sigma_hat) ? 1 : 0;
    out->method = r.method == EstimatorMethod::iapo ? TF_METHOD_IAPO : TF_METHOD_IAPO_NM;
    out->p1 = r.p1;
    out->p2 = r.p2;
    out->iterations = r.iterations;
    out->residual = r.residual;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

struct tf_dist {
    DistParams params;
};

struct tf_sample {
    SortedSample sample;
};

extern "C" {

const char* tf_last_error_message(void) { return g_last_error.c_str(); }

tf_status tf_dist_create(double alpha, double lambda, double mu, double sigma,
                         tf_dist** out) {
    if (!out) return fail(TF_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new tf_dist{DistParams(alpha, lambda, mu, sigma)}; });
}

void tf_dist_destroy(tf_dist* dist) { delete dist; }

tf_status tf_dist_cdf(const tf_dist* dist, double x, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = cdf(dist->params, x); });
}

tf_status tf_dist_quantile(const tf_dist* dist, double p, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = quantile(dist->params, p); });
}

tf_status tf_dist_tail_index(const tf_dist* dist, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = tail_index(dist->params); });
}

tf_status tf_dist_draw(const tf_dist* dist, size_t n, uint64_t seed, double* out_values) {
    if (!dist || !out_values) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        RngStream stream(seed);
        const SortedSample s = sample(dist->params, n, stream);
        std::memcpy(out_values, s.values().data(), n * sizeof(double));
    });
}

tf_status tf_right_fence(const tf_dist* dist, double p, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = right_fence_theory(dist->params, p); });
}

tf_status tf_left_fence(const tf_dist* dist, double p, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = left_fence_theory(dist->params, p); });
}

tf_status tf_prob_right_outside(const tf_dist* dist, double p, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = prob_right_outside(dist->params, p); });
}

tf_status tf_prob_left_outside(const tf_dist* dist, double p, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = prob_left_outside(dist->params, p); });
}

tf_status tf_p0_threshold(const tf_dist* dist, double* out) {
    if (!dist || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = p0_threshold(dist->params); });
}

tf_status tf_sample_create(const double* values, size_t n, tf_sample** out) {
    if (!values || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new tf_sample{SortedSample(std::vector<double>(values, values + n))};
    });
}

void tf_sample_destroy(tf_sample* sample) { delete sample; }

tf_status tf_sample_size(const tf_sample* sample, size_t* out) {
    if (!sample || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    *out = sample->sample.n();
    return TF_OK;
}

tf_status tf_sample_emp_cdf(const tf_sample* sample, double x, double* out) {
    if (!sample || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = emp_cdf(sample->sample, x); });
}

tf_status tf_sample_emp_quantile(const tf_sample* sample, double p, double* out) {
    if (!sample || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = emp_quantile(sample->sample, p); });
}

tf_status tf_sample_right_fence(const tf_sample* sample, double p, double* out) {
    if (!sample || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = emp_right_fence(sample->sample, p); });
}

tf_status tf_sample_left_fence(const tf_sample* sample, double p, double* out) {
    if (!sample || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = emp_left_fence(sample->sample, p); });
}

tf_status tf_sample_count_outside(const tf_sample* sample, double p,
                                  size_t* n_right, size_t* n_left) {
    if (!sample || !n_right || !n_left) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const OutsideCounts c = count_outside(sample->sample, p);
        *n_right = c.n_right;
        *n_left = c.n_left;
    });
}

tf_status tf_read_sample_file(const char* path, double** out_values, size_t* out_n) {
    if (!path || !out_values || !out_n) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    *out_values = nullptr;
    *out_n = 0;
    return guarded([&] {
        const std::vector<double> v = read_sample_file(path);
        double* buf = new double[v.size()];
        std::memcpy(buf, v.data(), v.size() * sizeof(double));
        *out_values = buf;
        *out_n = v.size();
    });
}

tf_status tf_write_sample_file(const char* path, const double* values, size_t n) {
    if (!path || !values) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        write_sample_file(path, std::vector<double>(values, values + n));
    });
}

void tf_free_buffer(double* buffer) { delete[] buffer; }

tf_status tf_iapo_estimate(const tf_sample* sample, double p1, double p2,
                           double mu, double sigma, tf_estimate* out) {
    if (!sample || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        fill_estimate(iapo_estimate(sample->sample, p1, p2, mu, sigma), out);
    });
}

tf_status tf_iapo_nm_estimate(const tf_sample* sample, double p1, double p2,
                              tf_estimate* out) {
    if (!sample || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        fill_estimate(iapo_nm_estimate(sample->sample, p1, p2), out);
    });
}

tf_status tf_match_location_scale(const tf_sample* sample, double alpha, double lambda,
                                  double q_lo, double q_hi,
                                  double* mu_hat, double* sigma_hat) {
    if (!sample || !mu_hat || !sigma_hat)
        return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto [mu, sigma] = match_location_scale(sample->sample, alpha, lambda, q_lo, q_hi);
        *mu_hat = mu;
        *sigma_hat = sigma;
    });
}

tf_status tf_extrapolate_quantile(const tf_estimate* est, double mu, double sigma,
                                  double p, double* out) {
    if (!est || !out) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        EstimateResult r;
        r.alpha_hat = est->alpha_hat;
        r.lambda_hat = est->lambda_hat;
        *out = extrapolate_quantile(r, mu, sigma, p);
    });
}

tf_status tf_baseline_estimate(const tf_sample* sample, tf_baseline method,
                               size_t k, double* gamma_hat, size_t* used_k) {
    if (!sample || !gamma_hat) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::size_t kk = k > 0 ? k : default_k(sample->sample.n());
        TailIndexEstimate t{};
        if (method == TF_BASELINE_HILL) t = hill(sample->sample, kk);
        else if (method == TF_BASELINE_PICKANDS) t = pickands(sample->sample, kk);
        else if (method == TF_BASELINE_DEDH) t = dedh_moment(sample->sample, kk);
        else throw domain_error("unknown baseline method");
        *gamma_hat = t.gamma_hat;
        if (used_k) *used_k = t.k;
    });
}

tf_status tf_run_study_csv(const tf_study_config* cfg, char** out_csv) {
    if (!cfg || !out_csv) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    *out_csv = nullptr;
    return guarded([&] {
        const StudyConfig c = to_config(*cfg);
        *out_csv = dup_string(study_csv(run_study(c)));
    });
}

tf_status tf_compare_csv(const tf_study_config* cfg, char** out_csv) {
    if (!cfg || !out_csv) return fail(TF_ERR_INVALID_ARGUMENT, "null argument");
    *out_csv = nullptr;
    return guarded([&] {
        const StudyConfig c = to_config(*cfg);
        *out_csv = dup_string(compare_csv(c, compare_baselines(c)));
    });
}

void tf_free_string(char* text) { delete[] text; }

} // extern "C"
