#pragma once

#include "core/sample.hpp"

#include <optional>
#include <string>
#include <utility>

namespace tailfence {

enum class EstimatorMethod { iapo, iapo_nm };

struct EstimateResult {
    double alpha_hat = 0.0;
    double lambda_hat = 0.0;
    std::optional<double> mu_hat;
    std::optional<double> sigma_hat;
    EstimatorMethod method = EstimatorMethod::iapo;
    double p1 = 0.0;
    double p2 = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// Inputs of the inverse problem at two fence levels: the level p, the
// standardized right fence r and the observed right-outside frequency f.
// Ordered at construction so that f1 < f2 (heavier level first).
struct FrequencyPair {
    double p1, r1, f1;
    double p2, r2, f2;
};

// Builds the pair from observed fences/frequencies.  Throws
// not_applicable_error when a frequency is zero and degenerate_error when
// the two frequencies coincide.
FrequencyPair make_frequency_pair(double p1, double fence1, double freq1,
                                  double p2, double fence2, double freq2,
                                  double mu, double sigma);

// Frequency pair measured on a sample (strict-exceedance counts over the
// empirical fences, standardized by the supplied location/scale).
FrequencyPair sample_frequency_pair(const SortedSample& s, double p1, double p2,
                                    double mu, double sigma);

// IAPO: reduces the two-equation fence/frequency system to a one-dimensional
// root problem in lambda (bracket scan + bisection), then recovers alpha in
// closed form.  Requires positive standardized fences.
EstimateResult iapo_solve(const FrequencyPair& fp);

// IAPO-NM: least-squares fit of the frequencies to the theoretical
// outside-value probabilities over (log alpha, log lambda) by Nelder-Mead.
// When the IAPO reduction has a root it is used as the starting point and
// only refined locally; otherwise a deterministic multi-start search runs.
EstimateResult iapo_nm_solve(const FrequencyPair& fp);

// Sample-level wrappers.
EstimateResult iapo_estimate(const SortedSample& s, double p1, double p2,
                             double mu = 0.0, double sigma = 1.0);
EstimateResult iapo_nm_estimate(const SortedSample& s, double p1, double p2);

// Two-quantile matching for location/scale given fitted shapes: solves
// emp_quantile(q) = mu + sigma * Q_standard(q) at q_lo and q_hi.
std::pair<double, double> match_location_scale(const SortedSample& s,
                                               double alpha, double lambda,
                                               double q_lo = 0.25, double q_hi = 0.5);

// Parametric quantile at the estimated shapes with supplied location/scale;
// extends quantile estimation beyond the observed range.
double extrapolate_quantile(const EstimateResult& est, double mu, double sigma, double p);

const char* method_label(EstimatorMethod m);

} // namespace tailfence
