#include "core/fences.hpp"
#include "core/errors.hpp"
#include "core/numerics.hpp"

#include <cmath>

namespace tailfence {

namespace {

void check_p(double p) {
    if (!(p > 0.0) || !(p <= 0.5))
        throw domain_error("fence: p must lie in (0, 0.5]");
}

DistParams standardized(const DistParams& params) {
    return DistParams(params.alpha, params.lambda, 0.0, 1.0);
}

} // namespace

double right_fence_theory(const DistParams& params, double p) {
    check_p(p);
    const double q_hi = quantile(params, 1.0 - p);
    const double med = quantile(params, 0.5);
    return ((2.0 - p) / p) * q_hi - (2.0 * (1.0 - p) / p) * med;
}

double left_fence_theory(const DistParams& params, double p) {
    check_p(p);
    const double q_lo = quantile(params, p);
    const double med = quantile(params, 0.5);
    return ((2.0 - p) / p) * q_lo - (2.0 * (1.0 - p) / p) * med;
}

FenceReport fences_theory(const DistParams& params, double p) {
    return {p, left_fence_theory(params, p), right_fence_theory(params, p),
            FenceOrigin::theoretical};
}

double prob_right_outside(const DistParams& params, double p) {
    check_p(p);
    // Standardized fence makes the probability invariant to mu, sigma.
    const DistParams std_params = standardized(params);
    const double fence = right_fence_theory(std_params, p);
    return survival_standard(params.alpha, params.lambda, fence);
}

double prob_left_outside(const DistParams& params, double p) {
    check_p(p);
    const DistParams std_params = standardized(params);
    const double fence = left_fence_theory(std_params, p);
    if (!(fence > 0.0)) return 0.0; // fence below the support boundary
    return cdf(std_params, fence);
}

double p0_threshold(const DistParams& params) {
    const DistParams std_params = standardized(params);
    auto fence_sign = [&](double p) { return left_fence_theory(std_params, p); };
    // The standardized fence is negative for p near 0 and positive at 0.5.
    const auto bracket = bracket_scan(fence_sign, 1e-6, 0.5, 512);
    if (!bracket)
        throw degenerate_error("p0_threshold: no sign change of the left fence on (1e-6, 0.5]");
    return bisect(fence_sign, *bracket, 1e-10).x;
}

} // namespace tailfence
