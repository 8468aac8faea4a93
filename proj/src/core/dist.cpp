#include "core/dist.hpp"
#include "core/errors.hpp"

#include <cmath>

namespace tailfence {

DistParams::DistParams(double alpha_, double lambda_, double mu_, double sigma_)
    : alpha(alpha_), lambda(lambda_), mu(mu_), sigma(sigma_) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw domain_error("DistParams: alpha must be positive and finite");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw domain_error("DistParams: lambda must be positive and finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw domain_error("DistParams: sigma must be positive and finite");
    if (!std::isfinite(mu))
        throw domain_error("DistParams: mu must be finite");
}

double survival_standard(double alpha, double lambda, double z) {
    if (!(z > 0.0)) return 1.0;
    const double w = std::pow(z, -lambda);
    // [1 - exp(-w)]^alpha with the base kept in log form; -expm1 avoids the
    // cancellation of 1 - exp(-w) for small w.
    return std::exp(alpha * std::log(-std::expm1(-w)));
}

long double survival_standard_ld(long double alpha, long double lambda, long double z) {
    if (!(z > 0.0L)) return 1.0L;
    const long double w = std::pow(z, -lambda);
    return std::exp(alpha * std::log(-std::expm1(-w)));
}

double cdf(const DistParams& params, double x) {
    if (!(x > params.mu)) return 0.0;
    const double z = (x - params.mu) / params.sigma;
    const double w = std::pow(z, -params.lambda);
    // 1 - [1 - exp(-w)]^alpha, evaluated as -expm1(alpha * log(-expm1(-w)))
    return -std::expm1(params.alpha * std::log(-std::expm1(-w)));
}

double quantile(const DistParams& params, double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw domain_error("quantile: p must lie in (0,1)");
    // inner = 1 - (1-p)^(1/alpha)
    const double inner = -std::expm1(std::log1p(-p) / params.alpha);
    const double t = -std::log(inner); // -log(1 - (1-p)^(1/alpha))
    return params.mu + params.sigma * std::pow(t, -1.0 / params.lambda);
}

double tail_index(const DistParams& params) {
    return params.alpha * params.lambda;
}

} // namespace tailfence
