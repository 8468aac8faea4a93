#pragma once

namespace tailfence {

// Exponentiated-Frechet parameters: two shapes (alpha, lambda), location mu,
// scale sigma.  Construction validates positivity of alpha, lambda, sigma.
struct DistParams {
    double alpha;
    double lambda;
    double mu;
    double sigma;

    DistParams(double alpha_, double lambda_, double mu_ = 0.0, double sigma_ = 1.0);
};

// F(x) = 1 - [1 - exp(-((x-mu)/sigma)^(-lambda))]^alpha for x > mu, else 0.
double cdf(const DistParams& params, double x);

// Q(p) = mu + sigma * {-log[1 - (1-p)^(1/alpha)]}^(-1/lambda), 0 < p < 1.
double quantile(const DistParams& params, double p);

// Index of regular variation of the right tail: alpha * lambda.
double tail_index(const DistParams& params);

// Survival function of the standardized (mu=0, sigma=1) distribution:
// S(z) = [1 - exp(-z^(-lambda))]^alpha, with S(z)=1 for z <= 0.
double survival_standard(double alpha, double lambda, double z);

// Same in extended precision; used by the least-squares estimator so that
// residual ordering survives below the double-precision noise floor.
long double survival_standard_ld(long double alpha, long double lambda, long double z);

} // namespace tailfence
