#include "core/estimators.hpp"

#include "core/dist.hpp"
#include "core/errors.hpp"
#include "core/fences.hpp"
#include "core/rng.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace tailfence;

namespace {

// Exact forward problem: theoretical fences and outside probabilities of a
// standardized distribution, fed back as if they were observations.
FrequencyPair exact_pair(double alpha, double lambda, double p1, double p2) {
    const DistParams truth{alpha, lambda};
    return make_frequency_pair(p1, right_fence_theory(truth, p1),
                               prob_right_outside(truth, p1),
                               p2, right_fence_theory(truth, p2),
                               prob_right_outside(truth, p2),
                               0.0, 1.0);
}

SortedSample iota_sample(int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return SortedSample(std::move(v));
}

} // namespace

TEST_CASE("frequency pair orders the levels by frequency") {
    const auto fp = exact_pair(1.0, 1.0, 1.0 / 3.0, 0.2);
    CHECK(fp.f1 < fp.f2);
    CHECK(fp.r1 > fp.r2); // lower frequency comes from the farther fence
}

TEST_CASE("frequency pair validation") {
    CHECK_THROWS_AS(make_frequency_pair(0.2, 5.0, 0.1, 0.2, 4.0, 0.2, 0.0, 1.0),
                    domain_error); // equal levels
    CHECK_THROWS_AS(make_frequency_pair(0.6, 5.0, 0.1, 0.2, 4.0, 0.2, 0.0, 1.0),
                    domain_error); // level out of range
    CHECK_THROWS_AS(make_frequency_pair(1.0 / 3.0, 5.0, 0.1, 0.2, 4.0, 0.2, 0.0, 0.0),
                    domain_error); // nonpositive scale
    CHECK_THROWS_AS(make_frequency_pair(1.0 / 3.0, 5.0, 0.0, 0.2, 6.0, 0.1, 0.0, 1.0),
                    not_applicable_error); // zero frequency
    CHECK_THROWS_AS(make_frequency_pair(1.0 / 3.0, 5.0, 0.1, 0.2, 6.0, 0.1, 0.0, 1.0),
                    degenerate_error); // coinciding frequencies
}

TEST_CASE("IAPO recovers the shapes from exact inputs") {
    for (auto [a, l] : {std::pair{0.5, 1.3}, {1.0, 1.0}, {2.0, 0.5}, {0.25, 2.0}}) {
        const auto est = iapo_solve(exact_pair(a, l, 1.0 / 3.0, 0.2));
        CHECK(std::fabs(est.alpha_hat - a) <= 1e-6);
        CHECK(std::fabs(est.lambda_hat - l) <= 1e-6);
        CHECK(est.method == EstimatorMethod::iapo);
        CHECK(est.iterations > 0);
        CHECK(est.residual <= 1e-10);
    }
}

TEST_CASE("IAPO is exact under standardization by the true location/scale") {
    const DistParams truth{0.5, 1.3, 4.0, 2.5};
    const double p1 = 1.0 / 3.0, p2 = 0.2;
    const auto fp = make_frequency_pair(
        p1, right_fence_theory(truth, p1), prob_right_outside(truth, p1),
        p2, right_fence_theory(truth, p2), prob_right_outside(truth, p2),
        truth.mu, truth.sigma);
    const auto est = iapo_solve(fp);
    CHECK(std::fabs(est.alpha_hat - 0.5) <= 1e-6);
    CHECK(std::fabs(est.lambda_hat - 1.3) <= 1e-6);
}

TEST_CASE("IAPO is not applicable when nothing falls outside") {
    const auto s = iota_sample(10);
    CHECK_THROWS_AS(iapo_estimate(s, 1.0 / 3.0, 0.2), not_applicable_error);
}

TEST_CASE("least-squares estimator recovers the shapes from exact inputs") {
    for (auto [a, l] : {std::pair{0.5, 1.3}, {2.0, 0.5}, {1.0, 1.0}}) {
        const auto est = iapo_nm_solve(exact_pair(a, l, 1.0 / 3.0, 0.2));
        CHECK(std::fabs(est.alpha_hat - a) <= 1e-4);
        CHECK(std::fabs(est.lambda_hat - l) <= 1e-4);
        CHECK(est.method == EstimatorMethod::iapo_nm);
    }
}

TEST_CASE("both estimators behave on a plain simulated sample") {
    const DistParams truth{1.0, 1.0};
    RngStream stream(41);
    const SortedSample s = sample(truth, 2000, stream);

    const auto nm = iapo_nm_estimate(s, 1.0 / 3.0, 0.2);
    const double nm_prod = nm.alpha_hat * nm.lambda_hat;
    CHECK(nm_prod > 0.5);
    CHECK(nm_prod < 1.5);

    // At n = 2000 both outside frequencies are positive with overwhelming
    // probability and the one-dimensional reduction has a root.
    const auto ia = iapo_estimate(s, 1.0 / 3.0, 0.2);
    const double ia_prod = ia.alpha_hat * ia.lambda_hat;
    CHECK(ia_prod > 0.5);
    CHECK(ia_prod < 1.5);
}

TEST_CASE("location/scale matching is an identity fit on exact quantiles") {
    const DistParams std_dist{1.0, 1.0};
    // n = 4 makes emp_quantile(0.25) = X_1 and emp_quantile(0.5) = X_2.
    std::vector<double> v = {quantile(std_dist, 0.25), quantile(std_dist, 0.5), 10.0, 20.0};
    const SortedSample s{std::move(v)};
    const auto [mu, sigma] = match_location_scale(s, 1.0, 1.0, 0.25, 0.5);
    CHECK(mu == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sigma == doctest::Approx(1.0).epsilon(1e-14));

    std::vector<double> w = {3.0 + 2.0 * quantile(std_dist, 0.25),
                             3.0 + 2.0 * quantile(std_dist, 0.5), 30.0, 50.0};
    const auto [mu2, sigma2] = match_location_scale(SortedSample{std::move(w)},
                                                    1.0, 1.0, 0.25, 0.5);
    CHECK(mu2 == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sigma2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("location/scale matching converges on a large sample") {
    const DistParams truth{1.0, 1.0, 1.0, 2.0};
    RngStream stream(99);
    const SortedSample s = sample(truth, 100000, stream);
    const auto [mu, sigma] = match_location_scale(s, 1.0, 1.0);
    CHECK(std::fabs(mu - 1.0) <= 0.05);
    CHECK(std::fabs(sigma - 2.0) <= 0.05);
}

TEST_CASE("location/scale matching validates its quantile levels") {
    const auto s = iota_sample(10);
    CHECK_THROWS_AS(match_location_scale(s, 1.0, 1.0, 0.5, 0.25), domain_error);
    CHECK_THROWS_AS(match_location_scale(s, 1.0, 1.0, 0.0, 0.5), domain_error);
    const SortedSample flat{std::vector<double>(10, 2.0)};
    CHECK_THROWS_AS(match_location_scale(flat, 1.0, 1.0, 0.25, 0.5), degenerate_error);
}

TEST_CASE("quantile extrapolation at the unit shapes") {
    EstimateResult est;
    est.alpha_hat = 1.0;
    est.lambda_hat = 1.0;
    CHECK(extrapolate_quantile(est, 0.0, 1.0, 0.99) ==
          doctest::Approx(1.0 / -std::log(0.99)).epsilon(1e-13));
    CHECK(extrapolate_quantile(est, 0.0, 1.0, 0.5) ==
          doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("estimated shapes reproduce true quantiles") {
    const DistParams truth{0.5, 1.3};
    const auto est = iapo_solve(exact_pair(0.5, 1.3, 1.0 / 3.0, 0.2));
    for (double p : {0.9, 0.99, 0.999}) {
        const double q = extrapolate_quantile(est, 0.0, 1.0, p);
        CHECK(q == doctest::Approx(quantile(truth, p)).epsilon(1e-5));
    }
}

TEST_CASE("method labels") {
    CHECK(std::string(method_label(EstimatorMethod::iapo)) == "IAPO");
    CHECK(std::string(method_label(EstimatorMethod::iapo_nm)) == "IAPO-NM");
}
