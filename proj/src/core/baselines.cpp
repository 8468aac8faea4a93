#include "core/baselines.hpp"
#include "core/errors.hpp"

#include <cmath>

namespace tailfence {

namespace {

// Mean of [log X_{n-i:n} - log X_{n-k:n}]^r over i = 0..k-1.
double log_excess_moment(const SortedSample& s, std::size_t k, int r) {
    const std::size_t n = s.n();
    if (k < 1 || k > n - 1)
        throw domain_error("baseline: k must satisfy 1 <= k <= n-1");
    const double base = s.order_stat(n - k);
    if (!(base > 0.0))
        throw domain_error("baseline: top-k order statistics must be positive");
    const double log_base = std::log(base);
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double d = std::log(s.order_stat(n - i)) - log_base;
        acc += (r == 1) ? d : d * d;
    }
    return acc / double(k);
}

} // namespace

std::size_t default_k(std::size_t n) {
    return std::size_t(std::floor(std::sqrt(double(n))));
}

const char* baseline_label(BaselineMethod m) {
    switch (m) {
        case BaselineMethod::hill: return "Hill";
        case BaselineMethod::pickands: return "Pickands";
        default: return "DEdH";
    }
}

TailIndexEstimate hill(const SortedSample& s, std::size_t k) {
    return {log_excess_moment(s, k, 1), k, BaselineMethod::hill};
}

TailIndexEstimate pickands(const SortedSample& s, std::size_t k) {
    const std::size_t n = s.n();
    if (k < 1 || 4 * k > n)
        throw domain_error("pickands: k must satisfy 4k <= n");
    const double a = s.order_stat(n - k + 1);
    const double b = s.order_stat(n - 2 * k + 1);
    const double c = s.order_stat(n - 4 * k + 1);
    if (!(b - c != 0.0))
        throw degenerate_error("pickands: zero spacing in the denominator");
    const double gamma = std::log((a - b) / (b - c)) / std::log(2.0);
    return {gamma, k, BaselineMethod::pickands};
}

TailIndexEstimate dedh_moment(const SortedSample& s, std::size_t k) {
    const double m1 = log_excess_moment(s, k, 1);
    const double m2 = log_excess_moment(s, k, 2);
    if (m2 == m1 * m1)
        throw degenerate_error("dedh: degenerate moment ratio");
    const double gamma = m1 + 1.0 - 0.5 / (1.0 - m1 * m1 / m2);
    return {gamma, k, BaselineMethod::dedh};
}

} // namespace tailfence
