#include "core/empirical.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tailfence {

namespace {

void check_fence_args(const SortedSample& s, double p) {
    if (!(p > 0.0) || !(p <= 0.5))
        throw domain_error("empirical fence: p must lie in (0, 0.5]");
    if (s.n() < 2)
        throw domain_error("empirical fence: need at least two observations");
}

} // namespace

double emp_cdf(const SortedSample& s, double x) {
    const auto& v = s.values();
    const auto it = std::upper_bound(v.begin(), v.end(), x);
    return double(it - v.begin()) / double(v.size());
}

double emp_quantile(const SortedSample& s, double p) {
    if (!(p > 0.0) || !(p <= 1.0))
        throw domain_error("emp_quantile: p must lie in (0, 1]");
    const double t = p * double(s.n());
    // ceiling written as the two-branch form so integer np hits X_{np:n} exactly
    const double k = (std::floor(t) == t) ? t : std::floor(t) + 1.0;
    auto idx = std::size_t(k);
    if (idx < 1) idx = 1;
    if (idx > s.n()) idx = s.n();
    return s.order_stat(idx);
}

double emp_right_fence(const SortedSample& s, double p) {
    check_fence_args(s, p);
    const double med = emp_quantile(s, 0.5);
    return med + ((2.0 - p) / p) * (emp_quantile(s, 1.0 - p) - med);
}

double emp_left_fence(const SortedSample& s, double p) {
    check_fence_args(s, p);
    const double med = emp_quantile(s, 0.5);
    return med - ((2.0 - p) / p) * (med - emp_quantile(s, p));
}

OutsideCounts count_outside(const SortedSample& s, double p) {
    check_fence_args(s, p);
    const auto& v = s.values();
    const double rf = emp_right_fence(s, p);
    const double lf = emp_left_fence(s, p);
    OutsideCounts out;
    out.p = p;
    out.n_right = std::size_t(v.end() - std::upper_bound(v.begin(), v.end(), rf));
    out.n_left = std::size_t(std::lower_bound(v.begin(), v.end(), lf) - v.begin());
    out.freq_right = double(out.n_right) / double(s.n());
    out.freq_left = double(out.n_left) / double(s.n());
    return out;
}

} // namespace tailfence
