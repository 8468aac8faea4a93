#pragma once

#include "core/sample.hpp"

#include <cstddef>

namespace tailfence {

struct OutsideCounts {
    double p = 0.0;
    std::size_t n_right = 0;
    std::size_t n_left = 0;
    double freq_right = 0.0;
    double freq_left = 0.0;
};

// Empirical c.d.f.: 0 below the minimum, i/n on [X_{i:n}, X_{i+1:n}), 1 at
// and above the maximum.
double emp_cdf(const SortedSample& s, double x);

// Type-1 empirical quantile X_{ceil(n*p):n}, p in (0, 1].
double emp_quantile(const SortedSample& s, double p);

// Empirical asymmetric right p-fence:
//   median + ((2-p)/p) * (Q_n(1-p) - median),  needs n >= 2.
double emp_right_fence(const SortedSample& s, double p);

// Empirical asymmetric left p-fence:
//   median - ((2-p)/p) * (median - Q_n(p)).
double emp_left_fence(const SortedSample& s, double p);

// Counts of observations strictly beyond each fence (ties are not outside);
// counting is done by binary search on the sorted vector.
OutsideCounts count_outside(const SortedSample& s, double p);

} // namespace tailfence
