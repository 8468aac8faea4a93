#pragma once

#include "core/dist.hpp"

namespace tailfence {

enum class FenceOrigin { theoretical, empirical };

struct FenceReport {
    double p = 0.0;
    double left_fence = 0.0;
    double right_fence = 0.0;
    FenceOrigin origin = FenceOrigin::theoretical;
};

// Theoretical asymmetric right p-fence:
//   R(p) = ((2-p)/p) * Q(1-p) - (2(1-p)/p) * Q(0.5),  p in (0, 0.5].
double right_fence_theory(const DistParams& params, double p);

// Theoretical asymmetric left p-fence:
//   L(p) = ((2-p)/p) * Q(p) - (2(1-p)/p) * Q(0.5).
// May fall below mu; the left-outside probability is then zero.
double left_fence_theory(const DistParams& params, double p);

// Both fences at once.
FenceReport fences_theory(const DistParams& params, double p);

// P(X > R(p)); invariant to mu and sigma.
double prob_right_outside(const DistParams& params, double p);

// P(X < L(p)); exactly 0 whenever the left fence does not exceed mu.
double prob_left_outside(const DistParams& params, double p);

// Smallest p in (0, 0.5] at which the left fence enters the support, found
// by a sign scan over the standardized fence plus bisection.  Depends only
// on alpha and lambda.
double p0_threshold(const DistParams& params);

} // namespace tailfence
