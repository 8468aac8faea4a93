#pragma once

#include "core/sample.hpp"

#include <cstddef>

namespace tailfence {

enum class BaselineMethod { hill, pickands, dedh };

struct TailIndexEstimate {
    double gamma_hat = 0.0;   // extreme-value index
    std::size_t k = 0;        // top order statistics used
    BaselineMethod method = BaselineMethod::hill;

    // Tail-index (regular-variation exponent) implied by gamma_hat.
    double tail_index() const { return 1.0 / gamma_hat; }
};

// Hill: mean log-excess over the k-th upper order statistic.
TailIndexEstimate hill(const SortedSample& s, std::size_t k);

// Pickands: log2 of the spacing ratio at k, 2k, 4k; needs 4k <= n.
TailIndexEstimate pickands(const SortedSample& s, std::size_t k);

// Dekkers-Einmahl-de Haan moment estimator from the first two log-excess
// moments.
TailIndexEstimate dedh_moment(const SortedSample& s, std::size_t k);

// Standard default when no k is supplied.
std::size_t default_k(std::size_t n);

const char* baseline_label(BaselineMethod m);

} // namespace tailfence
