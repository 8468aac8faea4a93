#pragma once

#include "core/dist.hpp"
#include "core/rng.hpp"

#include <cstddef>
#include <vector>

namespace tailfence {

// Immutable ascending-ordered observation vector with order-statistic access.
class SortedSample {
public:
    // Sorts once at construction; every downstream operation relies on it.
    explicit SortedSample(std::vector<double> values);

    std::size_t n() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    // i-th order statistic X_{i:n}, 1-based as in the usual notation.
    double order_stat(std::size_t i) const;

private:
    std::vector<double> values_;
};

// n i.i.d. inverse-transform draws in generation order (not sorted).  The
// simulation harness keeps raw order so that size-n prefixes of one
// replication are themselves i.i.d. subsamples.
std::vector<double> draw_raw(const DistParams& params, std::size_t n, RngStream& stream);

// n i.i.d. draws returned in ascending order.
SortedSample sample(const DistParams& params, std::size_t n, RngStream& stream);

} // namespace tailfence
