#include "core/sample.hpp"
#include "core/errors.hpp"

#include <algorithm>

namespace tailfence {

SortedSample::SortedSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty())
        throw domain_error("SortedSample: need at least one observation");
    std::sort(values_.begin(), values_.end());
}

double SortedSample::order_stat(std::size_t i) const {
    if (i < 1 || i > values_.size())
        throw domain_error("order_stat: index out of range");
    return values_[i - 1];
}

std::vector<double> draw_raw(const DistParams& params, std::size_t n, RngStream& stream) {
    std::vector<double> v(n);
    for (auto& x : v) x = quantile(params, stream.next_open_unit());
    return v;
}

SortedSample sample(const DistParams& params, std::size_t n, RngStream& stream) {
    if (n < 1) throw domain_error("sample: n must be >= 1");
    return SortedSample(draw_raw(params, n, stream));
}

} // namespace tailfence
