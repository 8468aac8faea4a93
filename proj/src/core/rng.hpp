#pragma once

#include <cstdint>
#include <random>

namespace tailfence {

// splitmix64 finalizer; used to derive well-separated child seeds.
std::uint64_t splitmix64(std::uint64_t z);

// Deterministic child seed for replication `rep` under `master`.  The mixing
// keeps streams reproducible regardless of how replications are scheduled.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t rep);

// Replication-local generator stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    // Uniform draw on the open interval (0,1); never returns 0 or 1.
    double next_open_unit() {
        return (double(gen_() >> 11) + 0.5) * 0x1p-53;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace tailfence
