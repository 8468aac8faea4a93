#include "core/rng.hpp"

namespace tailfence {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t child_seed(std::uint64_t master, std::uint64_t rep) {
    return splitmix64(splitmix64(master) ^
                      splitmix64(rep * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull));
}

} // namespace tailfence
