#pragma once

#include <cstdint>
#include <random>

namespace tropbraid {

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard,
// but the standard distributions are not, so the mappings to doubles and
// integer ranges are done by hand to keep results identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1) with 53-bit resolution
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // inclusive bounds
    long long uniform_int(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next_u64() % span);
    }

    // derive an independent stream, e.g. one per trial index
    Rng fork(std::uint64_t stream) const {
        std::uint64_t h = seed_ ^ (0x9e3779b97f4a7c15ULL + stream * 0xd1342543de82ef95ULL);
        h ^= h >> 30;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 27;
        h *= 0x94d049bb133111ebULL;
        h ^= h >> 31;
        return Rng(h);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace tropbraid
