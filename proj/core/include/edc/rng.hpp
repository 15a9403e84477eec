#pragma once

#include <cstdint>

namespace edc {

// splitmix64: the verifier's random stream. Chosen because the whole
// sequence is a pure function of the 64-bit seed, with cheap splitting,
// so reports are reproducible across platforms. Reports record the
// algorithm name next to the seed.
class rng {
public:
    static constexpr const char* algorithm = "splitmix64";

    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next_u64() & 1u) != 0; }

    // Independent stream derived from this seed and a stream index.
    rng split(std::uint64_t stream) const {
        rng mix(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
        mix.next_u64();
        return mix;
    }

private:
    std::uint64_t state_;
};

} // namespace edc
