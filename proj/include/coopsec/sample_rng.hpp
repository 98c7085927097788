#pragma once

#include <cmath>
#include <cstdint>

namespace coopsec {

/// Deterministic per-sample random stream. Every (seed, sample_index) pair
/// yields the same draw sequence no matter how samples are partitioned
/// across threads, which is what makes the Monte Carlo estimators
/// reproducible under any worker count.
///
/// The stream is a splitmix64 walk whose start state is derived from the
/// seed and the sample index with full avalanche mixing.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t sample_index) noexcept
        : state_(mix64(seed + kGolden) ^ mix64(sample_index + 0xD1B54A32D192ED03ULL)) {}

    std::uint64_t next_u64() noexcept {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential with the given mean via the inverse CDF -mean*ln(1-u).
    double next_exponential(double mean) noexcept {
        return -mean * std::log1p(-next_unit());
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix64(std::uint64_t x) noexcept {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t state_;
};

}  // namespace coopsec
