#pragma once

#include <cstdint>

namespace tpht {

/// Splittable counter-seeded stream (SplitMix64 core). A stream is fully
/// determined by (seed, stream_index), so per-sample streams reproduce
/// bit-identically under any parallel partition of the sample range.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /// Uniform on (0, 1].
    double next_uniform_open();
    /// Uniform on [0, 1).
    double next_uniform();

    /// Standard normal (Box-Muller, second deviate cached within the stream).
    double next_normal();

    /// Exponential with the given mean via inverse CDF: -mean * log(U).
    double next_exponential(double mean);

private:
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

} // namespace tpht
