#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace twotype {

// Seeded random stream with a platform-stable output sequence.
//
// Engine: std::mt19937_64, whose transition and output functions are fully
// specified by the C++ standard, seeded through std::seed_seq (also fully
// specified) from (seed, stream_index). All variate generation below is
// implemented on top of the raw 64-bit output, never via std::*_distribution
// (those are implementation-defined), so identical (seed, stream_index)
// yields identical sequences on every platform.
//
// Streams are single-owner: parallel code uses one stream per replicate,
// never a shared stream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_index = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0,1): 53 random bits scaled by 2^-53.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on the open interval (0,1); safe as a log() argument.
    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, n), n >= 1. Rejection method.
    std::uint64_t uniform_below(std::uint64_t n);

    bool bernoulli(double p) { return uniform01() < p; }

    // Exact Poisson sampling by sequential inversion, with additive splitting
    // for large means.
    std::uint64_t poisson(double mean);

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    // Number of failures before the first success in Bernoulli(p) trials,
    // returned as a double (can exceed 2^63 for tiny p). Requires 0 < p <= 1.
    double geometric_skip(double p);

    // Fisher-Yates shuffle driven by uniform_below (std::shuffle is
    // implementation-defined and would break cross-platform determinism).
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace twotype
