#include "twotype/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace twotype {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed & 0xffffffffu),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream_index & 0xffffffffu),
        static_cast<std::uint32_t>(stream_index >> 32),
    };
    engine_.seed(seq);
}

std::uint64_t RngStream::uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be >= 1");
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % n;
    }
}

std::uint64_t RngStream::poisson(double mean) {
    if (!(mean >= 0)) throw std::invalid_argument("poisson: mean must be >= 0");
    std::uint64_t k = 0;
    // Poisson(a+b) = Poisson(a) + Poisson(b) for independent draws, so large
    // means are split into chunks where inversion stays well-conditioned.
    while (mean > 30.0) {
        k += poisson(30.0);
        mean -= 30.0;
    }
    if (mean == 0.0) return k;
    const double u = uniform01();
    double p = std::exp(-mean);
    double cum = p;
    std::uint64_t j = 0;
    const std::uint64_t cap = static_cast<std::uint64_t>(mean + 40.0 * std::sqrt(mean) + 50.0);
    while (u > cum && j < cap) {
        ++j;
        p *= mean / static_cast<double>(j);
        cum += p;
    }
    return k + j;
}

double RngStream::geometric_skip(double p) {
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("geometric_skip: p must be in (0,1]");
    if (p >= 1.0) return 0.0;
    return std::floor(std::log(uniform_pos()) / std::log1p(-p));
}

} // namespace twotype
