// rng.hpp - seeded random streams.
//
// Every stochastic quantity in the toolkit is drawn from a Stream obtained
// from a root seed plus a stream name and an index. Two runs with the same
// root seed see the same numbers no matter how the work is split between
// threads, because no stream is ever shared between agents.

#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace wigner::rng {

// SplitMix64 generator (Steele, Lea & Flood). Satisfies UniformRandomBitGenerator.
class Stream {
public:
    using result_type = std::uint64_t;

    explicit Stream(std::uint64_t state = 0) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    bool coin() noexcept { return ((*this)() >> 63) != 0; }

    friend bool operator==(const Stream&, const Stream&) = default;

private:
    std::uint64_t state_;
};

// Stream keyed by (root seed, name, index). Pure function of its inputs.
Stream named_stream(std::uint64_t seed, std::string_view name, std::uint64_t index = 0) noexcept;

}  // namespace wigner::rng
