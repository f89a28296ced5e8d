#pragma once

#include <cstdint>
#include <random>

namespace contextprob::rng {

/// SplitMix64 output function (Steele, Lea & Flood 2014).  Used only to turn
/// (seed, stream) pairs into well-separated engine seeds; the simulation
/// draws come from std::mt19937_64, whose behaviour the standard pins down
/// bit for bit on every platform.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed for an independent stream: splitmix64(splitmix64(seed) + stream).
/// The outer mix breaks up the counter structure, so neighbouring streams
/// share no statistics; replications can then run in any order (or in
/// parallel) and still reproduce exactly.
constexpr std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) + stream);
}

/// Uniform doubles in [0, 1) with exactly 53 random bits, mapped as
/// (x >> 11) * 2^-53.  std::uniform_real_distribution is avoided on purpose:
/// its output is implementation-defined and would break cross-platform
/// reproducibility of the count tables.
class UnitUniform {
public:
    explicit UnitUniform(std::uint64_t seed) : engine_(seed) {}

    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace contextprob::rng
