#pragma once

#include <cstdint>
#include <random>

namespace vgos {

/// Deterministic random source. The raw engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; every floating-point transform
/// is written out explicitly instead of going through std::*_distribution
/// (whose streams are implementation-defined). Identical seed and call order
/// therefore reproduce the identical draw sequence.
///
/// A RandomSource is single-owner. Concurrent consumers must each hold their
/// own source obtained via derive(stream_id).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64();

    /// Uniform strictly inside (0,1): ((u >> 11) + 0.5) * 2^-53.
    double uniform01();

    /// Uniform strictly inside (lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller; the second value of each pair is
    /// cached, so draws come in deterministic order.
    double normal();

    /// Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled through the
    /// Gamma(shape+1) boost.
    double gamma(double shape);

    /// Beta(a, b) as X/(X+Y) with X~Gamma(a), Y~Gamma(b).
    double beta(double a, double b);

    /// Uniform integer in [0, n), n >= 1. Deterministic across platforms.
    std::uint64_t below(std::uint64_t n);

    /// Independent stream derived from (seed, stream_id). Streams with
    /// distinct ids never share state regardless of interleaved call order.
    RandomSource derive(std::uint64_t stream_id) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace vgos
