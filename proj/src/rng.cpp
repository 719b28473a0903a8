#include "vgos/rng.hpp"

#include <cmath>

#include "vgos/error.hpp"

namespace vgos {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomSource::next_u64() { return engine_(); }

double RandomSource::uniform01() {
    const std::uint64_t u = engine_() >> 11;  // 53 bits
    return (static_cast<double>(u) + 0.5) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double RandomSource::normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_normal_ = r * std::sin(kTwoPi * u2);
    has_spare_normal_ = true;
    return r * std::cos(kTwoPi * u2);
}

double RandomSource::gamma(double shape) {
    if (!(shape > 0.0)) throw DomainError("gamma: shape must be positive");
    if (shape < 1.0) {
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double x = normal();
        const double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        const double v = t * t * t;
        const double u = uniform01();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
            return d * v;
        }
    }
}

double RandomSource::beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
}

std::uint64_t RandomSource::below(std::uint64_t n) {
    if (n == 0) throw DomainError("below: n must be >= 1");
    // Rejection to remove modulo bias; deterministic given the stream.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
        const std::uint64_t u = engine_();
        if (u < limit) return u % n;
    }
}

RandomSource RandomSource::derive(std::uint64_t stream_id) const {
    return RandomSource(splitmix64(seed_ ^ splitmix64(stream_id)));
}

}  // namespace vgos
