#pragma once

#include <cstdint>
#include <string>

#include "numrad/matrix.hpp"

namespace numrad {

/// SplitMix64 finalizer; used to derive stream seeds from keys.
inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

/// Fixed, documented PRNG (SplitMix64) so that identical seeds reproduce the
/// same matrices everywhere. Gaussians come from Box-Muller; a standard
/// complex Gaussian (E|z|^2 = 1) consumes exactly two uniforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard real Gaussian; draws one Box-Muller pair and keeps the cosine leg.
    double gaussian();

    /// Standard complex Gaussian: modulus^2 ~ Exp(1), uniform phase.
    cplx complex_gaussian();

private:
    uint64_t state_;
};

enum class Ensemble { ginibre, hermitian, positive_definite, unitary, nilpotent_upper };

std::string to_string(Ensemble e);
Ensemble ensemble_from_string(const std::string& s);

/// Minimum eigenvalue guaranteed by the positive_definite ensemble.
inline constexpr double pd_shift = 0.1;

struct RandomSpec {
    uint64_t seed = 0;
    int dim = 1;
    Ensemble ensemble = Ensemble::ginibre;
    double scale = 1.0;
};

/// Deterministic in spec: the same RandomSpec yields bit-identical entries.
ComplexMatrix random_matrix(const RandomSpec& spec);

}  // namespace numrad
