#pragma once

#include "eulgen/dynamics.hpp"
#include "eulgen/presets.hpp"

namespace eulgen::testing {

inline TensorField fourier(const Grid& g, Kind k, std::uint64_t seed, double amp, int max_mode = 2) {
    return sample_field(g, k, PresetFourierRandom{seed, max_mode, amp});
}

/// Valid state near the stress-free reference: F, F_p are small perturbations
/// of I, pi is a moderate momentum field. For the internal-energy role the
/// thermal slot sits well above the floor.
inline State make_random_state(const Grid& g, TauRole role, std::uint64_t seed) {
    State q = make_state(g, role);
    q.role = role;
    q.pi = fourier(g, Kind::Momentum, seed + 1, 0.3);
    q.F = identity_matrix_field(g, Kind::TwoPoint) + fourier(g, Kind::TwoPoint, seed + 2, 0.1);
    q.Fp = identity_matrix_field(g, Kind::IntensiveMatrix) + fourier(g, Kind::IntensiveMatrix, seed + 3, 0.05);
    if (role == TauRole::Entropy) {
        q.tau = fourier(g, Kind::ExtensiveScalar, seed + 4, 0.2);
    } else {
        q.tau = constant_field(g, Kind::ExtensiveScalar, 2.0) + fourier(g, Kind::ExtensiveScalar, seed + 4, 0.1);
    }
    return q;
}

inline CotState make_random_cotstate(const Grid& g, std::uint64_t seed, double amp = 1.0, int max_mode = 2) {
    return CotState{fourier(g, Kind::Vector, seed + 1, amp, max_mode),
                    fourier(g, Kind::TwoPoint, seed + 2, amp, max_mode),
                    fourier(g, Kind::IntensiveMatrix, seed + 3, amp, max_mode),
                    fourier(g, Kind::IntensiveScalar, seed + 4, amp, max_mode)};
}

inline StateTangent make_random_tangent(const Grid& g, std::uint64_t seed, double amp = 1.0) {
    return StateTangent{fourier(g, Kind::Momentum, seed + 1, amp), fourier(g, Kind::TwoPoint, seed + 2, amp),
                        fourier(g, Kind::IntensiveMatrix, seed + 3, amp),
                        fourier(g, Kind::ExtensiveScalar, seed + 4, amp)};
}

}  // namespace eulgen::testing
