#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "eulgen/field.hpp"

namespace eulgen {

/// One real Fourier mode of a band-limited random field:
///   weight * (a*cos(2*pi*k.x/L) + b*sin(2*pi*k.x/L)).
struct FourierMode {
    std::array<int, 3> k{0, 0, 0};
    double a = 0.0;
    double b = 0.0;
    double weight = 0.0;
};

/// Deterministic coefficients of the fourier_random preset for one component.
/// Modes run over the lexicographically positive half-space with
/// 0 < |k|_inf <= max_mode; weight = amplitude / |k|^2 keeps fields smooth.
/// Independent of the grid resolution, so the same (seed, max_mode) names the
/// same continuum field at every n.
std::vector<FourierMode> fourier_modes(int d, std::uint64_t seed, int max_mode, double amplitude, int component);

struct PresetConstant {
    std::vector<double> values;  // size 1 (broadcast) or one per component
};

struct PresetFourierRandom {
    std::uint64_t seed = 0;
    int max_mode = 2;
    double amplitude = 1.0;
};

struct PresetGaussianBump {
    std::array<double, 3> center{0.0, 0.0, 0.0};
    double width = 1.0;
    std::vector<double> amplitude;  // size 1 or one per component; periodicized profile
};

struct PresetShearLayer {
    double amplitude = 1.0;  // vector-like kinds: comp 0 = A*sin(2*pi*x_a/L), a = min(1, d-1)
};

using Preset = std::variant<PresetConstant, PresetFourierRandom, PresetGaussianBump, PresetShearLayer>;

TensorField sample_field(const Grid& grid, Kind kind, const Preset& preset);

TensorField constant_field(const Grid& grid, Kind kind, double value);
TensorField identity_matrix_field(const Grid& grid, Kind kind);

}  // namespace eulgen
