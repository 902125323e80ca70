#include "eulgen/presets.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "eulgen/util.hpp"

namespace eulgen {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Uniform in [-1, 1] from raw engine output; avoids distribution objects so
/// streams are identical across standard libraries.
double uniform_pm1(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

bool lexicographically_positive(const std::array<int, 3>& k, int d) {
    for (int a = 0; a < d; ++a) {
        if (k[static_cast<std::size_t>(a)] > 0) return true;
        if (k[static_cast<std::size_t>(a)] < 0) return false;
    }
    return false;
}

double component_amplitude(const std::vector<double>& values, int c, int ncomp, const char* what) {
    if (values.size() == 1) return values[0];
    if (static_cast<int>(values.size()) == ncomp) return values[static_cast<std::size_t>(c)];
    throw std::invalid_argument(std::string(what) + ": payload size must be 1 or match the kind's component count");
}

}  // namespace

std::vector<FourierMode> fourier_modes(int d, std::uint64_t seed, int max_mode, double amplitude, int component) {
    if (max_mode < 1) throw std::invalid_argument("fourier_random: max_mode must be >= 1");
    std::mt19937_64 eng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL * static_cast<std::uint64_t>(component + 1));
    std::vector<FourierMode> modes;
    const int m = max_mode;
    std::array<int, 3> k{0, 0, 0};
    const int lo1 = (d > 1) ? -m : 0, hi1 = (d > 1) ? m : 0;
    const int lo2 = (d > 2) ? -m : 0, hi2 = (d > 2) ? m : 0;
    for (int k0 = -m; k0 <= m; ++k0)
        for (int k1 = lo1; k1 <= hi1; ++k1)
            for (int k2 = lo2; k2 <= hi2; ++k2) {
                k = {k0, k1, k2};
                if (!lexicographically_positive(k, d)) continue;
                FourierMode mode;
                mode.k = k;
                mode.a = uniform_pm1(eng);
                mode.b = uniform_pm1(eng);
                const double k2norm = static_cast<double>(k0 * k0 + k1 * k1 + k2 * k2);
                mode.weight = amplitude / k2norm;
                modes.push_back(mode);
            }
    return modes;
}

TensorField sample_field(const Grid& grid, Kind kind, const Preset& preset) {
    const int d = grid.dim();
    const int ncomp = kind_components(kind, d);
    TensorField out(grid, kind);

    if (const auto* p = std::get_if<PresetConstant>(&preset)) {
        for (int c = 0; c < ncomp; ++c) {
            const double v = component_amplitude(p->values, c, ncomp, "constant");
            double* dst = out.comp(c);
            for (std::size_t i = 0; i < grid.num_nodes(); ++i) dst[i] = v;
        }
        return out;
    }

    if (const auto* p = std::get_if<PresetFourierRandom>(&preset)) {
        for (int c = 0; c < ncomp; ++c) {
            const auto modes = fourier_modes(d, p->seed, p->max_mode, p->amplitude, c);
            double* dst = out.comp(c);
            parallel_for(grid.num_nodes(), [&](std::size_t lo, std::size_t hi) {
                for (std::size_t node = lo; node < hi; ++node) {
                    const auto x = grid.coords(node);
                    double v = 0.0;
                    for (const auto& mode : modes) {
                        double phase = 0.0;
                        for (int a = 0; a < d; ++a)
                            phase += kTwoPi * mode.k[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)] /
                                     grid.length();
                        v += mode.weight * (mode.a * std::cos(phase) + mode.b * std::sin(phase));
                    }
                    dst[node] = v;
                }
            });
        }
        return out;
    }

    if (const auto* p = std::get_if<PresetGaussianBump>(&preset)) {
        const double L = grid.length();
        const double w2 = 2.0 * p->width * p->width;
        for (int c = 0; c < ncomp; ++c) {
            const double amp = component_amplitude(p->amplitude, c, ncomp, "gaussian_bump");
            double* dst = out.comp(c);
            for (std::size_t node = 0; node < grid.num_nodes(); ++node) {
                const auto x = grid.coords(node);
                // periodicize by summing the three nearest images per axis
                double profile = 0.0;
                const int images = 1;
                auto accumulate = [&](double r2) { profile += std::exp(-r2 / w2); };
                if (d == 1) {
                    for (int i0 = -images; i0 <= images; ++i0) {
                        const double dx = x[0] - p->center[0] + i0 * L;
                        accumulate(dx * dx);
                    }
                } else if (d == 2) {
                    for (int i0 = -images; i0 <= images; ++i0)
                        for (int i1 = -images; i1 <= images; ++i1) {
                            const double dx = x[0] - p->center[0] + i0 * L;
                            const double dy = x[1] - p->center[1] + i1 * L;
                            accumulate(dx * dx + dy * dy);
                        }
                } else {
                    for (int i0 = -images; i0 <= images; ++i0)
                        for (int i1 = -images; i1 <= images; ++i1)
                            for (int i2 = -images; i2 <= images; ++i2) {
                                const double dx = x[0] - p->center[0] + i0 * L;
                                const double dy = x[1] - p->center[1] + i1 * L;
                                const double dz = x[2] - p->center[2] + i2 * L;
                                accumulate(dx * dx + dy * dy + dz * dz);
                            }
                }
                dst[node] = amp * profile;
            }
        }
        return out;
    }

    if (const auto* p = std::get_if<PresetShearLayer>(&preset)) {
        if (!kind_is_vector_like(kind))
            throw std::invalid_argument("shear_layer: preset payload requires a vector-like kind");
        const int axis = (d > 1) ? 1 : 0;
        double* dst = out.comp(0);
        for (std::size_t node = 0; node < grid.num_nodes(); ++node) {
            const auto x = grid.coords(node);
            dst[node] = p->amplitude * std::sin(kTwoPi * x[static_cast<std::size_t>(axis)] / grid.length());
        }
        return out;
    }

    throw std::logic_error("sample_field: unhandled preset");
}

TensorField constant_field(const Grid& grid, Kind kind, double value) {
    return TensorField(grid, kind, value);
}

TensorField identity_matrix_field(const Grid& grid, Kind kind) {
    if (!kind_is_matrix_like(kind)) throw std::invalid_argument("identity_matrix_field: matrix kinds only");
    TensorField out(grid, kind);
    for (int i = 0; i < grid.dim(); ++i) {
        double* dst = out.comp(i * grid.dim() + i);
        for (std::size_t node = 0; node < grid.num_nodes(); ++node) dst[node] = 1.0;
    }
    return out;
}

}  // namespace eulgen
