#pragma once

#include <array>
#include <complex>
#include <vector>

#include "eulgen/field.hpp"

namespace eulgen {

/// Band-limited trigonometric interpolant of a grid-sampled field.
///
/// Coefficients are the discrete Fourier sums over all modes with
/// |k_a| <= max_mode on every axis (max_mode <= n/2 - 1 so the band is
/// alias-free). For fields synthesized from the fourier_random preset with the
/// same band the interpolation is exact; the spectral gradient then provides
/// off-grid derivatives that are independent of any finite-difference stencil.
class TrigInterpolant {
public:
    TrigInterpolant(const TensorField& f, int max_mode);

    int dim() const { return d_; }
    int components() const { return ncomp_; }
    double length() const { return L_; }

    /// Value of component c at an arbitrary point x (d coordinates, any reals;
    /// periodicity is built into the basis).
    double value(int c, const double* x) const;

    /// All components at x.
    void values(const double* x, double* out) const;

    /// Spectral gradient of component c at x (d entries).
    void gradient(int c, const double* x, double* g) const;

    /// For d-component fields: val[i] = f_i(x), jac[i*d+j] = d_j f_i(x).
    void value_and_jacobian(const double* x, double* val, double* jac) const;

private:
    void basis_tables(const double* x, std::complex<double>* tab) const;

    int d_;
    int ncomp_;
    double L_;
    int max_mode_;
    std::vector<std::array<int, 3>> modes_;
    std::vector<std::complex<double>> coef_;  // comp-major: coef_[c * nmodes + m]
};

}  // namespace eulgen
