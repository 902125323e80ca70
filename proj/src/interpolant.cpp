#include "eulgen/interpolant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eulgen/util.hpp"

namespace eulgen {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

TrigInterpolant::TrigInterpolant(const TensorField& f, int max_mode)
    : d_(f.grid().dim()), ncomp_(f.components()), L_(f.grid().length()), max_mode_(max_mode) {
    const Grid& g = f.grid();
    if (max_mode < 0 || max_mode > g.n() / 2 - 1)
        throw std::invalid_argument("TrigInterpolant: max_mode must be in [0, n/2 - 1]");
    if (max_mode > 8) throw std::invalid_argument("TrigInterpolant: max_mode > 8 not supported");

    const int m = max_mode_;
    const int band = 2 * m + 1;
    std::array<int, 3> k{0, 0, 0};
    if (d_ == 1) {
        for (k[0] = -m; k[0] <= m; ++k[0]) modes_.push_back(k);
    } else if (d_ == 2) {
        for (k[0] = -m; k[0] <= m; ++k[0])
            for (k[1] = -m; k[1] <= m; ++k[1]) modes_.push_back(k);
    } else {
        for (k[0] = -m; k[0] <= m; ++k[0])
            for (k[1] = -m; k[1] <= m; ++k[1])
                for (k[2] = -m; k[2] <= m; ++k[2]) modes_.push_back(k);
    }

    // Per-axis twiddle table: tw[a][(k + m) * n + i] = exp(-2*pi*i*k*idx/n).
    const int n = g.n();
    std::vector<std::complex<double>> tw(static_cast<std::size_t>(d_) * band * n);
    for (int a = 0; a < d_; ++a)
        for (int kk = -m; kk <= m; ++kk)
            for (int i = 0; i < n; ++i) {
                const double ang = -2.0 * std::numbers::pi * kk * i / static_cast<double>(n);
                tw[(static_cast<std::size_t>(a) * band + (kk + m)) * n + i] = {std::cos(ang), std::sin(ang)};
            }

    const std::size_t nmodes = modes_.size();
    coef_.assign(static_cast<std::size_t>(ncomp_) * nmodes, {0.0, 0.0});
    const double norm = 1.0 / static_cast<double>(g.num_nodes());
    for (int c = 0; c < ncomp_; ++c) {
        const double* src = f.comp(c);
        std::complex<double>* dst = coef_.data() + static_cast<std::size_t>(c) * nmodes;
        parallel_for(nmodes, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t mm = lo; mm < hi; ++mm) {
                const auto& kv = modes_[mm];
                std::complex<double> s{0.0, 0.0};
                for (std::size_t node = 0; node < g.num_nodes(); ++node) {
                    const auto ix = g.indices(node);
                    std::complex<double> ph = tw[(0 * static_cast<std::size_t>(band) + (kv[0] + m)) * n + ix[0]];
                    for (int a = 1; a < d_; ++a)
                        ph *= tw[(static_cast<std::size_t>(a) * band + (kv[a] + m)) * n + ix[a]];
                    s += src[node] * ph;
                }
                dst[mm] = s * norm;
            }
        });
    }
}

void TrigInterpolant::basis_tables(const double* x, std::complex<double>* tab) const {
    const int m = max_mode_;
    const int band = 2 * m + 1;
    for (int a = 0; a < d_; ++a) {
        const double base = 2.0 * std::numbers::pi * x[a] / L_;
        for (int kk = -m; kk <= m; ++kk) {
            const double ang = base * kk;
            tab[a * band + (kk + m)] = {std::cos(ang), std::sin(ang)};
        }
    }
}

double TrigInterpolant::value(int c, const double* x) const {
    const int m = max_mode_;
    const int band = 2 * m + 1;
    std::complex<double> tab[3 * 17];
    basis_tables(x, tab);
    const std::complex<double>* cc = coef_.data() + static_cast<std::size_t>(c) * modes_.size();
    std::complex<double> s{0.0, 0.0};
    for (std::size_t mm = 0; mm < modes_.size(); ++mm) {
        const auto& kv = modes_[mm];
        std::complex<double> ph = tab[0 * band + (kv[0] + m)];
        for (int a = 1; a < d_; ++a) ph *= tab[a * band + (kv[a] + m)];
        s += cc[mm] * ph;
    }
    return s.real();
}

void TrigInterpolant::values(const double* x, double* out) const {
    const int m = max_mode_;
    const int band = 2 * m + 1;
    std::complex<double> tab[3 * 17];
    basis_tables(x, tab);
    for (int c = 0; c < ncomp_; ++c) {
        const std::complex<double>* cc = coef_.data() + static_cast<std::size_t>(c) * modes_.size();
        std::complex<double> s{0.0, 0.0};
        for (std::size_t mm = 0; mm < modes_.size(); ++mm) {
            const auto& kv = modes_[mm];
            std::complex<double> ph = tab[0 * band + (kv[0] + m)];
            for (int a = 1; a < d_; ++a) ph *= tab[a * band + (kv[a] + m)];
            s += cc[mm] * ph;
        }
        out[c] = s.real();
    }
}

void TrigInterpolant::gradient(int c, const double* x, double* g) const {
    const int m = max_mode_;
    const int band = 2 * m + 1;
    std::complex<double> tab[3 * 17];
    basis_tables(x, tab);
    const std::complex<double>* cc = coef_.data() + static_cast<std::size_t>(c) * modes_.size();
    std::complex<double> acc[3] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    const double wave = 2.0 * std::numbers::pi / L_;
    for (std::size_t mm = 0; mm < modes_.size(); ++mm) {
        const auto& kv = modes_[mm];
        std::complex<double> ph = tab[0 * band + (kv[0] + m)];
        for (int a = 1; a < d_; ++a) ph *= tab[a * band + (kv[a] + m)];
        const std::complex<double> base = cc[mm] * ph;
        for (int a = 0; a < d_; ++a) acc[a] += base * (kI * (wave * kv[a]));
    }
    for (int a = 0; a < d_; ++a) g[a] = acc[a].real();
}

void TrigInterpolant::value_and_jacobian(const double* x, double* val, double* jac) const {
    if (ncomp_ != d_) throw std::logic_error("value_and_jacobian: d-component fields only");
    const int m = max_mode_;
    const int band = 2 * m + 1;
    std::complex<double> tab[3 * 17];
    basis_tables(x, tab);
    const double wave = 2.0 * std::numbers::pi / L_;
    for (int c = 0; c < ncomp_; ++c) {
        const std::complex<double>* cc = coef_.data() + static_cast<std::size_t>(c) * modes_.size();
        std::complex<double> v{0.0, 0.0};
        std::complex<double> grd[3] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
        for (std::size_t mm = 0; mm < modes_.size(); ++mm) {
            const auto& kv = modes_[mm];
            std::complex<double> ph = tab[0 * band + (kv[0] + m)];
            for (int a = 1; a < d_; ++a) ph *= tab[a * band + (kv[a] + m)];
            const std::complex<double> base = cc[mm] * ph;
            v += base;
            for (int a = 0; a < d_; ++a) grd[a] += base * (kI * (wave * kv[a]));
        }
        val[c] = v.real();
        for (int a = 0; a < d_; ++a) jac[c * d_ + a] = grd[a].real();
    }
}

}  // namespace eulgen
