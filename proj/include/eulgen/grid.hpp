#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace eulgen {

/// Periodic uniform Cartesian lattice on a d-torus [0,L)^d.
///
/// Index arithmetic wraps modulo n on every axis. Node order is C order:
/// the last axis varies fastest.
class Grid {
public:
    Grid(int d, int n, double L) : d_(d), n_(n), L_(L) {
        if (d < 1 || d > 3) throw std::invalid_argument("Grid: d must be 1, 2, or 3");
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("Grid: n must be even and >= 8 (centered differences degenerate otherwise)");
        if (!(L > 0.0)) throw std::invalid_argument("Grid: L must be positive");
        h_ = L / static_cast<double>(n);
        num_nodes_ = 1;
        for (int a = 0; a < d; ++a) num_nodes_ *= static_cast<std::size_t>(n);
        // stride of axis a in the flat node index
        std::size_t s = 1;
        for (int a = d - 1; a >= 0; --a) {
            stride_[static_cast<std::size_t>(a)] = s;
            s *= static_cast<std::size_t>(n);
        }
    }

    int dim() const { return d_; }
    int n() const { return n_; }
    double length() const { return L_; }
    double spacing() const { return h_; }
    std::size_t num_nodes() const { return num_nodes_; }
    std::size_t stride(int axis) const { return stride_[static_cast<std::size_t>(axis)]; }

    /// Quadrature weight of the rectangle rule, h^d.
    double cell_volume() const {
        double v = 1.0;
        for (int a = 0; a < d_; ++a) v *= h_;
        return v;
    }

    double domain_volume() const {
        double v = 1.0;
        for (int a = 0; a < d_; ++a) v *= L_;
        return v;
    }

    /// Flat index of the node shifted by +/-1 along `axis`, wrapping around.
    std::size_t neighbor(std::size_t node, int axis, int shift) const {
        const std::size_t st = stride_[static_cast<std::size_t>(axis)];
        const std::size_t nn = static_cast<std::size_t>(n_);
        const std::size_t i = (node / st) % nn;
        const std::size_t base = node - i * st;
        const std::size_t j = (i + nn + static_cast<std::size_t>(shift)) % nn;
        return base + j * st;
    }

    std::array<int, 3> indices(std::size_t node) const {
        std::array<int, 3> ix{0, 0, 0};
        for (int a = 0; a < d_; ++a)
            ix[static_cast<std::size_t>(a)] =
                static_cast<int>((node / stride_[static_cast<std::size_t>(a)]) % static_cast<std::size_t>(n_));
        return ix;
    }

    std::array<double, 3> coords(std::size_t node) const {
        const auto ix = indices(node);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int a = 0; a < d_; ++a) x[static_cast<std::size_t>(a)] = h_ * ix[static_cast<std::size_t>(a)];
        return x;
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.d_ == b.d_ && a.n_ == b.n_ && a.L_ == b.L_;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

private:
    int d_;
    int n_;
    double L_;
    double h_;
    std::size_t num_nodes_;
    std::array<std::size_t, 3> stride_{1, 1, 1};
};

inline Grid make_grid(int d, int n, double L) { return Grid(d, n, L); }

}  // namespace eulgen
