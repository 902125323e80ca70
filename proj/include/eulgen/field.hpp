#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "eulgen/grid.hpp"
#include "eulgen/kind.hpp"

namespace eulgen {

/// Grid-sampled tensor field. Components are stored component-major:
/// data[c * num_nodes + node]. Matrix components use row-major (i,j) -> i*d+j.
/// Variance lives in the Kind tag only.
class TensorField {
public:
    TensorField(const Grid& grid, Kind kind, double fill = 0.0)
        : grid_(grid),
          kind_(kind),
          ncomp_(kind_components(kind, grid.dim())),
          data_(static_cast<std::size_t>(ncomp_) * grid.num_nodes(), fill) {}

    const Grid& grid() const { return grid_; }
    Kind kind() const { return kind_; }
    int components() const { return ncomp_; }
    std::size_t num_nodes() const { return grid_.num_nodes(); }

    double& at(int comp, std::size_t node) { return data_[static_cast<std::size_t>(comp) * grid_.num_nodes() + node]; }
    double at(int comp, std::size_t node) const {
        return data_[static_cast<std::size_t>(comp) * grid_.num_nodes() + node];
    }
    double& at(int i, int j, std::size_t node) { return at(i * grid_.dim() + j, node); }
    double at(int i, int j, std::size_t node) const { return at(i * grid_.dim() + j, node); }

    double* comp(int c) { return data_.data() + static_cast<std::size_t>(c) * grid_.num_nodes(); }
    const double* comp(int c) const { return data_.data() + static_cast<std::size_t>(c) * grid_.num_nodes(); }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    /// Same samples, different variance tag.
    TensorField retagged(Kind kind) const {
        if (kind_components(kind, grid_.dim()) != ncomp_)
            throw std::invalid_argument("retagged: component count of " + kind_name(kind) + " does not match");
        TensorField out(grid_, kind);
        out.data_ = data_;
        return out;
    }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

private:
    Grid grid_;
    Kind kind_;
    int ncomp_;
    std::vector<double> data_;
};

inline void require_same_grid(const TensorField& a, const TensorField& b) {
    if (a.grid() != b.grid()) throw std::invalid_argument("fields live on different grids");
}

inline void require_kind(const TensorField& f, Kind k, const char* what) {
    if (f.kind() != k)
        throw std::invalid_argument(std::string(what) + ": expected " + kind_name(k) + ", got " + kind_name(f.kind()));
}

// -- arithmetic (pointwise, shape-checked) ----------------------------------

TensorField operator+(const TensorField& a, const TensorField& b);
TensorField operator-(const TensorField& a, const TensorField& b);
TensorField operator*(double s, const TensorField& a);
TensorField& axpy(TensorField& y, double alpha, const TensorField& x);  // y += alpha*x

/// Rectangle-rule integral h^d * sum over nodes. Scalar kinds only.
double integrate(const TensorField& f);

/// Sum over all components and nodes of a.*b, times h^d.
double l2_inner(const TensorField& a, const TensorField& b);

double l2_norm(const TensorField& f);
double max_abs(const TensorField& f);

}  // namespace eulgen
