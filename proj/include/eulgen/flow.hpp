#pragma once

#include <vector>

#include "eulgen/field.hpp"
#include "eulgen/interpolant.hpp"

namespace eulgen {

/// Discrete diffeomorphism sample: the flow map Psi and its Jacobian DPsi
/// evaluated at a set of points (usually the grid nodes).
struct Diffeo {
    int d = 0;
    std::size_t npts = 0;
    std::vector<double> psi;   // psi[p*d + a]
    std::vector<double> dpsi;  // dpsi[p*d*d + i*d + j]

    double min_det() const;
};

/// Start points at the grid nodes, point-major (npts * d doubles).
std::vector<double> grid_points(const Grid& g);

/// Integrates dPsi/ds = v(Psi), dM/ds = (grad v)(Psi) * M from M = I over the
/// given start points with classical RK4 in `substeps` equal steps. The
/// velocity and its Jacobian come from the spectral interpolant, so the
/// resulting flow map is independent of the finite-difference stencils.
Diffeo flow_map(const TrigInterpolant& v, const std::vector<double>& start, int d, double s, int substeps);

/// Psi_second o Psi_first, where `second` was computed with start points
/// first.psi. Jacobians compose by the chain rule.
Diffeo compose_flow(const Diffeo& second, const Diffeo& first);

/// Pullback of the interpolated field under the diffeo, per variance Kind.
/// With M = DPsi(x) and values taken at Psi(x): intensive quantities compose,
/// densities pick up det M, vector slots pick up M^{-1}, covector slots M^T.
/// `phi` must have one point per grid node.
TensorField pullback(const Grid& grid, Kind kind, const TrigInterpolant& a, const Diffeo& phi);

/// Pushforward along the flow of v for time s = pullback along the reversed
/// flow; pass the Diffeo of the time -s flow.
TensorField pushforward(const Grid& grid, Kind kind, const TrigInterpolant& a, const Diffeo& reverse_flow);

/// Geometric reference for the Lie derivative: the centered flow difference
///   (pullback(Psi_{+ds}) - pullback(Psi_{-ds})) / (2 ds).
/// The two flow maps are computed once per velocity field and reused for
/// every transported quantity.
class FlowOracle {
public:
    FlowOracle(const TensorField& v, int v_max_mode, double ds = 1e-3, int substeps = 16);

    const Grid& grid() const { return grid_; }
    double ds() const { return ds_; }
    const TrigInterpolant& velocity() const { return vi_; }
    const Diffeo& forward() const { return fwd_; }
    const Diffeo& backward() const { return bwd_; }

    TensorField lie(const TensorField& a, int a_max_mode) const;
    TensorField lie(const TensorField& a, Kind kind, int a_max_mode) const;

private:
    Grid grid_;
    TrigInterpolant vi_;
    double ds_;
    Diffeo fwd_, bwd_;
};

}  // namespace eulgen
