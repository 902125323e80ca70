#include "eulgen/flow.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulgen/util.hpp"

namespace eulgen {

double Diffeo::min_det() const {
    double worst = matd::det(dpsi.data(), d);
    for (std::size_t p = 1; p < npts; ++p)
        worst = std::min(worst, matd::det(dpsi.data() + p * static_cast<std::size_t>(d) * d, d));
    return worst;
}

std::vector<double> grid_points(const Grid& g) {
    const int d = g.dim();
    std::vector<double> pts(g.num_nodes() * static_cast<std::size_t>(d));
    for (std::size_t node = 0; node < g.num_nodes(); ++node) {
        const auto x = g.coords(node);
        for (int a = 0; a < d; ++a) pts[node * d + a] = x[a];
    }
    return pts;
}

namespace {

/// RHS of the coupled system: yd = v(y), md = J(y) m.
void flow_rhs(const TrigInterpolant& v, int d, const double* y, const double* m, double* yd, double* md) {
    double jac[9];
    v.value_and_jacobian(y, yd, jac);
    matd::matmul(jac, m, d, md);
}

}  // namespace

Diffeo flow_map(const TrigInterpolant& v, const std::vector<double>& start, int d, double s, int substeps) {
    if (d != v.dim() || v.components() != d) throw std::invalid_argument("flow_map: v must be a d-component field");
    if (substeps < 1) throw std::invalid_argument("flow_map: substeps must be >= 1");
    if (start.size() % static_cast<std::size_t>(d) != 0) throw std::invalid_argument("flow_map: bad start size");

    Diffeo out;
    out.d = d;
    out.npts = start.size() / static_cast<std::size_t>(d);
    out.psi.resize(out.npts * static_cast<std::size_t>(d));
    out.dpsi.resize(out.npts * static_cast<std::size_t>(d) * d);

    const double dt = s / static_cast<double>(substeps);
    parallel_for(out.npts, [&](std::size_t lo, std::size_t hi) {
        double y[3], m[9], yt[3], mt[9];
        double k1y[3], k1m[9], k2y[3], k2m[9], k3y[3], k3m[9], k4y[3], k4m[9];
        for (std::size_t p = lo; p < hi; ++p) {
            for (int a = 0; a < d; ++a) y[a] = start[p * d + a];
            for (int i = 0; i < d * d; ++i) m[i] = 0.0;
            for (int i = 0; i < d; ++i) m[i * d + i] = 1.0;

            for (int step = 0; step < substeps; ++step) {
                flow_rhs(v, d, y, m, k1y, k1m);
                for (int a = 0; a < d; ++a) yt[a] = y[a] + 0.5 * dt * k1y[a];
                for (int i = 0; i < d * d; ++i) mt[i] = m[i] + 0.5 * dt * k1m[i];
                flow_rhs(v, d, yt, mt, k2y, k2m);
                for (int a = 0; a < d; ++a) yt[a] = y[a] + 0.5 * dt * k2y[a];
                for (int i = 0; i < d * d; ++i) mt[i] = m[i] + 0.5 * dt * k2m[i];
                flow_rhs(v, d, yt, mt, k3y, k3m);
                for (int a = 0; a < d; ++a) yt[a] = y[a] + dt * k3y[a];
                for (int i = 0; i < d * d; ++i) mt[i] = m[i] + dt * k3m[i];
                flow_rhs(v, d, yt, mt, k4y, k4m);
                for (int a = 0; a < d; ++a) y[a] += dt / 6.0 * (k1y[a] + 2.0 * k2y[a] + 2.0 * k3y[a] + k4y[a]);
                for (int i = 0; i < d * d; ++i) m[i] += dt / 6.0 * (k1m[i] + 2.0 * k2m[i] + 2.0 * k3m[i] + k4m[i]);
            }

            for (int a = 0; a < d; ++a) out.psi[p * d + a] = y[a];
            for (int i = 0; i < d * d; ++i) out.dpsi[p * static_cast<std::size_t>(d) * d + i] = m[i];
        }
    });
    return out;
}

Diffeo compose_flow(const Diffeo& second, const Diffeo& first) {
    if (second.d != first.d || second.npts != first.npts)
        throw std::invalid_argument("compose_flow: incompatible diffeos");
    const int d = first.d;
    Diffeo out;
    out.d = d;
    out.npts = first.npts;
    out.psi = second.psi;
    out.dpsi.resize(out.npts * static_cast<std::size_t>(d) * d);
    for (std::size_t p = 0; p < out.npts; ++p)
        matd::matmul(second.dpsi.data() + p * static_cast<std::size_t>(d) * d,
                     first.dpsi.data() + p * static_cast<std::size_t>(d) * d, d,
                     out.dpsi.data() + p * static_cast<std::size_t>(d) * d);
    return out;
}

TensorField pullback(const Grid& grid, Kind kind, const TrigInterpolant& a, const Diffeo& phi) {
    const int d = grid.dim();
    if (phi.npts != grid.num_nodes() || phi.d != d) throw std::invalid_argument("pullback: diffeo/grid mismatch");
    if (a.components() != kind_components(kind, d)) throw std::invalid_argument("pullback: kind/component mismatch");

    TensorField out(grid, kind);
    parallel_for(grid.num_nodes(), [&](std::size_t lo, std::size_t hi) {
        double vals[9], minv[9], tmp[9], res[9], mit[9];
        for (std::size_t node = lo; node < hi; ++node) {
            const double* x = phi.psi.data() + node * d;
            const double* m = phi.dpsi.data() + node * static_cast<std::size_t>(d) * d;
            a.values(x, vals);
            const double det = matd::inverse(m, d, minv);
            switch (kind) {
                case Kind::IntensiveScalar:
                    out.at(0, node) = vals[0];
                    break;
                case Kind::ExtensiveScalar:
                    out.at(0, node) = det * vals[0];
                    break;
                case Kind::Vector:
                    matd::matvec(minv, vals, d, res);
                    for (int i = 0; i < d; ++i) out.at(i, node) = res[i];
                    break;
                case Kind::Covector: {
                    double mt[9];
                    matd::transpose(m, d, mt);
                    matd::matvec(mt, vals, d, res);
                    for (int i = 0; i < d; ++i) out.at(i, node) = res[i];
                    break;
                }
                case Kind::Momentum: {
                    double mt[9];
                    matd::transpose(m, d, mt);
                    matd::matvec(mt, vals, d, res);
                    for (int i = 0; i < d; ++i) out.at(i, node) = det * res[i];
                    break;
                }
                case Kind::RdExtensive:
                    for (int i = 0; i < d; ++i) out.at(i, node) = det * vals[i];
                    break;
                case Kind::OpVV:
                    matd::matmul(vals, m, d, tmp);
                    matd::matmul(minv, tmp, d, res);
                    for (int c = 0; c < d * d; ++c) out.at(c, node) = res[c];
                    break;
                case Kind::OpVC: {
                    double mt[9];
                    matd::transpose(m, d, mt);
                    matd::matmul(vals, m, d, tmp);
                    matd::matmul(mt, tmp, d, res);
                    for (int c = 0; c < d * d; ++c) out.at(c, node) = res[c];
                    break;
                }
                case Kind::OpCC: {
                    double mt[9];
                    matd::transpose(m, d, mt);
                    matd::transpose(minv, d, mit);
                    matd::matmul(vals, mit, d, tmp);
                    matd::matmul(mt, tmp, d, res);
                    for (int c = 0; c < d * d; ++c) out.at(c, node) = res[c];
                    break;
                }
                case Kind::OpCV:
                    matd::transpose(minv, d, mit);
                    matd::matmul(vals, mit, d, tmp);
                    matd::matmul(minv, tmp, d, res);
                    for (int c = 0; c < d * d; ++c) out.at(c, node) = res[c];
                    break;
                case Kind::TwoPoint:
                    matd::matmul(minv, vals, d, res);
                    for (int c = 0; c < d * d; ++c) out.at(c, node) = res[c];
                    break;
                case Kind::IntensiveMatrix:
                    for (int c = 0; c < d * d; ++c) out.at(c, node) = vals[c];
                    break;
            }
        }
    });
    return out;
}

TensorField pushforward(const Grid& grid, Kind kind, const TrigInterpolant& a, const Diffeo& reverse_flow) {
    return pullback(grid, kind, a, reverse_flow);
}

FlowOracle::FlowOracle(const TensorField& v, int v_max_mode, double ds, int substeps)
    : grid_(v.grid()), vi_(v, v_max_mode), ds_(ds) {
    require_kind(v, Kind::Vector, "FlowOracle");
    const std::vector<double> start = grid_points(grid_);
    fwd_ = flow_map(vi_, start, grid_.dim(), ds_, substeps);
    bwd_ = flow_map(vi_, start, grid_.dim(), -ds_, substeps);
    if (fwd_.min_det() <= 0.0 || bwd_.min_det() <= 0.0)
        throw std::runtime_error("FlowOracle: flow map not orientation-preserving; reduce ds");
}

TensorField FlowOracle::lie(const TensorField& a, int a_max_mode) const { return lie(a, a.kind(), a_max_mode); }

TensorField FlowOracle::lie(const TensorField& a, Kind kind, int a_max_mode) const {
    if (a.grid() != grid_) throw std::invalid_argument("FlowOracle::lie: field lives on a different grid");
    const TrigInterpolant ai(a, a_max_mode);
    const TensorField plus = pullback(grid_, kind, ai, fwd_);
    const TensorField minus = pullback(grid_, kind, ai, bwd_);
    TensorField out = plus - minus;
    return (1.0 / (2.0 * ds_)) * out;
}

}  // namespace eulgen
