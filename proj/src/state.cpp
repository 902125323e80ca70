#include "eulgen/state.hpp"

#include <cmath>
#include <stdexcept>

#include "eulgen/tensor_algebra.hpp"

namespace eulgen {

State make_state(const Grid& g, TauRole role) {
    return State{TensorField(g, Kind::Momentum), TensorField(g, Kind::TwoPoint),
                 TensorField(g, Kind::IntensiveMatrix), TensorField(g, Kind::ExtensiveScalar), role};
}

StateTangent zero_tangent(const Grid& g) {
    return StateTangent{TensorField(g, Kind::Momentum), TensorField(g, Kind::TwoPoint),
                        TensorField(g, Kind::IntensiveMatrix), TensorField(g, Kind::ExtensiveScalar)};
}

CotState zero_cotstate(const Grid& g) {
    return CotState{TensorField(g, Kind::Vector), TensorField(g, Kind::TwoPoint),
                    TensorField(g, Kind::IntensiveMatrix), TensorField(g, Kind::IntensiveScalar)};
}

double pair(const CotState& zeta, const StateTangent& dq) {
    return l2_inner(zeta.v, dq.pi) + l2_inner(zeta.xi_e, dq.F) + l2_inner(zeta.xi_p, dq.Fp) +
           l2_inner(zeta.kappa, dq.tau);
}

double norm(const StateTangent& t) {
    const double s = l2_inner(t.pi, t.pi) + l2_inner(t.F, t.F) + l2_inner(t.Fp, t.Fp) + l2_inner(t.tau, t.tau);
    return std::sqrt(s);
}

double norm(const CotState& z) {
    const double s = l2_inner(z.v, z.v) + l2_inner(z.xi_e, z.xi_e) + l2_inner(z.xi_p, z.xi_p) +
                     l2_inner(z.kappa, z.kappa);
    return std::sqrt(s);
}

StateTangent operator+(const StateTangent& a, const StateTangent& b) {
    return StateTangent{a.pi + b.pi, a.F + b.F, a.Fp + b.Fp, a.tau + b.tau};
}

StateTangent operator*(double s, const StateTangent& a) { return StateTangent{s * a.pi, s * a.F, s * a.Fp, s * a.tau}; }

StateTangent& axpy(StateTangent& y, double alpha, const StateTangent& x) {
    axpy(y.pi, alpha, x.pi);
    axpy(y.F, alpha, x.F);
    axpy(y.Fp, alpha, x.Fp);
    axpy(y.tau, alpha, x.tau);
    return y;
}

State& axpy(State& q, double alpha, const StateTangent& x) {
    axpy(q.pi, alpha, x.pi);
    axpy(q.F, alpha, x.F);
    axpy(q.Fp, alpha, x.Fp);
    axpy(q.tau, alpha, x.tau);
    return q;
}

State as_state(const StateTangent& t, TauRole role) { return State{t.pi, t.F, t.Fp, t.tau, role}; }

CotState operator*(double s, const CotState& z) { return CotState{s * z.v, s * z.xi_e, s * z.xi_p, s * z.kappa}; }

CotState operator+(const CotState& a, const CotState& b) {
    return CotState{a.v + b.v, a.xi_e + b.xi_e, a.xi_p + b.xi_p, a.kappa + b.kappa};
}

std::pair<TensorField, TensorField> velocity_and_density(const State& q, double rho_ref) {
    const Grid& g = q.grid();
    const TensorField detf = determinant_field(q.F);
    if (min_determinant(q.F) <= 0.0) throw std::invalid_argument("velocity_and_density: det F <= 0 at a node");
    TensorField v(g, Kind::Vector);
    const double* dj = detf.comp(0);
    for (int c = 0; c < g.dim(); ++c) {
        const double* src = q.pi.comp(c);
        double* dst = v.comp(c);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] = dj[node] / rho_ref * src[node];
    }
    TensorField rho(g, Kind::ExtensiveScalar);
    double* rr = rho.comp(0);
    for (std::size_t node = 0; node < g.num_nodes(); ++node) rr[node] = rho_ref / dj[node];
    return {v, rho};
}

void validate_state(const State& q) {
    if (q.F.grid() != q.pi.grid() || q.Fp.grid() != q.pi.grid() || q.tau.grid() != q.pi.grid())
        throw std::invalid_argument("state: fields live on different grids");
    if (!q.pi.all_finite() || !q.F.all_finite() || !q.Fp.all_finite() || !q.tau.all_finite())
        throw std::invalid_argument("state: non-finite sample");
    if (min_determinant(q.F) <= 0.0) throw std::invalid_argument("state: det F <= 0 at a node");
    if (min_determinant(q.Fp) <= 0.0) throw std::invalid_argument("state: det F_p <= 0 at a node");
}

}  // namespace eulgen
