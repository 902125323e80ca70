#include "eulgen/generic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eulgen/diff_ops.hpp"
#include "eulgen/lie.hpp"
#include "eulgen/tensor_algebra.hpp"

namespace eulgen {

namespace {

/// Covector with components sum_ab (d_i X_ab) Xi_ab, tagged Momentum (it is a
/// pi-slot tangent).
TensorField grad_contract(const TensorField& x, const TensorField& xi) {
    require_same_grid(x, xi);
    const Grid& g = x.grid();
    TensorField out(g, Kind::Momentum);
    for (int i = 0; i < g.dim(); ++i) {
        const TensorField di = partial(x, i);
        double* dst = out.comp(i);
        for (int c = 0; c < x.components(); ++c) {
            const double* a = di.comp(c);
            const double* b = xi.comp(c);
            for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += a[node] * b[node];
        }
    }
    return out;
}

double scale_of(const State& q) {
    const StateTangent t{q.pi, q.F, q.Fp, q.tau};
    return std::max(1.0, norm(t));
}

constexpr double kDenomFloor = 1e-30;

}  // namespace

TensorField bve_apply(const TensorField& F, const TensorField& xi) {
    TensorField out = grad_contract(F, xi);
    const TensorField flux = matmul_pointwise(xi, transpose_field(F), Kind::OpVV);
    return axpy(out, 1.0, div_matrix_rows(flux, Kind::Momentum));
}

TensorField bin_apply(const TensorField& Fp, const TensorField& xi) { return grad_contract(Fp, xi); }

TensorField bex_apply(const TensorField& s, const TensorField& kappa) {
    const Grid& g = s.grid();
    const TensorField grad = grad_scalar(kappa);
    TensorField out(g, Kind::Momentum);
    const double* sv = s.comp(0);
    for (int i = 0; i < g.dim(); ++i) {
        const double* gi = grad.comp(i);
        double* dst = out.comp(i);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] = -sv[node] * gi[node];
    }
    return out;
}

StateTangent j_simple_apply(const State& q, const CotState& zeta) {
    if (q.role != TauRole::Entropy) throw std::invalid_argument("j_simple_apply: tau role must be entropy");
    const TensorField& v = zeta.v;
    TensorField pi_dot = -1.0 * lie_derivative(v, q.pi, Kind::Momentum);
    axpy(pi_dot, 1.0, bve_apply(q.F, zeta.xi_e));
    axpy(pi_dot, 1.0, bin_apply(q.Fp, zeta.xi_p));
    axpy(pi_dot, 1.0, bex_apply(q.tau, zeta.kappa));
    return StateTangent{pi_dot, -1.0 * lie_derivative(v, q.F, Kind::TwoPoint),
                        -1.0 * lie_derivative(v, q.Fp, Kind::IntensiveMatrix),
                        -1.0 * lie_derivative(v, q.tau, Kind::ExtensiveScalar)};
}

CotState ms_star_apply(const MaterialEval& m, const CotState& zeta) {
    const TensorField c = scalar_divide(zeta.kappa, m.dtauS);
    return CotState{zeta.v, zeta.xi_e - scale_by_scalar_field(c, m.dFS).retagged(zeta.xi_e.kind()),
                    zeta.xi_p - scale_by_scalar_field(c, m.dFpS).retagged(zeta.xi_p.kind()), c};
}

StateTangent ms_apply(const MaterialEval& m, const StateTangent& t) {
    TensorField num = t.tau - double_dot(m.dFS, t.F.retagged(m.dFS.kind())).retagged(t.tau.kind());
    axpy(num, -1.0, double_dot(m.dFpS, t.Fp).retagged(t.tau.kind()));
    return StateTangent{t.pi, t.F, t.Fp, scalar_divide(num, m.dtauS.retagged(num.kind()))};
}

StateTangent j_apply(const MaterialModel& model, const State& q, const CotState& zeta) {
    const MaterialEval m = eval_material(model, q);
    State qs{q.pi, q.F, q.Fp, m.S.retagged(Kind::ExtensiveScalar), TauRole::Entropy};
    return ms_apply(m, j_simple_apply(qs, ms_star_apply(m, zeta)));
}

double skew_residual(const MaterialModel& model, const State& q, const CotState& z1, const CotState& z2) {
    const double raw = pair(z1, j_apply(model, q, z2)) + pair(z2, j_apply(model, q, z1));
    return std::abs(raw) / (norm(z1) * norm(z2) * scale_of(q) + kDenomFloor);
}

double jacobi_residual(const State& q, const CotState& z1, const CotState& z2, const CotState& z3) {
    if (q.role != TauRole::Entropy) throw std::invalid_argument("jacobi_residual: tau role must be entropy");
    const auto term = [&](const CotState& a, const CotState& b, const CotState& c) {
        const State jb = as_state(j_simple_apply(q, b), TauRole::Entropy);
        return pair(a, j_simple_apply(jb, c));
    };
    const double raw = term(z1, z2, z3) + term(z2, z3, z1) + term(z3, z1, z2);
    const double sc = scale_of(q);
    return std::abs(raw) / (norm(z1) * norm(z2) * norm(z3) * sc * sc + kDenomFloor);
}

EtaForces ne_star_apply(const MaterialEval& m, const TensorField& v, const CotState& zeta) {
    const TensorField c = scalar_divide(zeta.kappa, m.dtauE);
    TensorField eta_m = strain_rate(zeta.v);
    axpy(eta_m, -1.0, scale_by_scalar_field(c, strain_rate(v)));
    TensorField eta_p = zeta.xi_p - scale_by_scalar_field(c, m.dFpE).retagged(zeta.xi_p.kind());
    return EtaForces{eta_m, eta_p, c};
}

StateTangent ne_apply(const MaterialEval& m, const TensorField& v, const EtaForces& eta) {
    const Grid& g = v.grid();
    TensorField num = -1.0 * double_dot(strain_rate(v), eta.eta_m);
    axpy(num, -1.0, double_dot(m.dFpE, eta.eta_p.retagged(m.dFpE.kind())));
    axpy(num, 1.0, eta.eta_t.retagged(num.kind()));
    return StateTangent{-1.0 * div_matrix_rows(eta.eta_m, Kind::Momentum), TensorField(g, Kind::TwoPoint),
                        eta.eta_p.retagged(Kind::IntensiveMatrix),
                        scalar_divide(num, m.dtauE).retagged(Kind::ExtensiveScalar)};
}

EtaForces ne_star_apply(const MaterialModel& model, const State& q, const CotState& zeta) {
    const MaterialEval m = eval_material(model, q);
    return ne_star_apply(m, velocity_and_density(q, model.rho_ref).first, zeta);
}

StateTangent ne_apply(const MaterialModel& model, const State& q, const EtaForces& eta) {
    const MaterialEval m = eval_material(model, q);
    return ne_apply(m, velocity_and_density(q, model.rho_ref).first, eta);
}

}  // namespace eulgen
