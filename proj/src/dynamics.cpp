#include "eulgen/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "eulgen/diff_ops.hpp"
#include "eulgen/lie.hpp"
#include "eulgen/tensor_algebra.hpp"

namespace eulgen {

namespace {

TensorField kinetic_density(const MaterialModel& model, const State& q) {
    const auto [v, rho] = velocity_and_density(model, q);
    TensorField kin = dot_product(q.pi, v.retagged(Kind::Momentum));
    for (double& x : kin.data()) x *= 0.5;
    return kin;
}

/// 2 mu_v eta + lambda_v tr(eta) I, pointwise.
TensorField apply_dvisc(const DissipationSpec& diss, const TensorField& eta) {
    const Grid& g = eta.grid();
    const int d = g.dim();
    TensorField out = 2.0 * diss.mu_v * eta;
    const TensorField tr = contract_trace(eta.retagged(Kind::OpVV));
    for (int i = 0; i < d; ++i) {
        double* dst = out.comp(i * d + i);
        const double* t = tr.comp(0);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += diss.lambda_v * t[node];
    }
    return out;
}

}  // namespace

double total_energy(const MaterialModel& model, const State& q) {
    const MaterialEval m = eval_material(model, q);
    return integrate(kinetic_density(model, q) + m.E);
}

double total_entropy(const MaterialModel& model, const State& q) {
    return integrate(eval_material(model, q).S);
}

Differentials differentials(const MaterialModel& model, const State& q) {
    const Grid& g = q.grid();
    const MaterialEval m = eval_material(model, q);
    const auto [v, rho] = velocity_and_density(model, q);

    TensorField xi_e = m.dFE;
    const TensorField kin = kinetic_density(model, q);
    const TensorField finvt = transpose_field(inverse_field(q.F));
    axpy(xi_e, 1.0, scale_by_scalar_field(kin.retagged(Kind::IntensiveScalar), finvt));

    CotState dE{v, xi_e, m.dFpE, m.dtauE};
    CotState dS{TensorField(g, Kind::Vector), m.dFS, m.dFpS, m.dtauS};
    return Differentials{dE, dS};
}

Stresses stresses(const MaterialModel& model, const TensorField& F, const TensorField& Fp, const TensorField& tau,
                  TauRole role) {
    const MaterialEval m = eval_material(model, F, Fp, tau, role);
    TensorField sigma_e = m.dFE;
    axpy(sigma_e, -1.0, scale_by_scalar_field(m.theta, m.dFS));
    TensorField sigma_p = m.dFpE;
    axpy(sigma_p, -1.0, scale_by_scalar_field(m.theta, m.dFpS));

    TensorField cauchy = matmul_pointwise(sigma_e, transpose_field(F), Kind::OpCV);
    TensorField psi = m.E;  // free energy density E - Theta S
    axpy(psi, -1.0, scalar_multiply(m.theta, m.S));
    const Grid& g = F.grid();
    const int d = g.dim();
    for (int i = 0; i < d; ++i) {
        double* dst = cauchy.comp(i * d + i);
        const double* p = psi.comp(0);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += p[node];
    }
    return Stresses{sigma_e, sigma_p, cauchy};
}

StateTangent v_ham(const MaterialModel& model, const State& q) {
    return j_apply(model, q, differentials(model, q).dE);
}

StateTangent v_ham_closed(const MaterialModel& model, const State& q) {
    const MaterialEval m = eval_material(model, q);
    const auto [v, rho] = velocity_and_density(model, q);
    const Stresses st = stresses(model, q);

    const TensorField rv = scale_by_scalar_field(rho.retagged(Kind::IntensiveScalar), v);
    TensorField pi_dot = -1.0 * div_matrix_rows(tensor_product(rv, v), Kind::Momentum);
    axpy(pi_dot, 1.0, div_matrix_rows(st.cauchy, Kind::Momentum));

    // tau rate: -v.grad(tau) - (S div v + (dFS F^T):D(v)) / dtauS
    TensorField num = scalar_multiply(m.S, div_vector(v));
    axpy(num, 1.0, double_dot(matmul_pointwise(m.dFS, transpose_field(q.F), Kind::OpVC), strain_rate(v)));
    TensorField tau_dot = -1.0 * advect(v, q.tau);
    axpy(tau_dot, -1.0, scalar_divide(num, m.dtauS).retagged(Kind::ExtensiveScalar));

    return StateTangent{pi_dot, -1.0 * lie_derivative(v, q.F, Kind::TwoPoint),
                        -1.0 * advect(v, q.Fp), tau_dot};
}

TensorField plastic_rate(const MaterialModel& model, const DissipationSpec& diss, const TensorField& F,
                         const TensorField& Fp, const TensorField& tau, TauRole role) {
    const Grid& g = F.grid();
    if (diss.nu_p == 0.0) return TensorField(g, Kind::IntensiveMatrix);
    const MaterialEval m = eval_material(model, F, Fp, tau, role);
    TensorField sigma_p = m.dFpE;
    axpy(sigma_p, -1.0, scale_by_scalar_field(m.theta, m.dFpS));
    TensorField out = matmul_pointwise(transpose_field(Fp), sigma_p, Kind::IntensiveMatrix);
    out = scale_by_scalar_field(m.theta, out);
    for (double& x : out.data()) x *= -1.0 / diss.nu_p;
    return out;
}

EtaForces eta_hat(const DissipationSpec& diss, const MaterialEval& m, const TensorField& Fp, const EtaForces& eta) {
    const Grid& g = Fp.grid();
    TensorField hm = scale_by_scalar_field(m.theta, apply_dvisc(diss, eta.eta_m));

    TensorField hp(g, Kind::IntensiveMatrix);
    if (diss.nu_p > 0.0) {
        const TensorField inner = scale_by_scalar_field(m.theta, matmul_pointwise(transpose_field(Fp),
                                                                                  eta.eta_p, Kind::IntensiveMatrix));
        hp = scale_by_scalar_field(m.theta, matmul_pointwise(Fp, inner, Kind::IntensiveMatrix));
        for (double& x : hp.data()) x /= diss.nu_p;
    }

    // K_heat = kappa_heat Theta^2 I
    TensorField kcoef = scalar_multiply(m.theta, m.theta);
    for (double& x : kcoef.data()) x *= diss.kappa_heat;
    const TensorField flux = scale_by_scalar_field(kcoef, grad_scalar(eta.eta_t));
    TensorField ht = -1.0 * div_vector(flux.retagged(Kind::Vector));

    return EtaForces{hm, hp, ht};
}

double rstar_value(const DissipationSpec& diss, const MaterialEval& m, const TensorField& Fp, const EtaForces& eta) {
    const EtaForces h = eta_hat(diss, m, Fp, eta);
    return 0.5 * (l2_inner(eta.eta_m, h.eta_m) + l2_inner(eta.eta_p, h.eta_p) + l2_inner(eta.eta_t, h.eta_t));
}

StateTangent v_diss(const MaterialModel& model, const DissipationSpec& diss, const State& q) {
    const MaterialEval m = eval_material(model, q);
    const TensorField v = velocity_and_density(model, q).first;
    CotState dS{TensorField(q.grid(), Kind::Vector), m.dFS, m.dFpS, m.dtauS};
    const EtaForces eta = ne_star_apply(m, v, dS);
    return ne_apply(m, v, eta_hat(diss, m, q.Fp, eta));
}

StateTangent v_diss_closed(const MaterialModel& model, const DissipationSpec& diss, const State& q) {
    const Grid& g = q.grid();
    const MaterialEval m = eval_material(model, q);
    const TensorField v = velocity_and_density(model, q).first;

    const TensorField dv = strain_rate(v);
    const TensorField dvisc = apply_dvisc(diss, dv);
    const TensorField pi_dot = div_matrix_rows(dvisc, Kind::Momentum);

    const TensorField L = plastic_rate(model, diss, q.F, q.Fp, q.tau, q.role);
    const TensorField fpl = matmul_pointwise(q.Fp, L, Kind::IntensiveMatrix);

    TensorField kcoef = scalar_multiply(m.theta, m.theta);
    for (double& x : kcoef.data()) x *= diss.kappa_heat;
    const TensorField invtheta = reciprocal(m.theta);
    const TensorField flux = scale_by_scalar_field(kcoef, grad_scalar(invtheta));

    TensorField num = double_dot(dv, dvisc);
    axpy(num, -1.0, double_dot(m.dFpE, fpl));
    axpy(num, -1.0, div_vector(flux.retagged(Kind::Vector)));

    return StateTangent{pi_dot, TensorField(g, Kind::TwoPoint), fpl,
                        scalar_divide(num, m.dtauE).retagged(Kind::ExtensiveScalar)};
}

StateTangent rhs(const MaterialModel& model, const DissipationSpec& diss, const State& q) {
    StateTangent out = v_ham(model, q);
    return axpy(out, 1.0, v_diss(model, diss, q));
}

ScalarRates scalar_rates(const MaterialModel& model, const DissipationSpec& diss, const State& q) {
    const MaterialEval m = eval_material(model, q);
    const TensorField v = velocity_and_density(model, q).first;

    TensorField num = scalar_multiply(m.S, div_vector(v));
    axpy(num, 1.0, double_dot(matmul_pointwise(m.dFS, transpose_field(q.F), Kind::OpVC), strain_rate(v)));
    TensorField j_ham_s = -1.0 * advect(v, q.tau);
    axpy(j_ham_s, -1.0, scalar_divide(num, m.dtauS).retagged(Kind::ExtensiveScalar));

    const TensorField dv = strain_rate(v);
    const TensorField dvisc = apply_dvisc(diss, dv);
    const TensorField L = plastic_rate(model, diss, q.F, q.Fp, q.tau, q.role);
    const TensorField fpl = matmul_pointwise(q.Fp, L, Kind::IntensiveMatrix);
    TensorField jd = double_dot(dv, dvisc);
    axpy(jd, -1.0, double_dot(m.dFpE, fpl));
    const TensorField j_diss_e = scalar_divide(jd, m.dtauE);

    TensorField kcoef = scalar_multiply(m.theta, m.theta);
    for (double& x : kcoef.data()) x *= diss.kappa_heat;
    const TensorField flux = scale_by_scalar_field(kcoef, grad_scalar(reciprocal(m.theta)));
    const TensorField heat = -1.0 * scalar_divide(div_vector(flux.retagged(Kind::Vector)), m.dtauE);

    return ScalarRates{j_ham_s, j_diss_e, heat};
}

KinematicResiduals kinematic_residuals(const MaterialModel& model, const State& q, const StateTangent& q_dot) {
    const MaterialEval m = eval_material(model, q);
    const TensorField v = velocity_and_density(model, q).first;

    const TensorField fp_inv = inverse_field(q.Fp);
    const TensorField fe = matmul_pointwise(q.F, fp_inv, Kind::TwoPoint);
    const TensorField fe_inv = inverse_field(fe);

    // dF_e/dt = dF/dt F_p^{-1} - F_e dF_p/dt F_p^{-1}
    TensorField fe_dot = matmul_pointwise(q_dot.F, fp_inv, Kind::TwoPoint);
    axpy(fe_dot, -1.0,
         matmul_pointwise(fe, matmul_pointwise(q_dot.Fp, fp_inv, Kind::IntensiveMatrix), Kind::TwoPoint));

    TensorField elastic = fe_dot + lie_derivative(v, fe, Kind::TwoPoint);
    TensorField plastic = q_dot.Fp + lie_derivative(v, q.Fp, Kind::IntensiveMatrix);

    TensorField split = matmul_pointwise(fe_inv, elastic, Kind::IntensiveMatrix);
    axpy(split, 1.0, matmul_pointwise(plastic, fp_inv, Kind::IntensiveMatrix));

    const double frame_e = max_asymmetry(matmul_pointwise(m.dFE, transpose_field(q.F), Kind::OpCV));
    const double frame_s = max_asymmetry(matmul_pointwise(m.dFS, transpose_field(q.F), Kind::OpCV));
    return KinematicResiduals{split, frame_e, frame_s};
}

TensorField continuity_residual(const MaterialModel& model, const State& q, const StateTangent& q_dot) {
    const auto [v, rho] = velocity_and_density(model, q);
    const TensorField tr = contract_trace(matmul_pointwise(inverse_field(q.F), q_dot.F, Kind::OpVV));
    TensorField out = div_outer_with_velocity(rho, v);
    axpy(out, -1.0, scalar_multiply(rho.retagged(Kind::IntensiveScalar), tr).retagged(Kind::ExtensiveScalar));
    return out;
}

std::pair<double, double> noninteraction_residuals(const MaterialModel& model, const DissipationSpec& diss,
                                                   const State& q) {
    const MaterialEval m = eval_material(model, q);
    const Differentials d = differentials(model, q);
    const TensorField v = velocity_and_density(model, q).first;

    const StateTangent jds = j_apply(model, q, d.dS);
    const StateTangent qt{q.pi, q.F, q.Fp, q.tau};
    const double r1 = norm(jds) / (norm(d.dS) * std::max(1.0, norm(qt)) + 1e-30);

    double r2 = 0.0;
    for (double lambda : {-1.0, 0.5, 2.0}) {
        const EtaForces eta = ne_star_apply(m, v, lambda * d.dE);
        r2 = std::max(r2, std::abs(rstar_value(diss, m, q.Fp, eta)));
    }
    return {r1, r2};
}

}  // namespace eulgen
