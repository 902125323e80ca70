#pragma once

#include <utility>

#include "eulgen/generic.hpp"

namespace eulgen {

inline std::pair<TensorField, TensorField> velocity_and_density(const MaterialModel& model, const State& q) {
    return velocity_and_density(q, model.rho_ref);
}

/// Eq. (3.6): integral of (det F / 2 rho_ref)|pi|^2 + E(F, F_p, tau).
double total_energy(const MaterialModel& model, const State& q);
/// Eq. (3.7): integral of S(F, F_p, tau).
double total_entropy(const MaterialModel& model, const State& q);

struct Differentials {
    CotState dE;  // (v, dFE + (rho|v|^2/2) F^{-T}, dFpE, dtauE)
    CotState dS;  // (0, dFS, dFpS, dtauS)
};
Differentials differentials(const MaterialModel& model, const State& q);

struct Stresses {
    TensorField sigma_e;  // Sigma_e^F = dFE - Theta dFS
    TensorField sigma_p;  // Sigma_p^F = dFpE - Theta dFpS
    TensorField cauchy;   // Sigma_e^F F^T + (E - Theta S) I
};
Stresses stresses(const MaterialModel& model, const TensorField& F, const TensorField& Fp, const TensorField& tau,
                  TauRole role);
inline Stresses stresses(const MaterialModel& model, const State& q) {
    return stresses(model, q.F, q.Fp, q.tau, q.role);
}

/// Hamiltonian vector field. The canonical value is the composed form
/// j_apply(q, DE(q)); the closed form evaluates Eq. (4.1) directly and agrees
/// only up to O(h^2) (its derivation uses continuum product rules).
StateTangent v_ham(const MaterialModel& model, const State& q);
StateTangent v_ham_closed(const MaterialModel& model, const State& q);

/// L_vi.pl = -(Theta/nu_p) F_p^T Sigma_p^F for the quadratic plastic
/// potential; nu_p = 0 disables plasticity.
TensorField plastic_rate(const MaterialModel& model, const DissipationSpec& diss, const TensorField& F,
                         const TensorField& Fp, const TensorField& tau, TauRole role);

/// eta_hat = d/d(eta) of the dual dissipation potential R*_simple:
///   eta_hat_m = Theta D_visc eta_m
///   eta_hat_p = (Theta^2/nu_p) F_p (F_p^T eta_p)
///   eta_hat_t = -div(K_heat grad eta_t)
EtaForces eta_hat(const DissipationSpec& diss, const MaterialEval& m, const TensorField& Fp, const EtaForces& eta);

/// R*_simple(q, eta) = (1/2) <eta, eta_hat> (quadratic potential; the heat
/// block uses discrete integration by parts, exact to rounding).
double rstar_value(const DissipationSpec& diss, const MaterialEval& m, const TensorField& Fp, const EtaForces& eta);

/// Dissipative vector field. Canonical value is
/// ne_apply(q, eta_hat(ne_star_apply(q, DS(q)))); the closed form evaluates
/// the final display of paragraph 4.2 (with the plastic-heating sign fixed so
/// that <DE, v_diss> vanishes; see scalar_rates).
StateTangent v_diss(const MaterialModel& model, const DissipationSpec& diss, const State& q);
StateTangent v_diss_closed(const MaterialModel& model, const DissipationSpec& diss, const State& q);

StateTangent rhs(const MaterialModel& model, const DissipationSpec& diss, const State& q);

struct ScalarRates {
    TensorField j_ham_s;   // reversible tau rate (Eq. 4.5c)
    TensorField j_diss_e;  // viscous + plastic heating, (1/dtauE)(D:D_visc D - dFpE:(F_p L))
    TensorField heat;      // -(1/dtauE) div(K_heat grad(1/Theta))
};
ScalarRates scalar_rates(const MaterialModel& model, const DissipationSpec& diss, const State& q);

struct KinematicResiduals {
    TensorField split;  // F_e^{-1}(dF_e/dt + Lie_v F_e) + (dF_p/dt + Lie_v F_p) F_p^{-1}
    double frame_dFE;   // max asymmetry of dFE F^T
    double frame_dFS;   // max asymmetry of dFS F^T
};
KinematicResiduals kinematic_residuals(const MaterialModel& model, const State& q, const StateTangent& q_dot);

/// d(rho)/dt + div(rho v) with d(rho)/dt = -rho tr(F^{-1} dF/dt) (Lemma 3.1).
TensorField continuity_residual(const MaterialModel& model, const State& q, const StateTangent& q_dot);

/// (normalized ||J DS||, max over lambda in {-1, 0.5, 2} of R*(q, lambda DE)).
std::pair<double, double> noninteraction_residuals(const MaterialModel& model, const DissipationSpec& diss,
                                                   const State& q);

}  // namespace eulgen
