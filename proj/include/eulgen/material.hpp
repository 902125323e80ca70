#pragma once

#include "eulgen/state.hpp"

namespace eulgen {

/// Constitutive parameters of the default model. The free energy is built
/// from the elastic part F_e = F F_p^{-1}:
///   W_el(F_e) = (mu/2)(|F_e|^2 - d) - mu ln det F_e + (lambda/2)(ln det F_e)^2
///   H(F_p)    = (k_h/2)|F_p - I|^2
///   thermal   = c_V theta_ref exp(s/c_V), so Theta = theta_ref exp(s/c_V) > 0.
/// Role Entropy: E = W_el + H + thermal, S = s.
/// Role InternalEnergy: E = e, S = c_V ln((e - W_el - H)/(c_V theta_ref)),
/// admissible only above the thermal floor e - W_el - H >= 1e-10 c_V theta_ref
/// (violations are hard errors; clamping would silently break conservation).
struct MaterialModel {
    double rho_ref = 1.0;
    double mu = 1.0;
    double lambda_lame = 1.0;
    double k_h = 1.0;
    double c_V = 1.0;
    double theta_ref = 1.0;
};

/// Dissipation coefficients, all >= 0.
///   D_visc eta = 2 mu_v eta + lambda_v tr(eta) I  (on symmetric matrices)
///   plastic dual potential density |xi_p|^2 / (2 nu_p); nu_p = 0 disables
///   K_heat = kappa_heat Theta^2 I, so the flux -K grad(1/Theta) is the
///   classical Fourier flux kappa_heat grad(Theta).
struct DissipationSpec {
    double mu_v = 0.0;
    double lambda_v = 0.0;
    double nu_p = 0.0;
    double kappa_heat = 0.0;
};

/// Pointwise constitutive evaluation: densities, all first partials, and the
/// temperature Theta = dtauE / dtauS.
struct MaterialEval {
    TensorField E;      // IntensiveScalar density
    TensorField S;      // IntensiveScalar density
    TensorField dFE;    // TwoPoint
    TensorField dFpE;   // IntensiveMatrix
    TensorField dtauE;  // IntensiveScalar
    TensorField dFS;    // TwoPoint
    TensorField dFpS;   // IntensiveMatrix
    TensorField dtauS;  // IntensiveScalar
    TensorField theta;  // IntensiveScalar
};

MaterialEval eval_material(const MaterialModel& model, const TensorField& F, const TensorField& Fp,
                           const TensorField& tau, TauRole role);

inline MaterialEval eval_material(const MaterialModel& model, const State& q) {
    return eval_material(model, q.F, q.Fp, q.tau, q.role);
}

}  // namespace eulgen
