#pragma once

#include "eulgen/material.hpp"

namespace eulgen {

/// Adjoint blocks of the first row of J_simple. Each B is the exact discrete
/// adjoint of v -> Lie_v X under the rectangle-rule pairing, because every
/// integration by parts uses only the skew centered-difference stencil.
TensorField bve_apply(const TensorField& F, const TensorField& xi);    // grad(F):Xi + div_rows(Xi F^T)
TensorField bin_apply(const TensorField& Fp, const TensorField& xi);   // grad(F_p):Xi
TensorField bex_apply(const TensorField& s, const TensorField& kappa); // -s grad(kappa)

/// Poisson operator of Theorem 3.3 in the entropy role:
///   (-Lie_v pi + B^ve(F)Xi_e + B^in(F_p)Xi_p + B^ex(s)kappa,
///    -Lie_v F, -Lie_v F_p, -Lie_v^ex s)   with v = zeta.v.
StateTangent j_simple_apply(const State& q, const CotState& zeta);

/// M_S^* and its adjoint M_S (Eq. 3.9), pointwise in the constitutive data.
/// For the entropy role both reduce bitwise to the identity.
CotState ms_star_apply(const MaterialEval& m, const CotState& zeta);
StateTangent ms_apply(const MaterialEval& m, const StateTangent& t);

/// Canonical Poisson operator for any tau role:
///   ms_apply(q, j_simple_apply(Phi(q), ms_star_apply(q, zeta)))
/// where Phi swaps tau for the entropy density s = S(w, tau).
StateTangent j_apply(const MaterialModel& model, const State& q, const CotState& zeta);

/// pair(z1, J z2) + pair(z2, J z1), normalized scale-free.
double skew_residual(const MaterialModel& model, const State& q, const CotState& z1, const CotState& z2);

/// Cyclic sum T_123 + T_231 + T_312 with T_abc = pair(z_a, J(J z_b) z_c),
/// using that q -> J(q) is linear so DJ(q)[dq] = J(dq). Entropy role only.
double jacobi_residual(const State& q, const CotState& z1, const CotState& z2, const CotState& z3);

/// N_E^* and N_E (Eq. 3.10), an exact discrete adjoint pair. v is the
/// material velocity (det F / rho_ref) pi.
EtaForces ne_star_apply(const MaterialEval& m, const TensorField& v, const CotState& zeta);
StateTangent ne_apply(const MaterialEval& m, const TensorField& v, const EtaForces& eta);
EtaForces ne_star_apply(const MaterialModel& model, const State& q, const CotState& zeta);
StateTangent ne_apply(const MaterialModel& model, const State& q, const EtaForces& eta);

}  // namespace eulgen
