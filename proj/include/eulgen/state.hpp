#pragma once

#include "eulgen/field.hpp"

namespace eulgen {

/// Interpretation of the thermodynamic slot tau.
enum class TauRole { Entropy, InternalEnergy };

/// State vector q = (pi, F, F_p, tau). pi is a Momentum field, F a TwoPoint
/// field, F_p an IntensiveMatrix field, tau an extensive scalar whose meaning
/// (entropy or internal-energy density) is selected by `role`.
struct State {
    TensorField pi;
    TensorField F;
    TensorField Fp;
    TensorField tau;
    TauRole role = TauRole::Entropy;

    const Grid& grid() const { return pi.grid(); }
};

/// Tangent direction in state space; same shapes as State, no role.
struct StateTangent {
    TensorField pi;
    TensorField F;
    TensorField Fp;
    TensorField tau;

    const Grid& grid() const { return pi.grid(); }
};

/// Cotangent direction zeta = (v_slot, Xi_e, Xi_p, kappa) dual to State.
struct CotState {
    TensorField v;
    TensorField xi_e;
    TensorField xi_p;
    TensorField kappa;

    const Grid& grid() const { return v.grid(); }
};

/// Driving forces eta = (eta_m, eta_p, eta_t) of the dissipation potential.
struct EtaForces {
    TensorField eta_m;  // symmetric matrix field
    TensorField eta_p;  // matrix field
    TensorField eta_t;  // scalar field

    const Grid& grid() const { return eta_m.grid(); }
};

State make_state(const Grid& g, TauRole role);
StateTangent zero_tangent(const Grid& g);
CotState zero_cotstate(const Grid& g);

/// Dual pairing <zeta, dq> = h^d * sum over all four blocks.
double pair(const CotState& zeta, const StateTangent& dq);

double norm(const StateTangent& t);
double norm(const CotState& z);

StateTangent operator+(const StateTangent& a, const StateTangent& b);
StateTangent operator*(double s, const StateTangent& a);
StateTangent& axpy(StateTangent& y, double alpha, const StateTangent& x);
State& axpy(State& q, double alpha, const StateTangent& x);

/// Reinterpret a tangent as a state (the Poisson operator is linear in q, so
/// its q-derivative in direction t is J evaluated at t).
State as_state(const StateTangent& t, TauRole role);

CotState operator*(double s, const CotState& z);
CotState operator+(const CotState& a, const CotState& b);

/// v = (det F / rho_ref) pi componentwise, rho = rho_ref / det F. The single
/// expression for v is used everywhere the velocity is needed, so composed
/// and closed-form paths see identical samples.
std::pair<TensorField, TensorField> velocity_and_density(const State& q, double rho_ref);

/// Throws std::invalid_argument describing the first violated invariant:
/// finite samples, shared grid, det F > 0, det F_p > 0.
void validate_state(const State& q);

}  // namespace eulgen
