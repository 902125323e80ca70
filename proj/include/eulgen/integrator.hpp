#pragma once

#include <string>

#include "eulgen/dynamics.hpp"

namespace eulgen {

enum class Scheme { Euler, Rk4 };

Scheme scheme_from_name(const std::string& name);
std::string scheme_name(Scheme s);

/// One explicit step of dq/dt = rhs(q). dt = 0 returns q bitwise unchanged.
/// The result is validated (finite, det F > 0, thermal admissibility); an
/// invalid post-step state raises std::runtime_error suggesting a smaller dt.
State step(const MaterialModel& model, const DissipationSpec& diss, const State& q, double dt, Scheme scheme);

/// Advisory explicit step bound: the acoustic limit h / (max|v| + c) with
/// c = sqrt((lambda + 2 mu) / rho_min), intersected with the diffusive limits
/// of the viscosity and heat conductivity. Stability stays the caller's
/// responsibility; this is only printed as guidance.
double advisory_dt(const MaterialModel& model, const DissipationSpec& diss, const State& q);

}  // namespace eulgen
