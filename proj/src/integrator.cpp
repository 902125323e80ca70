#include "eulgen/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eulgen/tensor_algebra.hpp"

namespace eulgen {

Scheme scheme_from_name(const std::string& name) {
    if (name == "euler") return Scheme::Euler;
    if (name == "rk4") return Scheme::Rk4;
    throw std::invalid_argument("unknown scheme '" + name + "' (expected euler or rk4)");
}

std::string scheme_name(Scheme s) { return s == Scheme::Euler ? "euler" : "rk4"; }

State step(const MaterialModel& model, const DissipationSpec& diss, const State& q, double dt, Scheme scheme) {
    if (dt == 0.0) return q;
    State out = q;
    try {
        if (scheme == Scheme::Euler) {
            const StateTangent k1 = rhs(model, diss, q);
            axpy(out, dt, k1);
        } else {
            const StateTangent k1 = rhs(model, diss, q);
            State q2 = q;
            axpy(q2, 0.5 * dt, k1);
            const StateTangent k2 = rhs(model, diss, q2);
            State q3 = q;
            axpy(q3, 0.5 * dt, k2);
            const StateTangent k3 = rhs(model, diss, q3);
            State q4 = q;
            axpy(q4, dt, k3);
            const StateTangent k4 = rhs(model, diss, q4);
            axpy(out, dt / 6.0, k1);
            axpy(out, dt / 3.0, k2);
            axpy(out, dt / 3.0, k3);
            axpy(out, dt / 6.0, k4);
        }
        validate_state(out);
        eval_material(model, out);  // thermal admissibility of the new state
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("state invalid after step (") + e.what() + "); try a smaller dt");
    }
    return out;
}

double advisory_dt(const MaterialModel& model, const DissipationSpec& diss, const State& q) {
    const auto [v, rho] = velocity_and_density(q, model.rho_ref);
    double vmax = 0.0;
    for (std::size_t node = 0; node < v.num_nodes(); ++node) {
        double s = 0.0;
        for (int c = 0; c < v.components(); ++c) s += v.at(c, node) * v.at(c, node);
        vmax = std::max(vmax, s);
    }
    vmax = std::sqrt(vmax);
    double rho_min = rho.data()[0];
    for (double x : rho.data()) rho_min = std::min(rho_min, x);
    const double c = std::sqrt((model.lambda_lame + 2.0 * model.mu) / rho_min);
    const double h = q.grid().spacing();
    double dt = h / (vmax + c);
    const double visc = 2.0 * diss.mu_v + diss.lambda_v;
    if (visc > 0.0) dt = std::min(dt, rho_min * h * h / (4.0 * visc));
    if (diss.kappa_heat > 0.0) {
        const MaterialEval m = eval_material(model, q);
        const double theta_max = max_abs(m.theta);
        dt = std::min(dt, model.c_V * h * h / (4.0 * diss.kappa_heat * theta_max * theta_max));
    }
    return dt;
}

}  // namespace eulgen
