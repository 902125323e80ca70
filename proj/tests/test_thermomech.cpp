#include <cmath>

#include "doctest.h"
#include "eulgen/diff_ops.hpp"
#include "eulgen/dynamics.hpp"
#include "eulgen/tensor_algebra.hpp"
#include "test_helpers.hpp"

using namespace eulgen;
using namespace eulgen::testing;

namespace {
const MaterialModel kModel{};
const DissipationSpec kDiss{0.1, 0.05, 0.5, 0.2};

double rel_norm(const StateTangent& a, const StateTangent& b) {
    return norm(a + (-1.0 * b)) / (norm(b) + 1e-30);
}
}  // namespace

TEST_CASE("velocity and density recover pi = rho v") {
    const Grid g = make_grid(2, 16, 1.0);
    const State q = make_random_state(g, TauRole::Entropy, 1);
    const auto [v, rho] = velocity_and_density(kModel, q);
    const TensorField recon = scale_by_scalar_field(rho.retagged(Kind::IntensiveScalar), v).retagged(Kind::Momentum);
    CHECK(max_abs(recon - q.pi) < 1e-13 * (1.0 + max_abs(q.pi)));
}

TEST_CASE("rest-state energy and entropy") {
    const Grid g = make_grid(2, 16, 1.0);
    State q = make_state(g, TauRole::Entropy);
    q.F = identity_matrix_field(g, Kind::TwoPoint);
    q.Fp = identity_matrix_field(g, Kind::IntensiveMatrix);
    const double s0 = 0.4;
    q.tau = constant_field(g, Kind::ExtensiveScalar, s0);
    const double expected = kModel.c_V * kModel.theta_ref * std::exp(s0 / kModel.c_V);
    CHECK(total_energy(kModel, q) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(total_entropy(kModel, q) == doctest::Approx(s0).epsilon(1e-12));
}

TEST_CASE("kinetic energy is quadratic in pi") {
    const Grid g = make_grid(2, 16, 1.0);
    State q = make_random_state(g, TauRole::Entropy, 2);
    const double e1 = total_energy(kModel, q);
    State q0 = q;
    q0.pi = TensorField(g, Kind::Momentum);
    const double e0 = total_energy(kModel, q0);
    State q2 = q;
    q2.pi = 2.0 * q.pi;
    const double e2 = total_energy(kModel, q2);
    CHECK(e2 - e0 == doctest::Approx(4.0 * (e1 - e0)).epsilon(1e-10));
}

TEST_CASE("differentials match central finite differences of the functionals") {
    const Grid g = make_grid(2, 16, 1.0);
    for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
        CAPTURE(role == TauRole::Entropy ? "entropy" : "internal_energy");
        const State q = make_random_state(g, role, 3);
        const Differentials d = differentials(kModel, q);
        for (std::uint64_t s = 0; s < 5; ++s) {
            const StateTangent dq = make_random_tangent(g, 30 + 10 * s, 0.01);
            const double eps = 1e-5;
            State qp = q, qm = q;
            axpy(qp, eps, dq);
            axpy(qm, -eps, dq);
            const double fd_e = (total_energy(kModel, qp) - total_energy(kModel, qm)) / (2.0 * eps);
            const double fd_s = (total_entropy(kModel, qp) - total_entropy(kModel, qm)) / (2.0 * eps);
            CHECK(pair(d.dE, dq) == doctest::Approx(fd_e).epsilon(1e-6));
            CHECK(pair(d.dS, dq) == doctest::Approx(fd_s).epsilon(1e-6));
        }
    }
}

TEST_CASE("stress identities") {
    const Grid g = make_grid(2, 16, 1.0);

    SUBCASE("stress-free reference") {
        State q = make_state(g, TauRole::Entropy);
        q.F = identity_matrix_field(g, Kind::TwoPoint);
        q.Fp = identity_matrix_field(g, Kind::IntensiveMatrix);
        q.tau = constant_field(g, Kind::ExtensiveScalar, 0.1);
        const Stresses st = stresses(kModel, q);
        CHECK(max_abs(st.sigma_e) == 0.0);
        CHECK(max_abs(div_matrix_rows(st.cauchy)) == 0.0);
    }
    SUBCASE("frame indifference of the default model") {
        for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
            const State q = make_random_state(g, role, 4);
            const KinematicResiduals kr = kinematic_residuals(kModel, q, zero_tangent(g));
            CHECK(kr.frame_dFE < 1e-12);
            CHECK(kr.frame_dFS < 1e-12);
        }
    }
    SUBCASE("sigma_e agrees across roles on the same physical state") {
        State qs = make_random_state(g, TauRole::Entropy, 5);
        const MaterialEval ms = eval_material(kModel, qs);
        State qe = qs;
        qe.role = TauRole::InternalEnergy;
        qe.tau = ms.E.retagged(Kind::ExtensiveScalar);
        const Stresses a = stresses(kModel, qs);
        const Stresses b = stresses(kModel, qe);
        CHECK(max_abs(a.sigma_e - b.sigma_e) < 1e-10);
        CHECK(max_abs(a.cauchy - b.cauchy) < 1e-10);
    }
}

TEST_CASE("composed and closed-form vector fields") {
    SUBCASE("v_ham discrepancy converges at second order") {
        double prev = 0.0;
        for (int n : {16, 32}) {
            const Grid g = make_grid(2, n, 1.0);
            const State q = make_random_state(g, TauRole::Entropy, 6);
            const double err = rel_norm(v_ham_closed(kModel, q), v_ham(kModel, q));
            if (prev > 0.0) CHECK(prev / err > 3.5);
            prev = err;
        }
    }
    SUBCASE("v_diss composed equals the closed form to rounding") {
        const Grid g = make_grid(2, 16, 1.0);
        for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
            const State q = make_random_state(g, role, 7);
            CHECK(rel_norm(v_diss(kModel, kDiss, q), v_diss_closed(kModel, kDiss, q)) < 1e-12);
        }
    }
    SUBCASE("v_diss F block is exactly zero") {
        const Grid g = make_grid(2, 16, 1.0);
        const State q = make_random_state(g, TauRole::Entropy, 8);
        CHECK(max_abs(v_diss(kModel, kDiss, q).F) == 0.0);
    }
}

TEST_CASE("power balance and entropy production") {
    const Grid g = make_grid(2, 16, 1.0);
    for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const State q = make_random_state(g, role, 200 + 10 * s);
            const Differentials d = differentials(kModel, q);
            const StateTangent r = rhs(kModel, kDiss, q);
            const double scale = norm(d.dE) * norm(r) + 1e-30;
            CHECK(std::abs(pair(d.dE, r)) / scale < 1e-10);
            CHECK(pair(d.dS, r) > -1e-12);
        }
    }
}

TEST_CASE("plastic rate dissipates") {
    const Grid g = make_grid(2, 16, 1.0);
    const State q = make_random_state(g, TauRole::Entropy, 9);
    const MaterialEval m = eval_material(kModel, q);
    const TensorField L = plastic_rate(kModel, kDiss, q.F, q.Fp, q.tau, q.role);
    TensorField sigma_p = m.dFpE;
    axpy(sigma_p, -1.0, scale_by_scalar_field(m.theta, m.dFpS));
    // entropy production density (1/Theta) <-Sigma_p^F, F_p L> >= 0
    const TensorField fpl = matmul_pointwise(q.Fp, L, Kind::IntensiveMatrix);
    const TensorField prod = scalar_divide(-1.0 * double_dot(sigma_p, fpl), m.theta);
    double worst = 0.0;
    for (double x : prod.data()) worst = std::min(worst, x);
    CHECK(worst > -1e-14);

    SUBCASE("nu_p = 0 disables plasticity") {
        DissipationSpec off = kDiss;
        off.nu_p = 0.0;
        CHECK(max_abs(plastic_rate(kModel, off, q.F, q.Fp, q.tau, q.role)) == 0.0);
    }
}

TEST_CASE("noninteraction residuals") {
    const Grid g = make_grid(2, 16, 1.0);
    for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
        const State q = make_random_state(g, role, 11);
        const auto [r1, r2] = noninteraction_residuals(kModel, kDiss, q);
        CHECK(r1 < 1e-10);
        CHECK(r2 < 1e-12 * std::abs(total_energy(kModel, q)));
    }
}

TEST_CASE("homogeneous equilibrium is a fixed point of the dynamics") {
    const Grid g = make_grid(2, 16, 1.0);
    State q = make_state(g, TauRole::Entropy);
    q.F = identity_matrix_field(g, Kind::TwoPoint);
    q.Fp = identity_matrix_field(g, Kind::IntensiveMatrix);
    q.tau = constant_field(g, Kind::ExtensiveScalar, 0.2);
    const StateTangent r = rhs(kModel, kDiss, q);
    CHECK(norm(r) < 1e-12);
}

TEST_CASE("kinematic split residual vanishes at rest") {
    const Grid g = make_grid(2, 16, 1.0);
    State q = make_random_state(g, TauRole::Entropy, 12);
    q.pi = TensorField(g, Kind::Momentum);
    const StateTangent qdot = v_ham(kModel, q);
    const KinematicResiduals kr = kinematic_residuals(kModel, q, qdot);
    CHECK(max_abs(kr.split) < 1e-14);
}

TEST_CASE("continuity residual converges along Hamiltonian trajectories") {
    double prev = 0.0;
    for (int n : {16, 32}) {
        const Grid g = make_grid(2, n, 1.0);
        const State q = make_random_state(g, TauRole::Entropy, 13);
        const StateTangent qdot = v_ham(kModel, q);
        const double r = l2_norm(continuity_residual(kModel, q, qdot));
        if (prev > 0.0) CHECK(prev / r > 3.5);
        prev = r;
    }
}

TEST_CASE("internal-energy role enforces the thermal floor") {
    const Grid g = make_grid(2, 16, 1.0);
    State q = make_random_state(g, TauRole::InternalEnergy, 14);
    q.tau = constant_field(g, Kind::ExtensiveScalar, -1.0);
    CHECK_THROWS(total_energy(kModel, q));
}
