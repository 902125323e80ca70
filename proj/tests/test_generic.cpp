#include <cmath>

#include "doctest.h"
#include "eulgen/generic.hpp"
#include "eulgen/lie.hpp"
#include "eulgen/tensor_algebra.hpp"
#include "test_helpers.hpp"

using namespace eulgen;
using namespace eulgen::testing;

namespace {
const MaterialModel kModel{};
}

TEST_CASE("B operators are exact discrete adjoints of the transports") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField v = fourier(g, Kind::Vector, 1, 1.0);
    const State q = make_random_state(g, TauRole::Entropy, 10);

    SUBCASE("B^ve vs Lie^ve") {
        const TensorField xi = fourier(g, Kind::TwoPoint, 2, 1.0);
        const double lhs = l2_inner(v, bve_apply(q.F, xi));
        const double rhs = l2_inner(xi, lie_derivative(v, q.F, Kind::TwoPoint));
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    }
    SUBCASE("B^in vs Lie^in") {
        const TensorField xi = fourier(g, Kind::IntensiveMatrix, 3, 1.0);
        const double lhs = l2_inner(v, bin_apply(q.Fp, xi));
        const double rhs = l2_inner(xi, lie_derivative(v, q.Fp, Kind::IntensiveMatrix));
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    }
    SUBCASE("B^ex vs Lie^ex") {
        const TensorField kappa = fourier(g, Kind::IntensiveScalar, 4, 1.0);
        const double lhs = l2_inner(v, bex_apply(q.tau, kappa));
        const double rhs = l2_inner(kappa, lie_derivative(v, q.tau, Kind::ExtensiveScalar));
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    }
    SUBCASE("B^ex of constant test function vanishes exactly") {
        const TensorField ones = constant_field(g, Kind::IntensiveScalar, 1.0);
        CHECK(max_abs(bex_apply(q.tau, ones)) == 0.0);
    }
}

TEST_CASE("J is exactly skew-symmetric for both tau roles") {
    const Grid g = make_grid(2, 16, 1.0);
    for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
        const State q = make_random_state(g, role, 20);
        for (std::uint64_t s = 0; s < 5; ++s) {
            const CotState z1 = make_random_cotstate(g, 100 + 10 * s);
            const CotState z2 = make_random_cotstate(g, 200 + 10 * s);
            CHECK(skew_residual(kModel, q, z1, z2) < 1e-10);
        }
    }
}

TEST_CASE("entropy role reduces the composed J to J_simple bitwise") {
    const Grid g = make_grid(2, 16, 1.0);
    const State q = make_random_state(g, TauRole::Entropy, 30);
    const CotState z = make_random_cotstate(g, 31);
    const StateTangent a = j_apply(kModel, q, z);
    const StateTangent b = j_simple_apply(q, z);
    CHECK(max_abs(a.pi - b.pi) == 0.0);
    CHECK(max_abs(a.F - b.F) == 0.0);
    CHECK(max_abs(a.Fp - b.Fp) == 0.0);
    CHECK(max_abs(a.tau - b.tau) == 0.0);
}

TEST_CASE("M_S* sends DS to the tau unit covector") {
    const Grid g = make_grid(2, 16, 1.0);
    for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
        const State q = make_random_state(g, role, 40);
        const MaterialEval m = eval_material(kModel, q);
        const CotState ds{TensorField(g, Kind::Vector), m.dFS, m.dFpS, m.dtauS};
        const CotState mapped = ms_star_apply(m, ds);
        CHECK(max_abs(mapped.v) == 0.0);
        CHECK(max_abs(mapped.xi_e) < 1e-15);
        CHECK(max_abs(mapped.xi_p) < 1e-15);
        CHECK(max_abs(mapped.kappa - constant_field(g, Kind::IntensiveScalar, 1.0)) == 0.0);
    }
}

TEST_CASE("ms_star and ms are algebraic adjoints") {
    const Grid g = make_grid(2, 16, 1.0);
    const State q = make_random_state(g, TauRole::InternalEnergy, 50);
    const MaterialEval m = eval_material(kModel, q);
    const CotState z = make_random_cotstate(g, 51);
    const StateTangent t = make_random_tangent(g, 52);
    const double lhs = pair(ms_star_apply(m, z), t);
    const double rhs = pair(z, ms_apply(m, t));
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
}

TEST_CASE("J is linear in the state") {
    const Grid g = make_grid(2, 16, 1.0);
    const State q1 = make_random_state(g, TauRole::Entropy, 60);
    const State q2 = make_random_state(g, TauRole::Entropy, 70);
    State qsum = q1;
    axpy(qsum, 1.0, StateTangent{q2.pi, q2.F, q2.Fp, q2.tau});
    const CotState z = make_random_cotstate(g, 61);
    const StateTangent sum = j_simple_apply(qsum, z);
    StateTangent parts = j_simple_apply(q1, z);
    axpy(parts, 1.0, j_simple_apply(q2, z));
    CHECK(norm(sum + (-1.0 * parts)) < 1e-13 * (1.0 + norm(sum)));
}

TEST_CASE("Jacobi residual of J_simple") {
    const MaterialModel model{};

    SUBCASE("vanishes on constant inputs over a homogeneous state") {
        const Grid g = make_grid(2, 16, 1.0);
        State q = make_state(g, TauRole::Entropy);
        q.F = identity_matrix_field(g, Kind::TwoPoint);
        q.Fp = identity_matrix_field(g, Kind::IntensiveMatrix);
        q.tau = constant_field(g, Kind::ExtensiveScalar, 0.3);
        const CotState z1{constant_field(g, Kind::Vector, 0.5), constant_field(g, Kind::TwoPoint, 1.0),
                          constant_field(g, Kind::IntensiveMatrix, -0.2), constant_field(g, Kind::IntensiveScalar, 2.0)};
        const CotState z2{constant_field(g, Kind::Vector, -1.0), constant_field(g, Kind::TwoPoint, 0.1),
                          constant_field(g, Kind::IntensiveMatrix, 0.7), constant_field(g, Kind::IntensiveScalar, 0.4)};
        const CotState z3{constant_field(g, Kind::Vector, 0.2), constant_field(g, Kind::TwoPoint, -0.6),
                          constant_field(g, Kind::IntensiveMatrix, 1.1), constant_field(g, Kind::IntensiveScalar, -0.8)};
        CHECK(jacobi_residual(q, z1, z2, z3) < 1e-13);
        (void)model;
    }
    SUBCASE("converges at second order for smooth random inputs") {
        double prev = 0.0;
        for (int n : {16, 32, 64}) {
            const Grid g = make_grid(2, n, 1.0);
            const State q = make_random_state(g, TauRole::Entropy, 80);
            const CotState z1 = make_random_cotstate(g, 181);
            const CotState z2 = make_random_cotstate(g, 281);
            const CotState z3 = make_random_cotstate(g, 381);
            const double r = jacobi_residual(q, z1, z2, z3);
            if (prev > 0.0) CHECK(prev / r > 3.5);
            prev = r;
        }
    }
    SUBCASE("is invariant under cyclic relabeling") {
        const Grid g = make_grid(2, 16, 1.0);
        const State q = make_random_state(g, TauRole::Entropy, 90);
        const CotState z1 = make_random_cotstate(g, 91);
        const CotState z2 = make_random_cotstate(g, 92);
        const CotState z3 = make_random_cotstate(g, 93);
        CHECK(jacobi_residual(q, z1, z2, z3) == doctest::Approx(jacobi_residual(q, z2, z3, z1)).epsilon(1e-12));
    }
}

TEST_CASE("N_E pair is an exact discrete adjoint pair") {
    const Grid g = make_grid(2, 16, 1.0);
    for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
        const State q = make_random_state(g, role, 100);
        const MaterialEval m = eval_material(kModel, q);
        const TensorField v = velocity_and_density(q, kModel.rho_ref).first;
        const CotState z = make_random_cotstate(g, 101);
        const EtaForces eta{fourier(g, Kind::OpVC, 102, 1.0), fourier(g, Kind::IntensiveMatrix, 103, 1.0),
                            fourier(g, Kind::IntensiveScalar, 104, 1.0)};
        // symmetrize eta_m
        EtaForces eta_s = eta;
        eta_s.eta_m = 0.5 * (eta.eta_m + transpose_field(eta.eta_m));
        const EtaForces nez = ne_star_apply(m, v, z);
        const double lhs = l2_inner(nez.eta_m, eta_s.eta_m) + l2_inner(nez.eta_p, eta_s.eta_p) +
                           l2_inner(nez.eta_t, eta_s.eta_t);
        const double rhs = pair(z, ne_apply(m, v, eta_s));
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("N_E* maps DE to the unit thermal force exactly") {
    const Grid g = make_grid(2, 16, 1.0);
    for (TauRole role : {TauRole::Entropy, TauRole::InternalEnergy}) {
        const State q = make_random_state(g, role, 110);
        const Differentials d = differentials(kModel, q);
        const EtaForces eta = ne_star_apply(kModel, q, d.dE);
        CHECK(max_abs(eta.eta_m) == 0.0);
        CHECK(max_abs(eta.eta_p) == 0.0);
        CHECK(max_abs(eta.eta_t - constant_field(g, Kind::IntensiveScalar, 1.0)) == 0.0);
    }
}
