#include <cmath>

#include "doctest.h"
#include "eulgen/diff_ops.hpp"
#include "eulgen/field.hpp"
#include "eulgen/flow.hpp"
#include "eulgen/lie.hpp"
#include "eulgen/presets.hpp"
#include "eulgen/tensor_algebra.hpp"

using namespace eulgen;

namespace {

constexpr int kMaxMode = 2;

TensorField random_field(const Grid& g, Kind k, std::uint64_t seed) {
    return sample_field(g, k, PresetFourierRandom{seed, kMaxMode, 1.0});
}

double rel_err(const TensorField& got, const TensorField& want) {
    return l2_norm(got - want) / l2_norm(want);
}

}  // namespace

TEST_CASE("commutator is antisymmetric bitwise") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField v = random_field(g, Kind::Vector, 1);
    const TensorField w = random_field(g, Kind::Vector, 2);
    const TensorField vw = commutator(v, w);
    const TensorField wv = commutator(w, v);
    CHECK(max_abs(vw + wv) == 0.0);
}

TEST_CASE("specialized Lie formulas agree bitwise with the general multilinear formula") {
    const Grid g = make_grid(2, 16, 1.0);
    const int d = g.dim();
    const TensorField v = random_field(g, Kind::Vector, 3);

    SUBCASE("scalar, (0,0)") {
        const TensorField f = random_field(g, Kind::IntensiveScalar, 4);
        CHECK(max_abs(lie_derivative(v, f) - lie_general_rank2(v, f, 0, 0)) == 0.0);
    }
    SUBCASE("vector, (0,1)") {
        const TensorField w = random_field(g, Kind::Vector, 5);
        CHECK(max_abs(lie_derivative(v, w) - lie_general_rank2(v, w, 0, 1)) == 0.0);
    }
    SUBCASE("covector, (1,0)") {
        const TensorField b = random_field(g, Kind::Covector, 6);
        CHECK(max_abs(lie_derivative(v, b) - lie_general_rank2(v, b, 1, 0)) == 0.0);
    }
    SUBCASE("OpCC, (1,1) with M = D") {
        const TensorField dd = random_field(g, Kind::OpCC, 7);
        CHECK(max_abs(lie_derivative(v, dd) - lie_general_rank2(v, dd, 1, 1)) == 0.0);
    }
    SUBCASE("OpCV, (0,2) with M = E") {
        const TensorField e = random_field(g, Kind::OpCV, 8);
        CHECK(max_abs(lie_derivative(v, e) - lie_general_rank2(v, e, 0, 2)) == 0.0);
    }
    SUBCASE("OpVV, (1,1) with M = B^T") {
        const TensorField b = random_field(g, Kind::OpVV, 9);
        const TensorField lhs = transpose_field(lie_derivative(v, b), Kind::OpCC);
        const TensorField rhs = lie_general_rank2(v, transpose_field(b, Kind::OpCC), 1, 1);
        CHECK(max_abs(lhs - rhs) == 0.0);
        (void)d;
    }
    SUBCASE("OpVC, (2,0) with M = C^T") {
        const TensorField c = random_field(g, Kind::OpVC, 10);
        const TensorField lhs = transpose_field(lie_derivative(v, c), Kind::OpVC);
        const TensorField rhs = lie_general_rank2(v, transpose_field(c, Kind::OpVC), 2, 0);
        CHECK(max_abs(lhs - rhs) == 0.0);
    }
}

TEST_CASE("Cartan residual shrinks at second order") {
    double prev = 0.0;
    for (int n : {16, 32}) {
        const Grid g = make_grid(2, n, 1.0);
        const TensorField v = random_field(g, Kind::Vector, 11);
        const TensorField beta = random_field(g, Kind::Covector, 12);
        const double err = l2_norm(cartan_residual(v, beta));
        if (prev > 0.0) CHECK(prev / err > 3.5);
        prev = err;
    }
}

TEST_CASE("stress rates") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField v = random_field(g, Kind::Vector, 13);
    const TensorField t = random_field(g, Kind::OpCV, 14);

    SUBCASE("Oldroyd rate is the intensive OpCV Lie derivative") {
        CHECK(max_abs(stress_rate(v, t, StressRate::Oldroyd) - lie_derivative(v, t)) == 0.0);
    }
    SUBCASE("Truesdell rate adds the div v density term") {
        const TensorField diff = stress_rate(v, t, StressRate::Truesdell) - stress_rate(v, t, StressRate::Oldroyd);
        const TensorField expect = scale_by_scalar_field(div_vector(v), t);
        CHECK(max_abs(diff - expect) < 1e-13);
    }
    SUBCASE("stress rates reject non-OpCV tags") {
        CHECK_THROWS(stress_rate(v, t.retagged(Kind::OpVV), StressRate::Oldroyd));
    }
}

TEST_CASE("twice the strain rate is the Lie derivative of the identity OpVC metric") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField v = random_field(g, Kind::Vector, 15);
    const TensorField eye = identity_matrix_field(g, Kind::OpVC);
    const TensorField lie_eye = lie_derivative(v, eye);
    const TensorField two_e = 2.0 * strain_rate(v);
    CHECK(max_abs(lie_eye - two_e) == 0.0);
}

TEST_CASE("Lie derivatives match the flow-map oracle for every kind") {
    const Grid g = make_grid(2, 32, 1.0);
    const TensorField v = random_field(g, Kind::Vector, 16);
    const FlowOracle oracle(v, kMaxMode);

    int seed = 100;
    for (int ki = 0; ki < kNumKinds; ++ki) {
        const Kind kind = static_cast<Kind>(ki);
        CAPTURE(kind_name(kind));
        const TensorField a = random_field(g, kind, static_cast<std::uint64_t>(seed++));
        const TensorField got = lie_derivative(v, a);
        const TensorField want = oracle.lie(a, kMaxMode);
        CHECK(rel_err(got, want) < 5e-2);
    }
}

TEST_CASE("flow maps compose and stay orientation-preserving") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField v = random_field(g, Kind::Vector, 17);
    const TrigInterpolant vi(v, kMaxMode);
    const auto start = grid_points(g);

    const double s = 0.05, t = 0.03;
    const Diffeo a = flow_map(vi, start, g.dim(), s, 16);
    const Diffeo b = flow_map(vi, a.psi, g.dim(), t, 16);
    const Diffeo ab = compose_flow(b, a);
    const Diffeo direct = flow_map(vi, start, g.dim(), s + t, 32);

    CHECK(a.min_det() > 0.0);
    CHECK(direct.min_det() > 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < ab.psi.size(); ++i) worst = std::max(worst, std::abs(ab.psi[i] - direct.psi[i]));
    for (std::size_t i = 0; i < ab.dpsi.size(); ++i) worst = std::max(worst, std::abs(ab.dpsi[i] - direct.dpsi[i]));
    CHECK(worst < 1e-6);
}

TEST_CASE("pullback then pushforward is the identity") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField v = random_field(g, Kind::Vector, 18);
    const TrigInterpolant vi(v, kMaxMode);
    const auto start = grid_points(g);
    const Diffeo fwd = flow_map(vi, start, g.dim(), 0.02, 16);
    const Diffeo bwd = flow_map(vi, start, g.dim(), -0.02, 16);

    for (Kind kind : {Kind::ExtensiveScalar, Kind::Covector, Kind::Momentum, Kind::OpVC, Kind::TwoPoint}) {
        CAPTURE(kind_name(kind));
        const TensorField a = random_field(g, kind, 19);
        const TrigInterpolant ai(a, kMaxMode);
        const TensorField pulled = pullback(g, kind, ai, fwd);
        const TrigInterpolant pi(pulled, 6);
        const TensorField back = pushforward(g, kind, pi, bwd);
        CHECK(rel_err(back, a) < 5e-3);
    }
}
