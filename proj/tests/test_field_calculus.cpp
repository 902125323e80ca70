#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eulgen/diff_ops.hpp"
#include "eulgen/field.hpp"
#include "eulgen/presets.hpp"
#include "eulgen/tensor_algebra.hpp"

using namespace eulgen;

namespace {

TensorField random_field(const Grid& g, Kind k, std::uint64_t seed, int max_mode = 3) {
    return sample_field(g, k, PresetFourierRandom{seed, max_mode, 1.0});
}

}  // namespace

TEST_CASE("grid index arithmetic wraps periodically") {
    const Grid g = make_grid(2, 8, 1.0);
    CHECK(g.num_nodes() == 64);
    CHECK(g.stride(1) == 1);
    CHECK(g.stride(0) == 8);
    const std::size_t node = 7;  // (0, 7)
    CHECK(g.neighbor(node, 1, +1) == 0);
    CHECK(g.neighbor(node, 1, -1) == 6);
    CHECK(g.neighbor(node, 0, -1) == 7 + 7 * 8);
    const auto x = g.coords(7 + 2 * 8);
    CHECK(x[0] == doctest::Approx(2.0 / 8.0));
    CHECK(x[1] == doctest::Approx(7.0 / 8.0));
}

TEST_CASE("grid rejects invalid parameters") {
    CHECK_THROWS(make_grid(0, 8, 1.0));
    CHECK_THROWS(make_grid(4, 8, 1.0));
    CHECK_THROWS(make_grid(2, 6, 1.0));
    CHECK_THROWS(make_grid(2, 9, 1.0));
    CHECK_THROWS(make_grid(2, 8, 0.0));
}

TEST_CASE("centered differences converge at second order") {
    const double L = 2.0;
    double prev = 0.0;
    for (int n : {16, 32}) {
        const Grid g = make_grid(1, n, L);
        TensorField f(g, Kind::IntensiveScalar);
        TensorField exact(g, Kind::Covector);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) {
            const double x = g.coords(node)[0];
            const double w = 2.0 * std::numbers::pi / L;
            f.at(0, node) = std::sin(w * x);
            exact.at(0, node) = w * std::cos(w * x);
        }
        const double err = l2_norm(grad_scalar(f) - exact);
        if (prev > 0.0) CHECK(prev / err > 3.5);
        prev = err;
    }
}

TEST_CASE("discrete integration by parts is exact") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField f = random_field(g, Kind::IntensiveScalar, 11);
    const TensorField v = random_field(g, Kind::Vector, 12);
    const double lhs = l2_inner(grad_scalar(f), v);
    const double rhs = -l2_inner(f, div_vector(v));
    CHECK(std::abs(lhs - rhs) < 1e-13 * (1.0 + std::abs(lhs)));
}

TEST_CASE("conservative transport integrates to zero exactly") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField rho = random_field(g, Kind::ExtensiveScalar, 21);
    const TensorField v = random_field(g, Kind::Vector, 22);
    const double total = integrate(div_outer_with_velocity(rho, v));
    CHECK(std::abs(total) < 1e-13);
}

TEST_CASE("fourier_random names the same continuum field at every resolution") {
    const PresetFourierRandom p{77, 2, 1.0};
    const Grid coarse = make_grid(2, 16, 1.0);
    const Grid fine = make_grid(2, 32, 1.0);
    const TensorField a = sample_field(coarse, Kind::Vector, p);
    const TensorField b = sample_field(fine, Kind::Vector, p);
    for (std::size_t node = 0; node < coarse.num_nodes(); ++node) {
        const auto ix = coarse.indices(node);
        const std::size_t fnode = static_cast<std::size_t>(2 * ix[0]) * fine.stride(0) +
                                  static_cast<std::size_t>(2 * ix[1]) * fine.stride(1);
        for (int c = 0; c < 2; ++c) CHECK(a.at(c, node) == doctest::Approx(b.at(c, fnode)).epsilon(1e-12));
    }
}

TEST_CASE("pointwise algebra identities") {
    const Grid g = make_grid(3, 8, 1.0);
    const TensorField m = identity_matrix_field(g, Kind::TwoPoint) + random_field(g, Kind::TwoPoint, 31, 1);

    SUBCASE("inverse") {
        const TensorField prod = matmul_pointwise(m, inverse_field(m), Kind::OpVV);
        const TensorField eye = identity_matrix_field(g, Kind::OpVV);
        CHECK(max_abs(prod - eye) < 1e-12);
    }
    SUBCASE("transpose is an involution") {
        CHECK(max_abs(transpose_field(transpose_field(m)) - m) == 0.0);
    }
    SUBCASE("trace of a tensor product is the dot product") {
        const TensorField a = random_field(g, Kind::Vector, 32);
        const TensorField b = random_field(g, Kind::Vector, 33);
        const TensorField tr = contract_trace(tensor_product(a, b));
        const TensorField dot = dot_product(a, b);
        CHECK(max_abs(tr - dot) < 1e-14);
    }
    SUBCASE("trace rejects same-variance operators") {
        CHECK_THROWS(contract_trace(m.retagged(Kind::OpVC)));
        CHECK_THROWS(contract_trace(m.retagged(Kind::OpCV)));
        CHECK_NOTHROW(contract_trace(m.retagged(Kind::OpVV)));
    }
    SUBCASE("determinant of identity") {
        const TensorField eye = identity_matrix_field(g, Kind::OpVV);
        CHECK(min_determinant(eye) == 1.0);
    }
}

TEST_CASE("strain rate is the symmetric velocity gradient") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField v = random_field(g, Kind::Vector, 41);
    const TensorField e = strain_rate(v);
    CHECK(e.kind() == Kind::OpVC);
    CHECK(max_asymmetry(e) == 0.0);
    const TensorField jac = jacobian_of_vector(v);
    const TensorField sym = 0.5 * (jac + transpose_field(jac));
    CHECK(max_abs(e - sym.retagged(Kind::OpVC)) < 1e-14);
}

TEST_CASE("gaussian bump preset is smooth and periodic") {
    const Grid g = make_grid(2, 24, 1.0);
    PresetGaussianBump p;
    p.center = {0.5, 0.5, 0.0};
    p.width = 0.12;
    p.amplitude = {1.0};
    const TensorField f = sample_field(g, Kind::IntensiveScalar, p);
    CHECK(f.all_finite());
    CHECK(max_abs(f) > 0.5);
    // the periodicized bump is symmetric about its center, so nodes mirrored
    // through x = 0.5 agree across the wrap seam
    const std::size_t a = 1 * g.stride(0) + 12 * g.stride(1);
    const std::size_t b = 23 * g.stride(0) + 12 * g.stride(1);
    CHECK(f.at(0, a) == doctest::Approx(f.at(0, b)).epsilon(1e-12));
}
