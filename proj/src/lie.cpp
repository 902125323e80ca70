#include "eulgen/lie.hpp"

#include <stdexcept>

#include "eulgen/diff_ops.hpp"
#include "eulgen/tensor_algebra.hpp"

namespace eulgen {

namespace {

TensorField& sub_inplace(TensorField& y, const TensorField& x) { return axpy(y, -1.0, x); }
TensorField& add_inplace(TensorField& y, const TensorField& x) { return axpy(y, 1.0, x); }

}  // namespace

TensorField lie_derivative(const TensorField& v, const TensorField& a) { return lie_derivative(v, a, a.kind()); }

TensorField lie_derivative(const TensorField& v, const TensorField& a, Kind kind) {
    require_same_grid(v, a);
    require_kind(v, Kind::Vector, "lie_derivative");
    if (kind_components(kind, a.grid().dim()) != a.components())
        throw std::invalid_argument("lie_derivative: override kind has wrong component count");

    switch (kind) {
        case Kind::IntensiveScalar:
        case Kind::IntensiveMatrix:
            return advect(v, a);
        case Kind::ExtensiveScalar:
        case Kind::RdExtensive:
            return div_outer_with_velocity(a, v);
        default: break;
    }

    const TensorField jac = jacobian_of_vector(v);  // (grad v)_{ij} = d_j v_i

    switch (kind) {
        case Kind::Vector: {
            TensorField out = advect(v, a);
            return sub_inplace(out, apply_matrix_to_vector(jac, a, kind));
        }
        case Kind::Covector: {
            TensorField out = advect(v, a);
            return add_inplace(out, apply_matrix_to_vector(transpose_field(jac), a, kind));
        }
        case Kind::Momentum: {
            TensorField out = div_outer_with_velocity(a, v);
            return add_inplace(out, apply_matrix_to_vector(transpose_field(jac), a, kind));
        }
        case Kind::OpVV: {
            TensorField out = advect(v, a);
            add_inplace(out, matmul_pointwise(a, jac, kind));
            return sub_inplace(out, matmul_pointwise(jac, a, kind));
        }
        case Kind::OpVC: {
            TensorField out = advect(v, a);
            add_inplace(out, matmul_pointwise(a, jac, kind));
            return add_inplace(out, matmul_pointwise(transpose_field(jac), a, kind));
        }
        case Kind::OpCC: {
            TensorField out = advect(v, a);
            add_inplace(out, matmul_pointwise(transpose_field(jac), a, kind));
            return sub_inplace(out, matmul_pointwise(a, transpose_field(jac), kind));
        }
        case Kind::OpCV: {
            TensorField out = advect(v, a);
            sub_inplace(out, matmul_pointwise(jac, a, kind));
            return sub_inplace(out, matmul_pointwise(a, transpose_field(jac), kind));
        }
        case Kind::TwoPoint: {
            TensorField out = advect(v, a);
            return sub_inplace(out, matmul_pointwise(jac, a, kind));
        }
        default:
            throw std::invalid_argument("lie_derivative: kind not in dispatch table");
    }
}

TensorField stress_rate(const TensorField& v, const TensorField& t, StressRate which) {
    require_same_grid(v, t);
    require_kind(v, Kind::Vector, "stress_rate");
    require_kind(t, Kind::OpCV, "stress_rate");
    TensorField out = lie_derivative(v, t, Kind::OpCV);
    if (which == StressRate::Truesdell) add_inplace(out, scale_by_scalar_field(div_vector(v), t));
    return out;
}

TensorField commutator(const TensorField& v, const TensorField& w) {
    require_kind(w, Kind::Vector, "commutator");
    return lie_derivative(v, w, Kind::Vector);
}

TensorField lie_general_rank2(const TensorField& v, const TensorField& a, int i0, int j0) {
    require_same_grid(v, a);
    require_kind(v, Kind::Vector, "lie_general_rank2");
    if (i0 < 0 || j0 < 0 || i0 + j0 > 2) throw std::invalid_argument("lie_general_rank2: rank must be <= 2");
    const int d = a.grid().dim();
    const int rank = i0 + j0;
    const int want = rank == 0 ? 1 : (rank == 1 ? d : d * d);
    if (a.components() != want) throw std::invalid_argument("lie_general_rank2: storage does not match signature");

    TensorField out = advect(v, a);
    if (rank == 0) return out;

    const TensorField jac = jacobian_of_vector(v);
    if (rank == 1) {
        if (i0 == 1)
            add_inplace(out, apply_matrix_to_vector(transpose_field(jac), a, a.kind()));
        else
            sub_inplace(out, apply_matrix_to_vector(jac, a, a.kind()));
        return out;
    }

    // rank 2: slot order is (vector slots..., covector slots...).
    // Vector slot at position 0: + (grad v)^T M ; at position 1: + M (grad v).
    // Covector slot at position 0: - (grad v) M ; at position 1: - M (grad v)^T.
    int pos = 0;
    for (int s = 0; s < i0; ++s, ++pos) {
        if (pos == 0)
            add_inplace(out, matmul_pointwise(transpose_field(jac), a, a.kind()));
        else
            add_inplace(out, matmul_pointwise(a, jac, a.kind()));
    }
    for (int s = 0; s < j0; ++s, ++pos) {
        if (pos == 0)
            sub_inplace(out, matmul_pointwise(jac, a, a.kind()));
        else
            sub_inplace(out, matmul_pointwise(a, transpose_field(jac), a.kind()));
    }
    return out;
}

TensorField cartan_residual(const TensorField& v, const TensorField& beta) {
    require_same_grid(v, beta);
    require_kind(v, Kind::Vector, "cartan_residual");
    require_kind(beta, Kind::Covector, "cartan_residual");
    const Grid& g = v.grid();
    const int d = g.dim();

    TensorField out = lie_derivative(v, beta, Kind::Covector);

    // (d beta)_{ij} = d_i beta_j - d_j beta_i ; (i_v d beta)_j = sum_i v_i (d beta)_{ij}
    TensorField dbeta(g, Kind::OpVC);
    for (int i = 0; i < d; ++i) {
        const TensorField di = partial(beta, i);
        for (int j = 0; j < d; ++j) {
            const double* a = di.comp(j);
            double* up = dbeta.comp(i * d + j);
            double* lo = dbeta.comp(j * d + i);
            for (std::size_t node = 0; node < g.num_nodes(); ++node) {
                up[node] += a[node];
                lo[node] -= a[node];
            }
        }
    }
    TensorField ivdb(g, Kind::Covector);
    for (int j = 0; j < d; ++j) {
        double* dst = ivdb.comp(j);
        for (int i = 0; i < d; ++i) {
            const double* vi = v.comp(i);
            const double* m = dbeta.comp(i * d + j);
            for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += vi[node] * m[node];
        }
    }
    sub_inplace(out, ivdb);

    const TensorField ivbeta = dot_product(beta, v);
    sub_inplace(out, grad_scalar(ivbeta));
    return out;
}

}  // namespace eulgen
