#include "eulgen/diff_ops.hpp"

#include <stdexcept>

#include "eulgen/util.hpp"

namespace eulgen {

namespace {

/// dst[node] += scale * (src[node+axis] - src[node-axis]) / (2h)
void add_centered_diff(const Grid& g, const double* src, int axis, double scale, double* dst) {
    const double w = scale / (2.0 * g.spacing());
    parallel_for(g.num_nodes(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t node = lo; node < hi; ++node) {
            const std::size_t p = g.neighbor(node, axis, +1);
            const std::size_t m = g.neighbor(node, axis, -1);
            dst[node] += w * (src[p] - src[m]);
        }
    });
}

}  // namespace

TensorField partial(const TensorField& a, int axis) {
    const Grid& g = a.grid();
    if (axis < 0 || axis >= g.dim()) throw std::invalid_argument("partial: axis out of range");
    TensorField out(g, a.kind());
    for (int c = 0; c < a.components(); ++c) add_centered_diff(g, a.comp(c), axis, 1.0, out.comp(c));
    return out;
}

TensorField grad_scalar(const TensorField& f) {
    if (!kind_is_scalar(f.kind())) throw std::invalid_argument("grad_scalar: scalar kinds only");
    const Grid& g = f.grid();
    TensorField out(g, Kind::Covector);
    for (int a = 0; a < g.dim(); ++a) add_centered_diff(g, f.comp(0), a, 1.0, out.comp(a));
    return out;
}

TensorField div_vector(const TensorField& v, Kind out_kind) {
    if (!kind_is_vector_like(v.kind())) throw std::invalid_argument("div_vector: d-component kinds only");
    const Grid& g = v.grid();
    TensorField out(g, out_kind);
    for (int a = 0; a < g.dim(); ++a) add_centered_diff(g, v.comp(a), a, 1.0, out.comp(0));
    return out;
}

TensorField jacobian_of_vector(const TensorField& v) {
    if (!kind_is_vector_like(v.kind())) throw std::invalid_argument("jacobian_of_vector: d-component kinds only");
    const Grid& g = v.grid();
    const int d = g.dim();
    TensorField out(g, Kind::OpVV);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) add_centered_diff(g, v.comp(i), j, 1.0, out.comp(i * d + j));
    return out;
}

TensorField div_matrix_rows(const TensorField& t, Kind out_kind) {
    if (!kind_is_matrix_like(t.kind())) throw std::invalid_argument("div_matrix_rows: matrix kinds only");
    const Grid& g = t.grid();
    const int d = g.dim();
    TensorField out(g, out_kind);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) add_centered_diff(g, t.comp(i * d + j), j, 1.0, out.comp(i));
    return out;
}

TensorField strain_rate(const TensorField& v) {
    require_kind(v, Kind::Vector, "strain_rate");
    const Grid& g = v.grid();
    const int d = g.dim();
    const TensorField jac = jacobian_of_vector(v);
    TensorField out(g, Kind::OpVC);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double* a = jac.comp(i * d + j);
            const double* b = jac.comp(j * d + i);
            double* dst = out.comp(i * d + j);
            for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] = 0.5 * (a[node] + b[node]);
        }
    return out;
}

TensorField advect(const TensorField& v, const TensorField& a) {
    require_same_grid(v, a);
    if (!kind_is_vector_like(v.kind())) throw std::invalid_argument("advect: v must be d-component");
    const Grid& g = a.grid();
    TensorField out(g, a.kind());
    // out_c = sum_k v_k * d_k a_c
    for (int c = 0; c < a.components(); ++c) {
        double* dst = out.comp(c);
        const double* src = a.comp(c);
        for (int k = 0; k < g.dim(); ++k) {
            const double* vel = v.comp(k);
            const double w = 1.0 / (2.0 * g.spacing());
            parallel_for(g.num_nodes(), [&](std::size_t lo, std::size_t hi) {
                for (std::size_t node = lo; node < hi; ++node) {
                    const std::size_t p = g.neighbor(node, k, +1);
                    const std::size_t m = g.neighbor(node, k, -1);
                    dst[node] += vel[node] * w * (src[p] - src[m]);
                }
            });
        }
    }
    return out;
}

TensorField div_outer_with_velocity(const TensorField& a, const TensorField& v) {
    require_same_grid(v, a);
    if (!kind_is_vector_like(v.kind())) throw std::invalid_argument("div_outer_with_velocity: v must be d-component");
    const Grid& g = a.grid();
    TensorField out(g, a.kind());
    std::vector<double> product(g.num_nodes());
    for (int c = 0; c < a.components(); ++c) {
        const double* src = a.comp(c);
        for (int k = 0; k < g.dim(); ++k) {
            const double* vel = v.comp(k);
            for (std::size_t node = 0; node < g.num_nodes(); ++node) product[node] = src[node] * vel[node];
            add_centered_diff(g, product.data(), k, 1.0, out.comp(c));
        }
    }
    return out;
}

}  // namespace eulgen
