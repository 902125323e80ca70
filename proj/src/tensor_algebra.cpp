#include "eulgen/tensor_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eulgen/util.hpp"

namespace eulgen {

namespace {
void require_matrix(const TensorField& m, const char* what) {
    if (!kind_is_matrix_like(m.kind())) throw std::invalid_argument(std::string(what) + ": matrix kinds only");
}
void require_vector(const TensorField& v, const char* what) {
    if (!kind_is_vector_like(v.kind())) throw std::invalid_argument(std::string(what) + ": d-component kinds only");
}
void require_scalar(const TensorField& s, const char* what) {
    if (!kind_is_scalar(s.kind())) throw std::invalid_argument(std::string(what) + ": scalar kinds only");
}
}  // namespace

TensorField tensor_product(const TensorField& a, const TensorField& b, Kind out_kind) {
    require_same_grid(a, b);
    require_vector(a, "tensor_product");
    require_vector(b, "tensor_product");
    const Grid& g = a.grid();
    const int d = g.dim();
    TensorField out(g, out_kind);
    if (!kind_is_matrix_like(out_kind)) throw std::invalid_argument("tensor_product: out kind must be matrix-like");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double* ai = a.comp(i);
            const double* bj = b.comp(j);
            double* dst = out.comp(i * d + j);
            for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] = ai[node] * bj[node];
        }
    return out;
}

TensorField contract_trace(const TensorField& m, Kind out_kind) {
    require_matrix(m, "contract_trace");
    // contraction pairs a vector slot with a covector slot; OpVC/OpCV carry
    // two slots of the same variance and cannot be traced
    if (m.kind() == Kind::OpVC || m.kind() == Kind::OpCV)
        throw std::invalid_argument("contract_trace: cannot contract two slots of equal variance (" +
                                    kind_name(m.kind()) + ")");
    const Grid& g = m.grid();
    const int d = g.dim();
    TensorField out(g, out_kind);
    double* dst = out.comp(0);
    for (int k = 0; k < d; ++k) {
        const double* mk = m.comp(k * d + k);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += mk[node];
    }
    return out;
}

TensorField interior_product(const TensorField& w, const TensorField& a) {
    require_same_grid(w, a);
    require_vector(w, "interior_product");
    const Grid& g = a.grid();
    const int d = g.dim();
    switch (a.kind()) {
        case Kind::Covector: {
            TensorField out(g, Kind::IntensiveScalar);
            double* dst = out.comp(0);
            for (int k = 0; k < d; ++k) {
                const double* ak = a.comp(k);
                const double* wk = w.comp(k);
                for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += ak[node] * wk[node];
            }
            return out;
        }
        case Kind::OpVV:
            return apply_matrix_to_vector(a, w, Kind::Vector);
        case Kind::OpVC:
            return apply_matrix_to_vector(a, w, Kind::Covector);
        default:
            throw std::invalid_argument("interior_product: " + kind_name(a.kind()) + " has no leading vector slot");
    }
}

TensorField transpose_field(const TensorField& m) { return transpose_field(m, m.kind()); }

TensorField transpose_field(const TensorField& m, Kind out_kind) {
    require_matrix(m, "transpose");
    const Grid& g = m.grid();
    const int d = g.dim();
    TensorField out(g, out_kind);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double* src = m.comp(j * d + i);
            double* dst = out.comp(i * d + j);
            std::copy(src, src + g.num_nodes(), dst);
        }
    return out;
}

TensorField matmul_pointwise(const TensorField& a, const TensorField& b, Kind out_kind) {
    require_same_grid(a, b);
    require_matrix(a, "matmul_pointwise");
    require_matrix(b, "matmul_pointwise");
    const Grid& g = a.grid();
    const int d = g.dim();
    TensorField out(g, out_kind);
    parallel_for(g.num_nodes(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t node = lo; node < hi; ++node)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    double s = 0.0;
                    for (int k = 0; k < d; ++k) s += a.at(i, k, node) * b.at(k, j, node);
                    out.at(i, j, node) = s;
                }
    });
    return out;
}

TensorField apply_matrix_to_vector(const TensorField& m, const TensorField& x, Kind out_kind) {
    require_same_grid(m, x);
    require_matrix(m, "apply_matrix_to_vector");
    require_vector(x, "apply_matrix_to_vector");
    const Grid& g = m.grid();
    const int d = g.dim();
    TensorField out(g, out_kind);
    for (int i = 0; i < d; ++i) {
        double* dst = out.comp(i);
        for (int j = 0; j < d; ++j) {
            const double* mij = m.comp(i * d + j);
            const double* xj = x.comp(j);
            for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += mij[node] * xj[node];
        }
    }
    return out;
}

TensorField scale_by_scalar_field(const TensorField& s, const TensorField& a) {
    require_same_grid(s, a);
    require_scalar(s, "scale_by_scalar_field");
    const Grid& g = a.grid();
    TensorField out(g, a.kind());
    const double* sc = s.comp(0);
    for (int c = 0; c < a.components(); ++c) {
        const double* src = a.comp(c);
        double* dst = out.comp(c);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] = sc[node] * src[node];
    }
    return out;
}

TensorField double_dot(const TensorField& a, const TensorField& b, Kind out_kind) {
    require_same_grid(a, b);
    require_matrix(a, "double_dot");
    require_matrix(b, "double_dot");
    const Grid& g = a.grid();
    TensorField out(g, out_kind);
    double* dst = out.comp(0);
    for (int c = 0; c < a.components(); ++c) {
        const double* ac = a.comp(c);
        const double* bc = b.comp(c);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += ac[node] * bc[node];
    }
    return out;
}

TensorField dot_product(const TensorField& a, const TensorField& b, Kind out_kind) {
    require_same_grid(a, b);
    require_vector(a, "dot_product");
    require_vector(b, "dot_product");
    const Grid& g = a.grid();
    TensorField out(g, out_kind);
    double* dst = out.comp(0);
    for (int c = 0; c < a.components(); ++c) {
        const double* ac = a.comp(c);
        const double* bc = b.comp(c);
        for (std::size_t node = 0; node < g.num_nodes(); ++node) dst[node] += ac[node] * bc[node];
    }
    return out;
}

TensorField determinant_field(const TensorField& m) {
    require_matrix(m, "determinant_field");
    const Grid& g = m.grid();
    const int d = g.dim();
    TensorField out(g, Kind::IntensiveScalar);
    double* dst = out.comp(0);
    parallel_for(g.num_nodes(), [&](std::size_t lo, std::size_t hi) {
        double buf[9];
        for (std::size_t node = lo; node < hi; ++node) {
            for (int c = 0; c < d * d; ++c) buf[c] = m.at(c, node);
            dst[node] = matd::det(buf, d);
        }
    });
    return out;
}

TensorField inverse_field(const TensorField& m) {
    require_matrix(m, "inverse_field");
    const Grid& g = m.grid();
    const int d = g.dim();
    TensorField out(g, m.kind());
    parallel_for(g.num_nodes(), [&](std::size_t lo, std::size_t hi) {
        double buf[9], inv[9];
        for (std::size_t node = lo; node < hi; ++node) {
            for (int c = 0; c < d * d; ++c) buf[c] = m.at(c, node);
            const double dt = matd::inverse(buf, d, inv);
            if (dt == 0.0 || !std::isfinite(dt)) throw std::domain_error("inverse_field: singular matrix at a node");
            for (int c = 0; c < d * d; ++c) out.at(c, node) = inv[c];
        }
    });
    return out;
}

TensorField reciprocal(const TensorField& s) {
    require_scalar(s, "reciprocal");
    TensorField out(s.grid(), s.kind());
    const double* src = s.comp(0);
    double* dst = out.comp(0);
    for (std::size_t node = 0; node < s.num_nodes(); ++node) dst[node] = 1.0 / src[node];
    return out;
}

TensorField scalar_multiply(const TensorField& a, const TensorField& b) {
    require_scalar(a, "scalar_multiply");
    return scale_by_scalar_field(a, b);
}

TensorField scalar_divide(const TensorField& a, const TensorField& b) {
    require_same_grid(a, b);
    require_scalar(a, "scalar_divide");
    require_scalar(b, "scalar_divide");
    TensorField out(a.grid(), a.kind());
    const double* num = a.comp(0);
    const double* den = b.comp(0);
    double* dst = out.comp(0);
    for (std::size_t node = 0; node < a.num_nodes(); ++node) dst[node] = num[node] / den[node];
    return out;
}

double max_asymmetry(const TensorField& m) {
    require_matrix(m, "max_asymmetry");
    const Grid& g = m.grid();
    const int d = g.dim();
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const double* a = m.comp(i * d + j);
            const double* b = m.comp(j * d + i);
            for (std::size_t node = 0; node < g.num_nodes(); ++node)
                worst = std::max(worst, std::abs(a[node] - b[node]));
        }
    return worst;
}

double min_determinant(const TensorField& m) {
    const TensorField dets = determinant_field(m);
    double worst = dets.comp(0)[0];
    for (std::size_t node = 0; node < m.num_nodes(); ++node) worst = std::min(worst, dets.comp(0)[node]);
    return worst;
}

}  // namespace eulgen
