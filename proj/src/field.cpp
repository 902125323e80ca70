#include "eulgen/field.hpp"

#include <algorithm>
#include <cmath>

namespace eulgen {

namespace {
void require_combinable(const TensorField& a, const TensorField& b) {
    require_same_grid(a, b);
    if (a.components() != b.components())
        throw std::invalid_argument("fields have different component counts");
}
}  // namespace

TensorField operator+(const TensorField& a, const TensorField& b) {
    require_combinable(a, b);
    TensorField out = a;
    auto& y = out.data();
    const auto& x = b.data();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += x[i];
    return out;
}

TensorField operator-(const TensorField& a, const TensorField& b) {
    require_combinable(a, b);
    TensorField out = a;
    auto& y = out.data();
    const auto& x = b.data();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= x[i];
    return out;
}

TensorField operator*(double s, const TensorField& a) {
    TensorField out = a;
    for (double& v : out.data()) v *= s;
    return out;
}

TensorField& axpy(TensorField& y, double alpha, const TensorField& x) {
    require_combinable(y, x);
    auto& yd = y.data();
    const auto& xd = x.data();
    for (std::size_t i = 0; i < yd.size(); ++i) yd[i] += alpha * xd[i];
    return y;
}

double integrate(const TensorField& f) {
    if (!kind_is_scalar(f.kind())) throw std::invalid_argument("integrate: scalar kinds only");
    double s = 0.0;
    for (double v : f.data()) s += v;
    return s * f.grid().cell_volume();
}

double l2_inner(const TensorField& a, const TensorField& b) {
    require_combinable(a, b);
    double s = 0.0;
    const auto& x = a.data();
    const auto& y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s * a.grid().cell_volume();
}

double l2_norm(const TensorField& f) { return std::sqrt(l2_inner(f, f)); }

double max_abs(const TensorField& f) {
    double m = 0.0;
    for (double v : f.data()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace eulgen
