#pragma once

#include <cstddef>
#include <functional>

namespace eulgen {

/// Number of worker threads for node-parallel kernels. Reads EULGEN_THREADS
/// once (capped by hardware concurrency); defaults to hardware concurrency.
int kernel_threads();

/// Static-partition parallel loop over [0, count). The partition depends only
/// on `count` and the thread count, so pointwise kernels stay deterministic.
/// Falls back to a serial loop for small counts or a single thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

/// Small dense d x d matrix helpers, row-major, d <= 3.
namespace matd {

inline double det(const double* m, int d) {
    if (d == 1) return m[0];
    if (d == 2) return m[0] * m[3] - m[1] * m[2];
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

/// Inverse into `out`; returns the determinant.
inline double inverse(const double* m, int d, double* out) {
    const double dt = det(m, d);
    if (d == 1) {
        out[0] = 1.0 / dt;
    } else if (d == 2) {
        const double inv = 1.0 / dt;
        out[0] = m[3] * inv;
        out[1] = -m[1] * inv;
        out[2] = -m[2] * inv;
        out[3] = m[0] * inv;
    } else {
        const double inv = 1.0 / dt;
        out[0] = (m[4] * m[8] - m[5] * m[7]) * inv;
        out[1] = (m[2] * m[7] - m[1] * m[8]) * inv;
        out[2] = (m[1] * m[5] - m[2] * m[4]) * inv;
        out[3] = (m[5] * m[6] - m[3] * m[8]) * inv;
        out[4] = (m[0] * m[8] - m[2] * m[6]) * inv;
        out[5] = (m[2] * m[3] - m[0] * m[5]) * inv;
        out[6] = (m[3] * m[7] - m[4] * m[6]) * inv;
        out[7] = (m[1] * m[6] - m[0] * m[7]) * inv;
        out[8] = (m[0] * m[4] - m[1] * m[3]) * inv;
    }
    return dt;
}

inline void matmul(const double* a, const double* b, int d, double* out) {
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double s = 0.0;
            for (int k = 0; k < d; ++k) s += a[i * d + k] * b[k * d + j];
            out[i * d + j] = s;
        }
}

inline void transpose(const double* a, int d, double* out) {
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i * d + j] = a[j * d + i];
}

inline void matvec(const double* a, const double* x, int d, double* out) {
    for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += a[i * d + j] * x[j];
        out[i] = s;
    }
}

inline double frobenius2(const double* a, int d) {
    double s = 0.0;
    for (int i = 0; i < d * d; ++i) s += a[i] * a[i];
    return s;
}

inline double ddot(const double* a, const double* b, int d) {
    double s = 0.0;
    for (int i = 0; i < d * d; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace matd
}  // namespace eulgen
