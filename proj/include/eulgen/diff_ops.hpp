#pragma once

#include "eulgen/field.hpp"

namespace eulgen {

/// Centered second-order difference along `axis` with periodic wraparound,
/// applied to every component. The stencil matrix is exactly skew, which is
/// what makes discrete integration by parts exact (up to rounding).
TensorField partial(const TensorField& a, int axis);

/// grad of a scalar field: Covector with components d_i f.
TensorField grad_scalar(const TensorField& f);

/// divergence of a d-component field: scalar sum_k d_k v_k.
TensorField div_vector(const TensorField& v, Kind out_kind = Kind::IntensiveScalar);

/// velocity gradient: (grad v)_{ij} = d_j v_i, tagged OpVV.
TensorField jacobian_of_vector(const TensorField& v);

/// row-wise divergence of a matrix field: out_i = sum_j d_j T_{ij}.
TensorField div_matrix_rows(const TensorField& t, Kind out_kind = Kind::Covector);

/// D(v) = (grad v + (grad v)^T)/2, exactly symmetric, tagged OpVC.
TensorField strain_rate(const TensorField& v);

/// Transport term (v . grad) A, every component, same kind as A.
TensorField advect(const TensorField& v, const TensorField& a);

/// Conservative transport of a density-like field: comp c of the result is
/// sum_k d_k (a_c v_k). Used by the extensive Lie derivatives so that the
/// discrete adjoint identities hold exactly.
TensorField div_outer_with_velocity(const TensorField& a, const TensorField& v);

}  // namespace eulgen
