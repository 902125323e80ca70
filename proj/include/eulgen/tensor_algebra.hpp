#pragma once

#include "eulgen/field.hpp"

namespace eulgen {

/// Pointwise multilinear algebra on rank <= 2 fields (Cartesian basis, the
/// dual basis eps_k satisfies <eps_k, e_l> = delta_kl, so contraction is a
/// plain index sum).

/// a (x) b for two d-component fields: out_{ij} = a_i b_j.
TensorField tensor_product(const TensorField& a, const TensorField& b, Kind out_kind = Kind::OpVV);

/// C^1_1 of a mixed rank-2 field: scalar sum_k M_kk.
TensorField contract_trace(const TensorField& m, Kind out_kind = Kind::IntensiveScalar);

/// Insertion of w into the first vector slot. Covector -> scalar <beta, w>;
/// OpVV -> vector Bw; OpVC -> covector Cw.
TensorField interior_product(const TensorField& w, const TensorField& a);

TensorField transpose_field(const TensorField& m);
TensorField transpose_field(const TensorField& m, Kind out_kind);

TensorField matmul_pointwise(const TensorField& a, const TensorField& b, Kind out_kind);
TensorField apply_matrix_to_vector(const TensorField& m, const TensorField& x, Kind out_kind);

/// Pointwise scalar field times tensor field.
TensorField scale_by_scalar_field(const TensorField& s, const TensorField& a);

/// Pointwise double contraction of two matrix fields: scalar sum_{ij} A_ij B_ij.
TensorField double_dot(const TensorField& a, const TensorField& b, Kind out_kind = Kind::IntensiveScalar);

/// Pointwise dot product of two d-component fields.
TensorField dot_product(const TensorField& a, const TensorField& b, Kind out_kind = Kind::IntensiveScalar);

TensorField determinant_field(const TensorField& m);
TensorField inverse_field(const TensorField& m);

/// Pointwise reciprocal of a scalar field.
TensorField reciprocal(const TensorField& s);

/// Pointwise product / quotient of scalar fields.
TensorField scalar_multiply(const TensorField& a, const TensorField& b);
TensorField scalar_divide(const TensorField& a, const TensorField& b);

/// max over nodes of |M - M^T| (largest entry), for symmetry residuals.
double max_asymmetry(const TensorField& m);

double min_determinant(const TensorField& m);

}  // namespace eulgen
