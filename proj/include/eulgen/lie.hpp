#pragma once

#include "eulgen/field.hpp"

namespace eulgen {

/// Lie derivative of A along v, dispatched on A's variance Kind (or on
/// `override_kind` when given). All derivatives use the centered-difference
/// operators; extensive kinds use the conservative form d_k(A v_k), which is
/// what makes the transport operators exactly skew-adjoint discretely.
TensorField lie_derivative(const TensorField& v, const TensorField& a);
TensorField lie_derivative(const TensorField& v, const TensorField& a, Kind override_kind);

enum class StressRate { Truesdell, Oldroyd };

/// Objective stress rates. Truesdell = Lie derivative of the extensive
/// Cauchy stress; Oldroyd (upper convected) = Lie derivative of the
/// intensive Kirchhoff stress. Both expect an OpCV-tagged matrix field.
TensorField stress_rate(const TensorField& v, const TensorField& t, StressRate which);

/// [[v, w]] = (v.grad)w - (grad v)w; antisymmetric bitwise.
TensorField commutator(const TensorField& v, const TensorField& w);

/// Literal evaluation of the general multilinear Lie-derivative formula for a
/// tensor with i0 vector slots and j0 covector slots (i0 + j0 <= 2). Storage
/// convention: slot order is all vector slots first, entry M[s0, s1] indexed
/// row-major. Agrees bitwise with the specialized Kind formulas under the
/// operator identifications.
TensorField lie_general_rank2(const TensorField& v, const TensorField& a, int i0, int j0);

/// lie_derivative(v, beta) - (i_v d(beta) + d(i_v beta)); O(h^2) for smooth
/// fields (Cartan's formula residual). For d = 1 the d(beta) term vanishes
/// identically and the result degenerates to 𝓛_v beta - d(i_v beta).
TensorField cartan_residual(const TensorField& v, const TensorField& beta);

}  // namespace eulgen
