#pragma once

#include <cstdint>
#include <string>
#include <stdexcept>

namespace eulgen {

/// Variance tag of a tensor field. The tag selects the transport rule
/// (Lie derivative) and the pullback rule; storage is plain component
/// arrays either way.
enum class Kind : std::uint8_t {
    IntensiveScalar = 0,   // 0-form f
    ExtensiveScalar = 1,   // volume form (density) rho
    Vector = 2,            // tangent vector w
    Covector = 3,          // 1-form beta
    Momentum = 4,          // covector-valued density pi = rho*v
    OpVV = 5,              // B : T -> T
    OpVC = 6,              // C : T -> T*
    OpCC = 7,              // D : T* -> T*
    OpCV = 8,              // E : T* -> T
    TwoPoint = 9,          // F, U-valued 1-form (deformation gradient)
    IntensiveMatrix = 10,  // F_p, U-valued 0-form
    RdExtensive = 11,      // R^d-valued density (e.g. magnetization)
};

inline constexpr int kNumKinds = 12;

enum class KindRank { Scalar, VectorLike, MatrixLike };

inline KindRank kind_rank(Kind k) {
    switch (k) {
        case Kind::IntensiveScalar:
        case Kind::ExtensiveScalar: return KindRank::Scalar;
        case Kind::Vector:
        case Kind::Covector:
        case Kind::Momentum:
        case Kind::RdExtensive: return KindRank::VectorLike;
        default: return KindRank::MatrixLike;
    }
}

inline int kind_components(Kind k, int d) {
    switch (kind_rank(k)) {
        case KindRank::Scalar: return 1;
        case KindRank::VectorLike: return d;
        case KindRank::MatrixLike: return d * d;
    }
    return 1;
}

inline bool kind_is_scalar(Kind k) { return kind_rank(k) == KindRank::Scalar; }
inline bool kind_is_vector_like(Kind k) { return kind_rank(k) == KindRank::VectorLike; }
inline bool kind_is_matrix_like(Kind k) { return kind_rank(k) == KindRank::MatrixLike; }

inline std::string kind_name(Kind k) {
    switch (k) {
        case Kind::IntensiveScalar: return "IntensiveScalar";
        case Kind::ExtensiveScalar: return "ExtensiveScalar";
        case Kind::Vector: return "Vector";
        case Kind::Covector: return "Covector";
        case Kind::Momentum: return "Momentum";
        case Kind::OpVV: return "OpVV";
        case Kind::OpVC: return "OpVC";
        case Kind::OpCC: return "OpCC";
        case Kind::OpCV: return "OpCV";
        case Kind::TwoPoint: return "TwoPoint";
        case Kind::IntensiveMatrix: return "IntensiveMatrix";
        case Kind::RdExtensive: return "RdExtensive";
    }
    throw std::logic_error("unknown Kind");
}

inline Kind kind_from_tag(std::uint8_t tag) {
    if (tag >= kNumKinds) throw std::invalid_argument("invalid Kind tag " + std::to_string(tag));
    return static_cast<Kind>(tag);
}

}  // namespace eulgen
