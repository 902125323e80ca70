#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulgen/state.hpp"

namespace eulgen {

inline constexpr std::uint32_t kSnapshotVersion = 1;

/// Fixed diagnostics schema; the CSV header must match this byte for byte.
inline constexpr const char* kDiagnosticsHeader =
    "t,E_total,S_total,E_drift_rel,S_production_rate,power_residual,min_theta,min_detF,max_speed";

struct DiagnosticsRow {
    double t = 0.0;
    double E_total = 0.0;
    double S_total = 0.0;
    double E_drift_rel = 0.0;
    double S_production_rate = 0.0;
    double power_residual = 0.0;
    double min_theta = 0.0;
    double min_detF = 0.0;
    double max_speed = 0.0;
};

/// Shortest round-trip decimal formatting, comma separated, no trailing newline.
std::string format_diagnostics_row(const DiagnosticsRow& r);

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);
std::vector<DiagnosticsRow> read_diagnostics_csv(const std::string& path);

/// Binary field snapshot: "EULG", then version, d, n as u32 LE, the Kind tag
/// as one byte, then for every node in row-major order the components
/// (matrices row-major) as little-endian binary64. The box length L is not
/// part of the format; it travels in the JSON sidecar.
void write_field_snapshot(const std::string& path, const TensorField& f);
TensorField read_field_snapshot(const std::string& path, double L = 1.0);

/// One file per state block (<stem>_pi.eulg, ..._F, ..._Fp, ..._tau) plus a
/// <stem>.json sidecar listing the fields, the simulation time, and the
/// config hash.
void write_state_snapshot(const std::string& dir, const std::string& stem, const State& q, double time,
                          std::uint64_t config_hash);
State read_state_snapshot(const std::string& dir, const std::string& stem, double L, TauRole role);

/// FNV-1a 64-bit over a byte string (config hashing).
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace eulgen
