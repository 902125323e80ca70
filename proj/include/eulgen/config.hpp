#pragma once

#include <cstdint>
#include <string>

#include "eulgen/integrator.hpp"
#include "eulgen/presets.hpp"

namespace eulgen {

/// Initial condition of one state block: a preset sample, optionally added to
/// the identity matrix (the natural reference for F and F_p).
struct FieldInit {
    Preset preset = PresetConstant{{0.0}};
    bool add_identity = false;
};

struct SimConfig {
    int d = 2;
    int n = 32;
    double L = 1.0;
    MaterialModel material;
    DissipationSpec dissipation;
    TauRole role = TauRole::Entropy;
    FieldInit ic_pi;
    FieldInit ic_F;
    FieldInit ic_Fp;
    FieldInit ic_tau;
    double t_end = 0.0;
    double dt = 1e-3;
    Scheme scheme = Scheme::Rk4;
    int snapshot_every = 0;  // in steps; 0 = final snapshot only
    std::uint64_t seed = 0;
    std::uint64_t hash = 0;  // FNV-1a of the canonical config text
};

/// Parse the JSON config. Unknown keys anywhere in the document are errors
/// (std::invalid_argument), as are missing required keys and bad values.
SimConfig parse_config(const std::string& json_text);
SimConfig load_config(const std::string& path);

/// Sample the initial state on the configured grid. The config seed is folded
/// into every fourier_random preset so one knob reseeds the whole run.
State initial_state(const SimConfig& cfg);

}  // namespace eulgen
