#pragma once

#include <vector>

#include "eulgen/config.hpp"
#include "eulgen/io.hpp"

namespace eulgen {

DiagnosticsRow diagnostics_row(const MaterialModel& model, const DissipationSpec& diss, const State& q, double t,
                               double E0);

struct RunResult {
    State final_state;
    std::vector<DiagnosticsRow> diagnostics;
    int steps_taken = 0;
    bool aborted = false;
    std::string abort_reason;
};

/// Time-step cfg from t = 0 to t_end (round(t_end/dt) steps), one diagnostics
/// row per step plus the initial row. With a non-empty out_dir, writes
/// diagnostics.csv, snapshots at the configured cadence plus the final state
/// (snapshot_000000 is the initial state), and on state invalidation the
/// last good state with an abort report instead of propagating the error.
RunResult run(const SimConfig& cfg, const std::string& out_dir);

}  // namespace eulgen
