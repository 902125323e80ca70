#include "eulgen/sim.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "eulgen/tensor_algebra.hpp"
#include "json.hpp"

namespace eulgen {

DiagnosticsRow diagnostics_row(const MaterialModel& model, const DissipationSpec& diss, const State& q, double t,
                               double E0) {
    DiagnosticsRow r;
    r.t = t;
    r.E_total = total_energy(model, q);
    r.S_total = total_entropy(model, q);
    r.E_drift_rel = (r.E_total - E0) / std::abs(E0);
    const Differentials d = differentials(model, q);
    const StateTangent dq = rhs(model, diss, q);
    r.S_production_rate = pair(d.dS, dq);
    r.power_residual = pair(d.dE, dq);
    const MaterialEval m = eval_material(model, q);
    double tmin = m.theta.data()[0];
    for (double x : m.theta.data()) tmin = std::min(tmin, x);
    r.min_theta = tmin;
    r.min_detF = min_determinant(q.F);
    const TensorField v = velocity_and_density(model, q).first;
    double s2 = 0.0;
    for (std::size_t node = 0; node < v.num_nodes(); ++node) {
        double s = 0.0;
        for (int c = 0; c < v.components(); ++c) s += v.at(c, node) * v.at(c, node);
        s2 = std::max(s2, s);
    }
    r.max_speed = std::sqrt(s2);
    return r;
}

namespace {

std::string snapshot_stem(int step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snapshot_%06d", step);
    return buf;
}

}  // namespace

RunResult run(const SimConfig& cfg, const std::string& out_dir) {
    namespace fs = std::filesystem;
    const bool writing = !out_dir.empty();
    if (writing) fs::create_directories(out_dir);

    State q = initial_state(cfg);
    validate_state(q);
    eval_material(cfg.material, q);
    const double E0 = total_energy(cfg.material, q);

    RunResult res{q, {}, 0, false, {}};
    std::ofstream csv;
    if (writing) {
        csv.open((fs::path(out_dir) / "diagnostics.csv").string());
        if (!csv) throw std::runtime_error(out_dir + "/diagnostics.csv: cannot open for writing");
        csv << kDiagnosticsHeader << '\n';
    }
    auto emit = [&](double t, const State& s) {
        res.diagnostics.push_back(diagnostics_row(cfg.material, cfg.dissipation, s, t, E0));
        if (writing) csv << format_diagnostics_row(res.diagnostics.back()) << '\n' << std::flush;
    };

    emit(0.0, q);
    if (writing) write_state_snapshot(out_dir, snapshot_stem(0), q, 0.0, cfg.hash);

    const int nsteps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));
    for (int i = 0; i < nsteps; ++i) {
        const double t_next = cfg.dt * static_cast<double>(i + 1);
        try {
            q = step(cfg.material, cfg.dissipation, q, cfg.dt, cfg.scheme);
        } catch (const std::exception& e) {
            res.aborted = true;
            res.abort_reason = e.what();
            if (writing) {
                write_state_snapshot(out_dir, "last_good_state", res.final_state, cfg.dt * res.steps_taken, cfg.hash);
                nlohmann::json rep;
                rep["aborted_at_step"] = i + 1;
                rep["time_of_last_good_state"] = cfg.dt * res.steps_taken;
                rep["reason"] = res.abort_reason;
                std::ofstream os((fs::path(out_dir) / "abort_report.json").string());
                os << rep.dump(2) << '\n';
            }
            return res;
        }
        res.final_state = q;
        res.steps_taken = i + 1;
        emit(t_next, q);
        const bool cadence_hit = cfg.snapshot_every > 0 && (i + 1) % cfg.snapshot_every == 0;
        if (writing && (cadence_hit || i + 1 == nsteps))
            write_state_snapshot(out_dir, snapshot_stem(i + 1), q, t_next, cfg.hash);
    }
    return res;
}

}  // namespace eulgen
