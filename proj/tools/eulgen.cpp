#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulgen/sim.hpp"
#include "eulgen/verify.hpp"

namespace {

int do_simulate(const std::string& config_path, const std::string& out_dir) {
    eulgen::SimConfig cfg;
    try {
        cfg = eulgen::load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        const eulgen::State q0 = eulgen::initial_state(cfg);
        eulgen::validate_state(q0);
        std::cout << "grid d=" << cfg.d << " n=" << cfg.n << " L=" << cfg.L << ", scheme "
                  << eulgen::scheme_name(cfg.scheme) << ", dt " << cfg.dt << ", t_end " << cfg.t_end << '\n';
        std::cout << "advisory explicit dt bound: " << eulgen::advisory_dt(cfg.material, cfg.dissipation, q0) << '\n';
        const eulgen::RunResult res = eulgen::run(cfg, out_dir);
        if (res.aborted) {
            std::cerr << "run aborted after step " << res.steps_taken << ": " << res.abort_reason << '\n';
            std::cerr << "last good state and abort_report.json written to " << out_dir << '\n';
            return 1;
        }
        const eulgen::DiagnosticsRow& last = res.diagnostics.back();
        std::cout << "finished " << res.steps_taken << " steps; E_drift_rel " << last.E_drift_rel << ", S_total "
                  << last.S_total << '\n';
        std::cout << "outputs in " << out_dir << '\n';
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int do_verify(const std::string& suite, const std::vector<int>& sizes, std::uint64_t seed,
              const std::string& report_path) {
    eulgen::verify::Report rep;
    try {
        rep = eulgen::verify::run_suite(suite, sizes, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    const std::string text = rep.to_text();
    std::cout << text;
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        if (!os) {
            std::cerr << "error: cannot write report to " << report_path << '\n';
            return 1;
        }
        os << text;
    }
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure-preserving Eulerian thermo-visco-elastoplasticity toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    CLI::App* sim = app.add_subcommand("simulate", "time-integrate a configured problem");
    sim->add_option("--config", config_path, "JSON config file")->required();
    sim->add_option("--out", out_dir, "output directory")->required();

    std::string suite, report_path;
    std::vector<int> sizes{16, 32};
    std::uint64_t seed = 0;
    CLI::App* ver = app.add_subcommand("verify", "run a structural verification suite");
    ver->add_option("--suite", suite, "lie | generic | thermo | full")->required();
    ver->add_option("--grid", sizes, "grid sizes, e.g. --grid 16,32,64")->delimiter(',');
    ver->add_option("--seed", seed, "rng seed for the sampled fields");
    ver->add_option("--report", report_path, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sim->parsed()) return do_simulate(config_path, out_dir);
    return do_verify(suite, sizes, seed, report_path);
}
