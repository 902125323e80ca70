#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "eulgen/sim.hpp"
#include "eulgen/verify.hpp"
#include "test_helpers.hpp"

using namespace eulgen;
using namespace eulgen::testing;

namespace {

std::filesystem::path temp_dir(const char* tag) {
    auto p = std::filesystem::temp_directory_path() / (std::string("eulgen_test_") + tag);
    std::filesystem::create_directories(p);
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

const char* kConfigText = R"({
  "grid": {"d": 2, "n": 16, "L": 1.0},
  "dissipation": {"mu_v": 0.1, "lambda_v": 0.05, "nu_p": 0.5, "kappa_heat": 0.2},
  "initial": {
    "pi": {"preset": "fourier_random", "amplitude": 0.3, "max_mode": 2, "seed": 1},
    "F": {"preset": "fourier_random", "amplitude": 0.1, "max_mode": 2, "seed": 2, "add_identity": true},
    "tau": {"preset": "fourier_random", "amplitude": 0.2, "max_mode": 2, "seed": 4}
  },
  "time": {"t_end": 0.01, "dt": 0.002, "scheme": "rk4"},
  "output": {"snapshot_every": 2},
  "seed": 0
})";

}  // namespace

TEST_CASE("field snapshots round-trip bitwise") {
    const Grid g = make_grid(2, 16, 1.0);
    const auto dir = temp_dir("roundtrip");
    for (Kind k : {Kind::ExtensiveScalar, Kind::Momentum, Kind::TwoPoint}) {
        const TensorField f = fourier(g, k, 77 + static_cast<std::uint64_t>(k), 1.0);
        const auto path = (dir / (kind_name(k) + ".eulg")).string();
        write_field_snapshot(path, f);
        const TensorField back = read_field_snapshot(path, g.length());
        REQUIRE(back.kind() == k);
        REQUIRE(back.grid() == g);
        CHECK(back.data() == f.data());
    }
}

TEST_CASE("snapshot of a constant field is a repeated binary64 payload") {
    const Grid g = make_grid(2, 16, 1.0);
    const TensorField f = constant_field(g, Kind::Vector, 0.625);
    const auto path = (temp_dir("const") / "c.eulg").string();
    write_field_snapshot(path, f);
    const std::string bytes = slurp(path);
    const std::size_t header = 4 + 4 + 4 + 4 + 1;
    REQUIRE(bytes.size() == header + 8 * 2 * g.num_nodes());
    CHECK(bytes.compare(0, 4, "EULG") == 0);
    const std::string first = bytes.substr(header, 8);
    for (std::size_t off = header; off < bytes.size(); off += 8) CHECK(bytes.compare(off, 8, first) == 0);
}

TEST_CASE("diagnostics CSV schema and round trip") {
    const auto path = (temp_dir("csv") / "d.csv").string();
    std::vector<DiagnosticsRow> rows(2);
    rows[0] = {0.0, 1.5, -0.25, 0.0, 1e-3, -2e-16, 0.9, 0.8, 0.4};
    rows[1] = {0.1, 1.5, -0.24, 1e-10, 2e-3, 3e-16, 0.91, 0.81, 0.39};
    write_diagnostics_csv(path, rows);
    std::ifstream is(path);
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,E_total,S_total,E_drift_rel,S_production_rate,power_residual,min_theta,min_detF,max_speed");
    const auto back = read_diagnostics_csv(path);
    REQUIRE(back.size() == 2);
    CHECK(back[1].S_production_rate == rows[1].S_production_rate);
    CHECK(back[1].max_speed == rows[1].max_speed);
}

TEST_CASE("config parsing") {
    SUBCASE("valid config") {
        const SimConfig cfg = parse_config(kConfigText);
        CHECK(cfg.n == 16);
        CHECK(cfg.dissipation.nu_p == 0.5);
        CHECK(cfg.scheme == Scheme::Rk4);
        CHECK(cfg.snapshot_every == 2);
        CHECK(cfg.hash != 0);
    }
    SUBCASE("unknown keys are errors") {
        CHECK_THROWS_AS(parse_config(R"({"grid":{"d":2,"n":16},"time":{"t_end":0,"dt":0.1},"typo":1})"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_config(R"({"grid":{"d":2,"n":16,"XL":1},"time":{"t_end":0,"dt":0.1}})"),
                        std::invalid_argument);
    }
    SUBCASE("invalid values are errors") {
        CHECK_THROWS(parse_config(R"({"grid":{"d":2,"n":16},"time":{"t_end":0,"dt":0}})"));
        CHECK_THROWS(parse_config(R"({"grid":{"d":2,"n":16},"time":{"t_end":-1,"dt":0.1}})"));
        CHECK_THROWS(parse_config(R"({"grid":{"d":2,"n":16},"time":{"t_end":0,"dt":0.1,"scheme":"rk5"}})"));
        CHECK_THROWS(parse_config(R"({"grid":{"d":2,"n":16},"time":{"t_end":0,"dt":0.1},"tau_role":"heat"})"));
        CHECK_THROWS(parse_config("not json"));
    }
}

TEST_CASE("step basics") {
    const MaterialModel model{};
    const DissipationSpec diss{0.1, 0.05, 0.5, 0.2};
    const Grid g = make_grid(2, 16, 1.0);

    SUBCASE("dt = 0 returns the state bitwise") {
        const State q = make_random_state(g, TauRole::Entropy, 5);
        const State r = step(model, diss, q, 0.0, Scheme::Rk4);
        CHECK(r.pi.data() == q.pi.data());
        CHECK(r.tau.data() == q.tau.data());
    }
    SUBCASE("equilibrium is a fixed point of stepping") {
        State q = make_state(g, TauRole::Entropy);
        q.F = identity_matrix_field(g, Kind::TwoPoint);
        q.Fp = identity_matrix_field(g, Kind::IntensiveMatrix);
        q.tau = constant_field(g, Kind::ExtensiveScalar, 0.2);
        const State r = step(model, diss, q, 0.01, Scheme::Rk4);
        CHECK(max_abs(r.pi - q.pi) < 1e-14);
        CHECK(max_abs(r.F - q.F) < 1e-14);
        CHECK(max_abs(r.tau - q.tau) < 1e-14);
    }
    SUBCASE("rk4 self-convergence order is at least 3.8") {
        const State q0 = make_random_state(g, TauRole::Entropy, 6);
        auto integrate = [&](double dt, double t_end) {
            State q = q0;
            const int steps = static_cast<int>(std::lround(t_end / dt));
            for (int i = 0; i < steps; ++i) q = step(model, diss, q, dt, Scheme::Rk4);
            return q;
        };
        const double t_end = 0.016;
        const State ref = integrate(0.0005, t_end);
        auto err = [&](double dt) {
            const State q = integrate(dt, t_end);
            StateTangent diff{q.pi - ref.pi, q.F - ref.F, q.Fp - ref.Fp, q.tau - ref.tau};
            return norm(diff);
        };
        const double e1 = err(0.004);
        const double e2 = err(0.002);
        CHECK(std::log2(e1 / e2) > 3.8);
    }
    SUBCASE("a blow-up step reports a state failure") {
        const State q = make_random_state(g, TauRole::Entropy, 7);
        CHECK_THROWS_AS(step(model, diss, q, 50.0, Scheme::Euler), std::runtime_error);
    }
}

TEST_CASE("run is deterministic and writes the advertised outputs") {
    const SimConfig cfg = parse_config(kConfigText);
    const auto dir1 = temp_dir("run_a");
    const auto dir2 = temp_dir("run_b");
    const RunResult r1 = run(cfg, dir1.string());
    const RunResult r2 = run(cfg, dir2.string());
    REQUIRE(!r1.aborted);
    CHECK(r1.steps_taken == 5);
    CHECK(r1.diagnostics.size() == 6);

    SUBCASE("bitwise identical diagnostics for identical config") {
        CHECK(slurp(dir1 / "diagnostics.csv") == slurp(dir2 / "diagnostics.csv"));
    }
    SUBCASE("snapshots at the cadence plus initial and final") {
        for (const char* stem : {"snapshot_000000", "snapshot_000002", "snapshot_000004", "snapshot_000005"})
            CHECK(std::filesystem::exists(dir1 / (std::string(stem) + ".json")));
        const State back = read_state_snapshot(dir1.string(), "snapshot_000005", cfg.L, cfg.role);
        CHECK(back.pi.data() == r1.final_state.pi.data());
        CHECK(back.tau.data() == r1.final_state.tau.data());
    }
    SUBCASE("entropy is nondecreasing along the dissipative run") {
        for (std::size_t i = 1; i < r1.diagnostics.size(); ++i)
            CHECK(r1.diagnostics[i].S_total - r1.diagnostics[i - 1].S_total > -1e-12);
    }
}

TEST_CASE("run with t_end = 0 reports the initial state only") {
    SimConfig cfg = parse_config(kConfigText);
    cfg.t_end = 0.0;
    const RunResult r = run(cfg, "");
    CHECK(r.steps_taken == 0);
    CHECK(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].E_drift_rel == 0.0);
}

TEST_CASE("run aborts cleanly on state invalidation") {
    SimConfig cfg = parse_config(kConfigText);
    cfg.dt = 50.0;
    cfg.t_end = 100.0;
    cfg.scheme = Scheme::Euler;
    const auto dir = temp_dir("abort");
    const RunResult r = run(cfg, dir.string());
    CHECK(r.aborted);
    CHECK(!r.abort_reason.empty());
    CHECK(std::filesystem::exists(dir / "abort_report.json"));
    CHECK(std::filesystem::exists(dir / "last_good_state.json"));
}

TEST_CASE("verify suite rejects unknown names") {
    CHECK_THROWS_AS(verify::run_suite("nonsense", {16}, 0), std::invalid_argument);
}
