#include "eulgen/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include "eulgen/io.hpp"
#include "json.hpp"

namespace eulgen {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& ctx, const std::string& what) {
    throw std::invalid_argument("config: " + ctx + ": " + what);
}

void expect_keys(const json& j, const std::string& ctx, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) bad(ctx, "expected an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) known = true;
        if (!known) bad(ctx, "unknown key '" + item.key() + "'");
    }
}

double num(const json& j, const std::string& ctx, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) bad(ctx, std::string("'") + key + "' must be a number");
    return j[key].get<double>();
}

double require_num(const json& j, const std::string& ctx, const char* key) {
    if (!j.contains(key)) bad(ctx, std::string("missing required key '") + key + "'");
    if (!j[key].is_number()) bad(ctx, std::string("'") + key + "' must be a number");
    return j[key].get<double>();
}

std::vector<double> num_list(const json& v, const std::string& ctx) {
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) bad(ctx, "expected a number or an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) bad(ctx, "expected numeric entries");
        out.push_back(x.get<double>());
    }
    return out;
}

FieldInit parse_field_init(const json& j, const std::string& ctx) {
    FieldInit fi;
    if (!j.is_object()) bad(ctx, "expected an object");
    if (!j.contains("preset")) bad(ctx, "missing 'preset'");
    const std::string name = j["preset"].get<std::string>();
    if (j.contains("add_identity")) {
        if (!j["add_identity"].is_boolean()) bad(ctx, "'add_identity' must be a bool");
        fi.add_identity = j["add_identity"].get<bool>();
    }
    if (name == "constant") {
        expect_keys(j, ctx, {"preset", "add_identity", "value"});
        PresetConstant p;
        p.values = j.contains("value") ? num_list(j["value"], ctx + ".value") : std::vector<double>{0.0};
        fi.preset = p;
    } else if (name == "fourier_random") {
        expect_keys(j, ctx, {"preset", "add_identity", "seed", "max_mode", "amplitude"});
        PresetFourierRandom p;
        p.seed = static_cast<std::uint64_t>(num(j, ctx, "seed", 0.0));
        p.max_mode = static_cast<int>(num(j, ctx, "max_mode", 2.0));
        p.amplitude = num(j, ctx, "amplitude", 1.0);
        fi.preset = p;
    } else if (name == "gaussian_bump") {
        expect_keys(j, ctx, {"preset", "add_identity", "center", "width", "amplitude"});
        PresetGaussianBump p;
        if (j.contains("center")) {
            const auto c = num_list(j["center"], ctx + ".center");
            if (c.size() > 3) bad(ctx, "'center' has more than 3 entries");
            for (std::size_t a = 0; a < c.size(); ++a) p.center[a] = c[a];
        }
        p.width = num(j, ctx, "width", 1.0);
        p.amplitude = j.contains("amplitude") ? num_list(j["amplitude"], ctx + ".amplitude") : std::vector<double>{1.0};
        fi.preset = p;
    } else if (name == "shear_layer") {
        expect_keys(j, ctx, {"preset", "add_identity", "amplitude"});
        PresetShearLayer p;
        p.amplitude = num(j, ctx, "amplitude", 1.0);
        fi.preset = p;
    } else {
        bad(ctx, "unknown preset '" + name + "'");
    }
    return fi;
}

}  // namespace

SimConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
    }
    expect_keys(j, "top level", {"grid", "material", "dissipation", "tau_role", "initial", "time", "output", "seed"});

    SimConfig cfg;
    if (!j.contains("grid")) bad("top level", "missing 'grid'");
    const json& jg = j["grid"];
    expect_keys(jg, "grid", {"d", "n", "L"});
    cfg.d = static_cast<int>(require_num(jg, "grid", "d"));
    cfg.n = static_cast<int>(require_num(jg, "grid", "n"));
    cfg.L = num(jg, "grid", "L", 1.0);

    if (j.contains("material")) {
        const json& jm = j["material"];
        expect_keys(jm, "material", {"rho_ref", "mu", "lambda", "k_h", "c_V", "theta_ref"});
        cfg.material.rho_ref = num(jm, "material", "rho_ref", cfg.material.rho_ref);
        cfg.material.mu = num(jm, "material", "mu", cfg.material.mu);
        cfg.material.lambda_lame = num(jm, "material", "lambda", cfg.material.lambda_lame);
        cfg.material.k_h = num(jm, "material", "k_h", cfg.material.k_h);
        cfg.material.c_V = num(jm, "material", "c_V", cfg.material.c_V);
        cfg.material.theta_ref = num(jm, "material", "theta_ref", cfg.material.theta_ref);
    }
    if (j.contains("dissipation")) {
        const json& jd = j["dissipation"];
        expect_keys(jd, "dissipation", {"mu_v", "lambda_v", "nu_p", "kappa_heat"});
        cfg.dissipation.mu_v = num(jd, "dissipation", "mu_v", 0.0);
        cfg.dissipation.lambda_v = num(jd, "dissipation", "lambda_v", 0.0);
        cfg.dissipation.nu_p = num(jd, "dissipation", "nu_p", 0.0);
        cfg.dissipation.kappa_heat = num(jd, "dissipation", "kappa_heat", 0.0);
        for (double x : {cfg.dissipation.mu_v, cfg.dissipation.lambda_v, cfg.dissipation.nu_p,
                         cfg.dissipation.kappa_heat})
            if (x < 0.0) bad("dissipation", "coefficients must be >= 0");
    }
    if (j.contains("tau_role")) {
        const std::string role = j["tau_role"].get<std::string>();
        if (role == "entropy")
            cfg.role = TauRole::Entropy;
        else if (role == "internal_energy")
            cfg.role = TauRole::InternalEnergy;
        else
            bad("tau_role", "expected 'entropy' or 'internal_energy'");
    }

    // reference defaults: fluid at rest, undeformed, tau = 0 (entropy role)
    cfg.ic_F.add_identity = true;
    cfg.ic_Fp.add_identity = true;
    if (j.contains("initial")) {
        const json& ji = j["initial"];
        expect_keys(ji, "initial", {"pi", "F", "Fp", "tau"});
        if (ji.contains("pi")) cfg.ic_pi = parse_field_init(ji["pi"], "initial.pi");
        if (ji.contains("F")) cfg.ic_F = parse_field_init(ji["F"], "initial.F");
        if (ji.contains("Fp")) cfg.ic_Fp = parse_field_init(ji["Fp"], "initial.Fp");
        if (ji.contains("tau")) cfg.ic_tau = parse_field_init(ji["tau"], "initial.tau");
    }

    if (!j.contains("time")) bad("top level", "missing 'time'");
    const json& jt = j["time"];
    expect_keys(jt, "time", {"t_end", "dt", "scheme"});
    cfg.t_end = require_num(jt, "time", "t_end");
    cfg.dt = require_num(jt, "time", "dt");
    if (!(cfg.dt > 0.0)) bad("time", "dt must be > 0");
    if (cfg.t_end < 0.0) bad("time", "t_end must be >= 0");
    if (jt.contains("scheme")) {
        try {
            cfg.scheme = scheme_from_name(jt["scheme"].get<std::string>());
        } catch (const std::exception& e) {
            bad("time", e.what());
        }
    }

    if (j.contains("output")) {
        const json& jo = j["output"];
        expect_keys(jo, "output", {"snapshot_every"});
        cfg.snapshot_every = static_cast<int>(num(jo, "output", "snapshot_every", 0.0));
        if (cfg.snapshot_every < 0) bad("output", "snapshot_every must be >= 0");
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();

    cfg.hash = fnv1a64(j.dump());
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

namespace {

TensorField sample_init(const Grid& g, Kind k, FieldInit fi, std::uint64_t run_seed) {
    if (auto* fr = std::get_if<PresetFourierRandom>(&fi.preset)) fr->seed += run_seed;
    TensorField f = sample_field(g, k, fi.preset);
    if (fi.add_identity) {
        if (!kind_is_matrix_like(k)) throw std::invalid_argument("config: add_identity needs a matrix field");
        axpy(f, 1.0, identity_matrix_field(g, k));
    }
    return f;
}

}  // namespace

State initial_state(const SimConfig& cfg) {
    const Grid g(cfg.d, cfg.n, cfg.L);
    State q = make_state(g, cfg.role);
    q.pi = sample_init(g, Kind::Momentum, cfg.ic_pi, cfg.seed);
    q.F = sample_init(g, Kind::TwoPoint, cfg.ic_F, cfg.seed);
    q.Fp = sample_init(g, Kind::IntensiveMatrix, cfg.ic_Fp, cfg.seed);
    q.tau = sample_init(g, Kind::ExtensiveScalar, cfg.ic_tau, cfg.seed);
    return q;
}

}  // namespace eulgen
