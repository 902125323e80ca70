#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eulgen/diff_ops.hpp"
#include "eulgen/lie.hpp"
#include "eulgen/sim.hpp"
#include "eulgen/verify.hpp"

namespace py = pybind11;
using namespace eulgen;

namespace {

py::array_t<double> field_values(const TensorField& f) {
    py::array_t<double> out({static_cast<py::ssize_t>(f.components()), static_cast<py::ssize_t>(f.num_nodes())});
    std::copy(f.data().begin(), f.data().end(), out.mutable_data());
    return out;
}

void set_field_values(TensorField& f, py::array_t<double, py::array::c_style | py::array::forcecast> values) {
    if (values.size() != static_cast<py::ssize_t>(f.data().size()))
        throw std::invalid_argument("values: expected " + std::to_string(f.data().size()) + " samples");
    std::copy(values.data(), values.data() + values.size(), f.data().begin());
}

py::dict row_dict(const DiagnosticsRow& r) {
    py::dict d;
    d["t"] = r.t;
    d["E_total"] = r.E_total;
    d["S_total"] = r.S_total;
    d["E_drift_rel"] = r.E_drift_rel;
    d["S_production_rate"] = r.S_production_rate;
    d["power_residual"] = r.power_residual;
    d["min_theta"] = r.min_theta;
    d["min_detF"] = r.min_detF;
    d["max_speed"] = r.max_speed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_eulgen, m) {
    m.doc() = "structure-preserving Eulerian thermo-visco-elastoplasticity core";

    py::enum_<Kind>(m, "Kind")
        .value("IntensiveScalar", Kind::IntensiveScalar)
        .value("ExtensiveScalar", Kind::ExtensiveScalar)
        .value("Vector", Kind::Vector)
        .value("Covector", Kind::Covector)
        .value("Momentum", Kind::Momentum)
        .value("OpVV", Kind::OpVV)
        .value("OpVC", Kind::OpVC)
        .value("OpCC", Kind::OpCC)
        .value("OpCV", Kind::OpCV)
        .value("TwoPoint", Kind::TwoPoint)
        .value("IntensiveMatrix", Kind::IntensiveMatrix)
        .value("RdExtensive", Kind::RdExtensive);

    py::enum_<TauRole>(m, "TauRole")
        .value("Entropy", TauRole::Entropy)
        .value("InternalEnergy", TauRole::InternalEnergy);

    py::enum_<Scheme>(m, "Scheme").value("Euler", Scheme::Euler).value("Rk4", Scheme::Rk4);

    py::class_<Grid>(m, "Grid")
        .def(py::init<int, int, double>(), py::arg("d"), py::arg("n"), py::arg("L") = 1.0)
        .def_property_readonly("d", &Grid::dim)
        .def_property_readonly("n", &Grid::n)
        .def_property_readonly("L", &Grid::length)
        .def_property_readonly("h", &Grid::spacing)
        .def_property_readonly("num_nodes", &Grid::num_nodes)
        .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; });

    py::class_<TensorField>(m, "TensorField")
        .def(py::init<const Grid&, Kind, double>(), py::arg("grid"), py::arg("kind"), py::arg("fill") = 0.0)
        .def_property_readonly("grid", &TensorField::grid)
        .def_property_readonly("kind", &TensorField::kind)
        .def_property_readonly("components", &TensorField::components)
        .def_property("values", &field_values, &set_field_values,
                      "samples as a (components, num_nodes) array; nodes in C order")
        .def("retagged", &TensorField::retagged);

    m.def("constant_field", &constant_field, py::arg("grid"), py::arg("kind"), py::arg("value"));
    m.def("identity_matrix_field", &identity_matrix_field, py::arg("grid"), py::arg("kind"));
    m.def(
        "fourier_random_field",
        [](const Grid& g, Kind k, std::uint64_t seed, int max_mode, double amplitude) {
            return sample_field(g, k, PresetFourierRandom{seed, max_mode, amplitude});
        },
        py::arg("grid"), py::arg("kind"), py::arg("seed"), py::arg("max_mode") = 2, py::arg("amplitude") = 1.0);

    m.def("lie_derivative", py::overload_cast<const TensorField&, const TensorField&>(&lie_derivative), py::arg("v"),
          py::arg("a"));
    m.def("lie_derivative",
          py::overload_cast<const TensorField&, const TensorField&, Kind>(&lie_derivative), py::arg("v"),
          py::arg("a"), py::arg("kind"));
    m.def("commutator", &commutator, py::arg("v"), py::arg("w"));
    m.def("strain_rate", &strain_rate, py::arg("v"));
    m.def("l2_norm", &l2_norm);
    m.def("max_abs", &max_abs);

    py::class_<MaterialModel>(m, "MaterialModel")
        .def(py::init<>())
        .def_readwrite("rho_ref", &MaterialModel::rho_ref)
        .def_readwrite("mu", &MaterialModel::mu)
        .def_readwrite("lambda_lame", &MaterialModel::lambda_lame)
        .def_readwrite("k_h", &MaterialModel::k_h)
        .def_readwrite("c_V", &MaterialModel::c_V)
        .def_readwrite("theta_ref", &MaterialModel::theta_ref);

    py::class_<DissipationSpec>(m, "DissipationSpec")
        .def(py::init<>())
        .def_readwrite("mu_v", &DissipationSpec::mu_v)
        .def_readwrite("lambda_v", &DissipationSpec::lambda_v)
        .def_readwrite("nu_p", &DissipationSpec::nu_p)
        .def_readwrite("kappa_heat", &DissipationSpec::kappa_heat);

    py::class_<State>(m, "State")
        .def(py::init([](const Grid& g, TauRole role) { return make_state(g, role); }), py::arg("grid"),
             py::arg("role") = TauRole::Entropy)
        .def_readwrite("pi", &State::pi)
        .def_readwrite("F", &State::F)
        .def_readwrite("Fp", &State::Fp)
        .def_readwrite("tau", &State::tau)
        .def_readwrite("role", &State::role);

    py::class_<StateTangent>(m, "StateTangent")
        .def_readwrite("pi", &StateTangent::pi)
        .def_readwrite("F", &StateTangent::F)
        .def_readwrite("Fp", &StateTangent::Fp)
        .def_readwrite("tau", &StateTangent::tau)
        .def("norm", [](const StateTangent& t) { return norm(t); });

    m.def("validate_state", &validate_state);
    m.def("total_energy", py::overload_cast<const MaterialModel&, const State&>(&total_energy));
    m.def("total_entropy", py::overload_cast<const MaterialModel&, const State&>(&total_entropy));
    m.def("rhs", &rhs, py::arg("model"), py::arg("diss"), py::arg("q"));
    m.def("v_ham", &v_ham, py::arg("model"), py::arg("q"));
    m.def("v_diss", &v_diss, py::arg("model"), py::arg("diss"), py::arg("q"));
    m.def("step", &step, py::arg("model"), py::arg("diss"), py::arg("q"), py::arg("dt"), py::arg("scheme"));
    m.def("advisory_dt", &advisory_dt, py::arg("model"), py::arg("diss"), py::arg("q"));

    m.def(
        "simulate",
        [](const std::string& config_text, const std::string& out_dir) {
            const SimConfig cfg = parse_config(config_text);
            const RunResult res = run(cfg, out_dir);
            py::dict out;
            out["steps_taken"] = res.steps_taken;
            out["aborted"] = res.aborted;
            out["abort_reason"] = res.abort_reason;
            py::list rows;
            for (const DiagnosticsRow& r : res.diagnostics) rows.append(row_dict(r));
            out["diagnostics"] = rows;
            out["final_state"] = res.final_state;
            return out;
        },
        py::arg("config_text"), py::arg("out_dir") = "",
        "parse a JSON config, run it, and return diagnostics (out_dir='' skips file output)");

    m.def(
        "verify_suite",
        [](const std::string& suite, const std::vector<int>& sizes, std::uint64_t seed) {
            const verify::Report rep = verify::run_suite(suite, sizes, seed);
            return py::make_tuple(rep.all_passed(), rep.to_text());
        },
        py::arg("suite"), py::arg("sizes"), py::arg("seed") = 0,
        "run a verification suite; returns (all_passed, report_text)");
}
