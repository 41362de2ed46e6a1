#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jcm/field_space.hpp"
#include "jcm/hermitian_linalg.hpp"
#include "jcm/measures.hpp"
#include "jcm/oracle.hpp"
#include "jcm/sweep.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Jaynes-Cummings entanglement dynamics: closed-form evolution, "
              "negativity and entropy measures, brute-force oracle, CSV sweeps.";

    py::register_exception<jcm::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<jcm::IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<jcm::OracleMismatchError>(m, "OracleMismatchError",
                                                     PyExc_RuntimeError);

    py::class_<jcm::TruncationPolicy>(m, "TruncationPolicy")
        .def(py::init<>())
        .def(py::init([](double tail_tolerance, int buffer) {
                 return jcm::TruncationPolicy{tail_tolerance, buffer};
             }),
             py::arg("tail_tolerance"), py::arg("buffer"))
        .def_readwrite("tail_tolerance", &jcm::TruncationPolicy::tail_tolerance)
        .def_readwrite("buffer", &jcm::TruncationPolicy::buffer);

    py::class_<jcm::SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def(py::init([](double g, double omega_a, double delta, double atom_ground_weight) {
                 jcm::SystemParams p;
                 p.g = g;
                 p.omega_a = omega_a;
                 p.delta = delta;
                 p.atom_ground_weight = atom_ground_weight;
                 p.validate();
                 return p;
             }),
             py::arg("g") = 1.0, py::arg("omega_a") = 1.0, py::arg("delta") = 0.0,
             py::arg("atom_ground_weight") = 0.0)
        .def_readwrite("g", &jcm::SystemParams::g)
        .def_readwrite("omega_a", &jcm::SystemParams::omega_a)
        .def_readwrite("delta", &jcm::SystemParams::delta)
        .def_readwrite("atom_ground_weight", &jcm::SystemParams::atom_ground_weight)
        .def_property_readonly("omega_f", &jcm::SystemParams::omega_f)
        .def("validate", &jcm::SystemParams::validate);

    py::class_<jcm::ChiQuad>(m, "ChiQuad")
        .def_readonly("chi1", &jcm::ChiQuad::chi1)
        .def_readonly("chi2", &jcm::ChiQuad::chi2)
        .def_readonly("chi3", &jcm::ChiQuad::chi3)
        .def_readonly("chi4", &jcm::ChiQuad::chi4)
        .def_readonly("t", &jcm::ChiQuad::t);

    py::class_<jcm::JointDensity>(m, "JointDensity")
        .def(py::init([](Eigen::MatrixXcd ee, Eigen::MatrixXcd gg, Eigen::MatrixXcd eg) {
                 return jcm::JointDensity{std::move(ee), std::move(gg), std::move(eg)};
             }),
             py::arg("ee"), py::arg("gg"), py::arg("eg"))
        .def_readonly("ee", &jcm::JointDensity::ee)
        .def_readonly("gg", &jcm::JointDensity::gg)
        .def_readonly("eg", &jcm::JointDensity::eg)
        .def_property_readonly("field_dim", &jcm::JointDensity::field_dim)
        .def("full", &jcm::JointDensity::full);

    py::class_<jcm::MeasureRecord>(m, "MeasureRecord")
        .def_readonly("t", &jcm::MeasureRecord::t)
        .def_readonly("negativity", &jcm::MeasureRecord::negativity)
        .def_readonly("mutual_entropy", &jcm::MeasureRecord::mutual_entropy)
        .def_readonly("s_atom", &jcm::MeasureRecord::s_atom)
        .def_readonly("s_field", &jcm::MeasureRecord::s_field)
        .def_readonly("s_joint", &jcm::MeasureRecord::s_joint)
        .def_readonly("classical_bound", &jcm::MeasureRecord::classical_bound)
        .def_readonly("truncation_mass_lost", &jcm::MeasureRecord::truncation_mass_lost)
        .def("__repr__", [](const jcm::MeasureRecord& r) {
            return "MeasureRecord(t=" + std::to_string(r.t) +
                   ", negativity=" + std::to_string(r.negativity) +
                   ", mutual_entropy=" + std::to_string(r.mutual_entropy) + ")";
        });

    py::class_<jcm::SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("alpha", &jcm::SweepConfig::alpha)
        .def_readwrite("g", &jcm::SweepConfig::g)
        .def_readwrite("omega_a", &jcm::SweepConfig::omega_a)
        .def_readwrite("delta", &jcm::SweepConfig::delta)
        .def_readwrite("atom_ground_weight", &jcm::SweepConfig::atom_ground_weight)
        .def_readwrite("t_start", &jcm::SweepConfig::t_start)
        .def_readwrite("t_end", &jcm::SweepConfig::t_end)
        .def_readwrite("n_points", &jcm::SweepConfig::n_points)
        .def_readwrite("truncation", &jcm::SweepConfig::truncation)
        .def_readwrite("oracle_check", &jcm::SweepConfig::oracle_check)
        .def_readwrite("oracle_stride", &jcm::SweepConfig::oracle_stride)
        .def_readwrite("output_path", &jcm::SweepConfig::output_path)
        .def("params", &jcm::SweepConfig::params)
        .def("validate", &jcm::SweepConfig::validate);

    m.def("coherent_coefficients", &jcm::coherent_coefficients, py::arg("alpha"),
          py::arg("n_max"));
    m.def("choose_truncation", &jcm::choose_truncation, py::arg("alpha"),
          py::arg("policy") = jcm::TruncationPolicy{});

    m.def("eigenvalues_hermitian", &jcm::eigenvalues_hermitian, py::arg("m"));
    m.def("trace_norm", &jcm::trace_norm, py::arg("m"));
    m.def("matrix_exponential_action", &jcm::matrix_exponential_action, py::arg("h"),
          py::arg("t"), py::arg("v"));

    m.def("rabi_frequency", &jcm::rabi_frequency, py::arg("params"), py::arg("n"));
    m.def("mixing_angle", &jcm::mixing_angle, py::arg("params"), py::arg("n"));
    m.def("dressed_energies", &jcm::dressed_energies, py::arg("params"), py::arg("n"));
    m.def("chi_vectors", &jcm::chi_vectors, py::arg("params"), py::arg("field0"),
          py::arg("t"));
    m.def("assemble_joint_density", &jcm::assemble_joint_density, py::arg("params"),
          py::arg("chi"));
    m.def("reduced_atom", &jcm::reduced_atom, py::arg("params"), py::arg("chi"));
    m.def("reduced_field", &jcm::reduced_field, py::arg("params"), py::arg("chi"));
    m.def("atom_marginal", &jcm::atom_marginal, py::arg("rho"));
    m.def("field_marginal", &jcm::field_marginal, py::arg("rho"));

    m.def("partial_transpose_atom", &jcm::partial_transpose_atom, py::arg("rho"));
    m.def("negativity", &jcm::negativity, py::arg("rho"));
    m.def("von_neumann_entropy", &jcm::von_neumann_entropy, py::arg("m"));
    m.def("mutual_entropy", &jcm::mutual_entropy, py::arg("rho"), py::arg("rho_atom"),
          py::arg("rho_field"));
    m.def("measure_sweep_point", &jcm::measure_sweep_point, py::arg("params"),
          py::arg("field0"), py::arg("t"));

    m.def("build_hamiltonian", &jcm::build_hamiltonian, py::arg("params"), py::arg("n_max"));
    m.def("brute_force_state", &jcm::brute_force_state, py::arg("params"),
          py::arg("field0"), py::arg("t"));
    m.def("measure_oracle_point", &jcm::measure_oracle_point, py::arg("params"),
          py::arg("field0"), py::arg("t"));

    m.def("preset_config", &jcm::preset_config, py::arg("name"));
    m.def("run_sweep", &jcm::run_sweep, py::arg("config"));
    m.def("format_csv", &jcm::format_csv, py::arg("records"));
    m.def("emit_csv", &jcm::emit_csv, py::arg("records"), py::arg("path"));
}
