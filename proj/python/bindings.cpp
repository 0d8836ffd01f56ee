#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvchan/coherence.hpp"
#include "cvchan/errors.hpp"
#include "cvchan/pipeline.hpp"
#include "cvchan/sweep.hpp"
#include "cvchan/thermo.hpp"
#include "cvchan/version.hpp"

namespace py = pybind11;
using namespace cvchan;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phase-insensitive Gaussian channels, coherence, and entropy production";
  m.attr("__version__") = kVersion;

  py::register_exception<NonPhysicalStateError>(m, "NonPhysicalStateError", PyExc_RuntimeError);
  py::register_exception<CpViolationError>(m, "CpViolationError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "PipelineParseError", PyExc_ValueError);

  py::class_<GaussianState>(m, "GaussianState")
      .def(py::init<Vector, Matrix>(), py::arg("d"), py::arg("sigma"))
      .def_readonly("d", &GaussianState::d)
      .def_readonly("sigma", &GaussianState::sigma)
      .def_property_readonly("n_modes", &GaussianState::n_modes)
      .def("__repr__", [](const GaussianState& s) {
        return "<GaussianState n_modes=" + std::to_string(s.n_modes()) + ">";
      });

  m.def("symplectic_form", &symplectic_form, py::arg("n_modes"));
  m.def("thermal_state", &thermal_state, py::arg("nbars"));
  m.def("displaced_thermal", &displaced_thermal, py::arg("nbar"), py::arg("q0"), py::arg("p0"));
  m.def("tensor", &tensor, py::arg("states"));
  m.def("symplectic_eigenvalues", &symplectic_eigenvalues, py::arg("state"));
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("state"));
  m.def("mean_photon_numbers", &mean_photon_numbers, py::arg("state"));
  m.def("thermal_entropy", &thermal_entropy, py::arg("nbar"));

  py::class_<GcpMap>(m, "GcpMap")
      .def(py::init<Matrix, Matrix>(), py::arg("F"), py::arg("G"))
      .def_readonly("F", &GcpMap::F)
      .def_readonly("G", &GcpMap::G)
      .def_property_readonly("n_modes", &GcpMap::n_modes);

  py::class_<CpCheck>(m, "CpCheck")
      .def_readonly("ok", &CpCheck::ok)
      .def_readonly("min_eigenvalue", &CpCheck::min_eigenvalue)
      .def("__bool__", [](const CpCheck& c) { return c.ok; });

  m.def("identity_map", &identity_map, py::arg("n_modes"));
  m.def("attenuation", &attenuation, py::arg("theta"), py::arg("mbar") = 0.0);
  m.def("amplification", &amplification, py::arg("r"), py::arg("mbar") = 0.0);
  m.def("quantum_limited_attenuator", &quantum_limited_attenuator, py::arg("theta"));
  m.def("quantum_limited_amplifier", &quantum_limited_amplifier, py::arg("r"));
  m.def("phase_insensitive", &phase_insensitive, py::arg("theta"), py::arg("r"));
  m.def("thermalization_map", &thermalization_map, py::arg("t"), py::arg("gamma"),
        py::arg("nbar_reservoir"));
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("embed_single_mode", &embed_single_mode, py::arg("map"), py::arg("mode_index"),
        py::arg("n_modes"));
  m.def("validate_cp", &validate_cp, py::arg("map"));
  m.def("apply", &apply, py::arg("map"), py::arg("state"));

  py::class_<CoherenceReport>(m, "CoherenceReport")
      .def_readonly("kbars", &CoherenceReport::kbars)
      .def_readonly("entropy_state", &CoherenceReport::entropy_state)
      .def_readonly("entropy_reference", &CoherenceReport::entropy_reference)
      .def_readonly("coherence", &CoherenceReport::coherence);

  m.def("reference_thermal", &reference_thermal, py::arg("state"));
  m.def("coherence", &coherence, py::arg("state"));
  m.def("is_thermal_product", &is_thermal_product, py::arg("state"), py::arg("tol") = 1e-9);
  m.def("coherence_att_closed_form", &coherence_att_closed_form, py::arg("nbar"), py::arg("mbar"),
        py::arg("theta"), py::arg("q0"), py::arg("p0"));
  m.def("coherence_amp_closed_form", &coherence_amp_closed_form, py::arg("nbar"), py::arg("mbar"),
        py::arg("r"), py::arg("q0"), py::arg("p0"));
  m.def("coherence_amp_limit_r0", &coherence_amp_limit_r0, py::arg("nbar"), py::arg("q0"),
        py::arg("p0"));
  m.def("coherence_amp_limit_rinf", &coherence_amp_limit_rinf, py::arg("nbar"), py::arg("mbar"),
        py::arg("q0"), py::arg("p0"));
  m.def("coherence_att_nmode", &coherence_att_nmode, py::arg("nbars"), py::arg("mbars"),
        py::arg("theta"), py::arg("d0"));
  m.def("coherence_amp_nmode", &coherence_amp_nmode, py::arg("nbars"), py::arg("mbars"),
        py::arg("r"), py::arg("d0"));

  py::class_<ThermalReservoir>(m, "ThermalReservoir")
      .def(py::init<double, double>(), py::arg("nbar"), py::arg("gamma"))
      .def_readonly("nbar", &ThermalReservoir::nbar)
      .def_readonly("gamma", &ThermalReservoir::gamma)
      .def_property_readonly("beta", &ThermalReservoir::beta);

  py::enum_<EnergyConvention>(m, "EnergyConvention")
      .value("covariance_only", EnergyConvention::covariance_only)
      .value("full", EnergyConvention::full);

  py::enum_<ChannelFamily>(m, "ChannelFamily")
      .value("attenuation", ChannelFamily::attenuation)
      .value("amplification", ChannelFamily::amplification);

  py::class_<EntropyRecord>(m, "EntropyRecord")
      .def_readonly("t", &EntropyRecord::t)
      .def_readonly("delta_U", &EntropyRecord::delta_U)
      .def_readonly("delta_S", &EntropyRecord::delta_S)
      .def_readonly("sigma_prod", &EntropyRecord::sigma_prod);

  py::class_<ChannelProtocol>(m, "ChannelProtocol")
      .def(py::init([](ChannelFamily family, double nbar, double mbar, double q0, double p0,
                       double param, double r_max) {
             return ChannelProtocol{family, nbar, mbar, q0, p0, param, r_max};
           }),
           py::arg("family"), py::arg("nbar") = 1.0, py::arg("mbar") = 2.0, py::arg("q0") = 1.0,
           py::arg("p0") = 1.0, py::arg("param") = 0.0, py::arg("r_max") = 10.0)
      .def_readwrite("family", &ChannelProtocol::family)
      .def_readwrite("nbar", &ChannelProtocol::nbar)
      .def_readwrite("mbar", &ChannelProtocol::mbar)
      .def_readwrite("q0", &ChannelProtocol::q0)
      .def_readwrite("p0", &ChannelProtocol::p0)
      .def_readwrite("param", &ChannelProtocol::param)
      .def_readwrite("r_max", &ChannelProtocol::r_max);

  m.def("internal_energy", &internal_energy, py::arg("state"), py::arg("convention"));
  m.def("thermalize", &thermalize, py::arg("state"), py::arg("reservoir"), py::arg("t"));
  m.def("entropy_production", &entropy_production, py::arg("state_tau1"), py::arg("reservoir"),
        py::arg("t"), py::arg("convention"));
  m.def("relative_entropy_to_gibbs", &relative_entropy_to_gibbs, py::arg("state"),
        py::arg("beta"), py::arg("convention"));
  m.def("beta_from_nbar", &beta_from_nbar, py::arg("nbar"));
  m.def("nbar_from_beta", &nbar_from_beta, py::arg("beta"));
  m.def("thermalization_time", &thermalization_time, py::arg("state"), py::arg("reservoir"),
        py::arg("tol"));
  m.def("channel_output", &channel_output, py::arg("protocol"));
  m.def("coherence_entropy_cost", &coherence_entropy_cost, py::arg("protocol"),
        py::arg("reservoir"), py::arg("t"), py::arg("convention"));

  py::class_<PipelineSpec>(m, "PipelineSpec")
      .def("__len__", [](const PipelineSpec& spec) { return spec.stages.size(); })
      .def("__str__", &print_pipeline)
      .def("__eq__", [](const PipelineSpec& a, const PipelineSpec& b) { return a == b; });

  m.def("parse_pipeline", [](const std::string& text) { return parse_pipeline(text); },
        py::arg("text"));
  m.def("print_pipeline", &print_pipeline, py::arg("spec"));
  m.def("evaluate", &evaluate, py::arg("spec"), py::arg("input"));
  m.def("run_report_json", &run_report_json, py::arg("final_state"));
}
