#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "njc/model.hpp"
#include "njc/oracle.hpp"
#include "njc/scenario.hpp"
#include "njc/single_mode.hpp"
#include "njc/spectral.hpp"
#include "njc/states.hpp"
#include "njc/tables.hpp"
#include "njc/two_mode.hpp"

namespace py = pybind11;
using namespace njc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "deformed Jaynes-Cummings model: exactly solvable dynamics, "
              "entanglement measures and the brute-force validation oracle";

    py::class_<SingleModeParams>(m, "SingleModeParams")
        .def(py::init<double, double, double, double>(), py::arg("omega") = 1.0,
             py::arg("lambda_") = 1e-3, py::arg("k") = 0.0, py::arg("delta") = 0.0)
        .def_readonly("omega", &SingleModeParams::omega)
        .def_readonly("lambda_", &SingleModeParams::lambda)
        .def_readonly("k", &SingleModeParams::k)
        .def_readonly("delta", &SingleModeParams::delta)
        .def("nu", &SingleModeParams::nu)
        .def("__repr__", [](const SingleModeParams& p) {
            return "<SingleModeParams omega=" + std::to_string(p.omega) +
                   " lambda=" + std::to_string(p.lambda) + " k=" + std::to_string(p.k) +
                   " delta=" + std::to_string(p.delta) + ">";
        });

    py::class_<TwoModeParams>(m, "TwoModeParams")
        .def(py::init<double, double, double, double, double>(), py::arg("omega1") = 0.5,
             py::arg("omega2") = 0.5, py::arg("lambda_") = 2e-3, py::arg("k") = 0.0,
             py::arg("delta") = 0.0)
        .def_readonly("omega1", &TwoModeParams::omega1)
        .def_readonly("omega2", &TwoModeParams::omega2)
        .def_readonly("lambda_", &TwoModeParams::lambda)
        .def_readonly("k", &TwoModeParams::k)
        .def_readonly("delta", &TwoModeParams::delta);

    m.def("eta_single", &eta_single, py::arg("n"), py::arg("k"));
    m.def("detuning_single", &detuning_single, py::arg("n"), py::arg("params"));
    m.def("rabi_single", &rabi_single, py::arg("n"), py::arg("params"));
    m.def("critical_detuning_single", &critical_detuning_single, py::arg("n_bar"), py::arg("params"));
    m.def("n_bar_single", &n_bar_single, py::arg("delta"), py::arg("params"));
    m.def("eta_two", &eta_two, py::arg("n"), py::arg("k"));
    m.def("detuning_two", &detuning_two, py::arg("n"), py::arg("params"));
    m.def("rabi_two", &rabi_two, py::arg("n"), py::arg("params"));
    m.def("critical_detuning_two", &critical_detuning_two, py::arg("n_bar_total"), py::arg("params"));

    py::class_<FockVector>(m, "FockVector")
        .def_readonly("amplitudes", &FockVector::amplitudes)
        .def_readonly("truncated_tail", &FockVector::truncated_tail)
        .def("n_max", &FockVector::n_max)
        .def("norm_sq", &FockVector::norm_sq);

    py::class_<PairedFockVector>(m, "PairedFockVector")
        .def_readonly("amplitudes", &PairedFockVector::amplitudes)
        .def_readonly("truncated_tail", &PairedFockVector::truncated_tail)
        .def("n_max", &PairedFockVector::n_max)
        .def("norm_sq", &PairedFockVector::norm_sq);

    m.def("coherent", &coherent, py::arg("alpha"), py::arg("n_max"),
          py::arg("tail_tol") = kDefaultTailTol);
    m.def("squeezed_vacuum", &squeezed_vacuum, py::arg("r"), py::arg("theta"), py::arg("n_max"),
          py::arg("tail_tol") = kDefaultTailTol);
    m.def("pair_coherent", &pair_coherent, py::arg("zeta"), py::arg("n_max"),
          py::arg("tail_tol") = kDefaultTailTol);
    m.def("two_mode_squeezed_vacuum", &two_mode_squeezed_vacuum, py::arg("r"), py::arg("n_max"),
          py::arg("tail_tol") = kDefaultTailTol);
    m.def("mean_photon_number", py::overload_cast<const FockVector&>(&mean_photon_number));
    m.def("mean_photon_number", py::overload_cast<const PairedFockVector&>(&mean_photon_number));
    m.def("auto_truncation", py::overload_cast<double, double>(&auto_truncation),
          py::arg("target_mean"), py::arg("tail_tol") = kDefaultTailTol);

    py::class_<SingleJointAmplitudes>(m, "SingleJointAmplitudes")
        .def_readonly("c_e", &SingleJointAmplitudes::c_e)
        .def_readonly("c_g", &SingleJointAmplitudes::c_g)
        .def_readonly("time", &SingleJointAmplitudes::time)
        .def("norm_sq", &SingleJointAmplitudes::norm_sq);

    py::class_<AtomDensity>(m, "AtomDensity")
        .def_readonly("ee", &AtomDensity::ee)
        .def_readonly("gg", &AtomDensity::gg)
        .def_readonly("eg", &AtomDensity::eg)
        .def("purity", &AtomDensity::purity)
        .def("linear_entropy", &AtomDensity::linear_entropy)
        .def("eigenvalues", &AtomDensity::eigenvalues);

    m.def("evolve_single",
          py::overload_cast<const FockVector&, const SingleModeParams&, double>(&evolve_single),
          py::arg("field0"), py::arg("params"), py::arg("t"));
    m.def("inversion_single", &inversion_single);
    m.def("atomic_density_single", &atomic_density_single);
    m.def("coherence_single", &coherence_single);
    m.def("linear_entropy_single", &linear_entropy_single);
    m.def("mean_linear_entropy", &mean_linear_entropy, py::arg("field0"), py::arg("params"),
          py::arg("T"), py::arg("dt"), py::call_guard<py::gil_scoped_release>());

    py::class_<PairedJointAmplitudes>(m, "PairedJointAmplitudes")
        .def_readonly("c_e", &PairedJointAmplitudes::c_e)
        .def_readonly("c_g", &PairedJointAmplitudes::c_g)
        .def_readonly("time", &PairedJointAmplitudes::time)
        .def("norm_sq", &PairedJointAmplitudes::norm_sq);

    py::class_<EntanglementRecord>(m, "EntanglementRecord")
        .def_readonly("time", &EntanglementRecord::time)
        .def_readonly("w_t", &EntanglementRecord::w_t)
        .def_readonly("tangle_a_ff", &EntanglementRecord::tangle_a_ff)
        .def_readonly("tangle_af1_f2", &EntanglementRecord::tangle_af1_f2)
        .def_readonly("tangle_af2_f1", &EntanglementRecord::tangle_af2_f1)
        .def_readonly("relative_entropy", &EntanglementRecord::relative_entropy)
        .def_readonly("coherence", &EntanglementRecord::coherence)
        .def("__repr__", [](const EntanglementRecord& r) {
            return "<EntanglementRecord t=" + std::to_string(r.time) +
                   " W=" + std::to_string(r.w_t) + " T_A_FF=" + std::to_string(r.tangle_a_ff) + ">";
        });

    m.def("evolve_two",
          py::overload_cast<const PairedFockVector&, const TwoModeParams&, double>(&evolve_two),
          py::arg("field0"), py::arg("params"), py::arg("t"));
    m.def("inversion_two", &inversion_two);
    m.def("atomic_density_two", &atomic_density_two);
    m.def("coherence_two", &coherence_two);
    m.def("tangle_a_ff", &tangle_a_ff);
    m.def("tangle_af1_f2", &tangle_af1_f2);
    m.def("tangle_af2_f1", &tangle_af2_f1);
    m.def("relative_entropy", &relative_entropy);
    m.def("measures_at", &measures_at);
    m.def("mean_measures", &mean_measures, py::arg("field0"), py::arg("params"), py::arg("T"),
          py::arg("dt"), py::call_guard<py::gil_scoped_release>());

    m.def("von_neumann_entropy", [](const std::vector<double>& p) {
        return von_neumann_entropy(std::span<const double>(p));
    });

    // oracle surface for cross-checking from python
    m.def("oracle_evolve_single",
          [](const FockVector& f, const SingleModeParams& p, double t) {
              const HermitianMatrix h = build_hamiltonian_single(p, f.n_max());
              const std::vector<cplx> psi0 =
                  pack_joint(f.amplitudes, std::vector<cplx>(f.amplitudes.size(), cplx(0, 0)));
              return integrate(h, psi0, t);
          },
          py::arg("field0"), py::arg("params"), py::arg("t"),
          "exp(-iHt) on the stacked basis [e-block, g-block]");
    m.def("oracle_evolve_two",
          [](const PairedFockVector& f, const TwoModeParams& p, double t) {
              const HermitianMatrix h = build_hamiltonian_two(p, f.n_max());
              const std::vector<cplx> psi0 =
                  pack_joint(f.amplitudes, std::vector<cplx>(f.amplitudes.size(), cplx(0, 0)));
              return integrate(h, psi0, t);
          },
          py::arg("field0"), py::arg("params"), py::arg("t"));
    m.def("check_algebra",
          [](int n_max, double k, int interior_dim) {
              return check_algebra(build_deformed_ops(n_max, k), interior_dim);
          },
          py::arg("n_max"), py::arg("k"), py::arg("interior_dim"));

    m.def("preset_names", &preset_names);
    m.def("describe_preset", [](const std::string& name) { return describe(preset(name)); });

#ifdef VERSION_INFO
#define NJC_STR(x) #x
#define NJC_XSTR(x) NJC_STR(x)
    m.attr("__version__") = NJC_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
