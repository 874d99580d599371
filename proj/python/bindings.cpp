#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fragcat/cli.hpp"
#include "fragcat/correlations.hpp"
#include "fragcat/observables.hpp"
#include "fragcat/states.hpp"

namespace py = pybind11;
using namespace fragcat;

namespace {

LadderKind ladder_from_string(const std::string& kind) {
  if (kind == "b" || kind == "B") return LadderKind::B;
  if (kind == "b'" || kind == "bprime" || kind == "B_PRIME") {
    return LadderKind::BPrime;
  }
  throw std::invalid_argument("ladder kind must be 'b' or 'bprime'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact two-mode fragmented-condensate states, cat-state observables "
      "and density-density correlation grids";

  py::class_<TwoModeState>(m, "TwoModeState")
      .def(py::init<int, std::vector<cplx>, std::string>(),
           py::arg("n_particles"), py::arg("amplitudes"),
           py::arg("label") = "custom")
      .def_static("basis", &TwoModeState::basis, py::arg("n_particles"),
                  py::arg("l"))
      .def_property_readonly("n_particles", &TwoModeState::n_particles)
      .def_property_readonly("amplitudes", &TwoModeState::amplitudes)
      .def_property_readonly("label", &TwoModeState::label)
      .def("amplitude", &TwoModeState::amplitude, py::arg("l"))
      .def("__repr__", [](const TwoModeState& s) {
        return "<TwoModeState N=" + std::to_string(s.n_particles()) + " '" +
               s.label() + "'>";
      });

  m.def(
      "make_coherent",
      [](int n, double beta_sq, double phi_beta) {
        return make_coherent({beta_sq, phi_beta, n});
      },
      py::arg("n_particles"), py::arg("beta_sq"), py::arg("phi_beta") = 0.0);
  m.def(
      "make_coherent_prime",
      [](int n, double beta_sq, double phi_beta) {
        return make_coherent_prime({beta_sq, phi_beta, n});
      },
      py::arg("n_particles"), py::arg("beta_sq"), py::arg("phi_beta") = 0.0);
  m.def(
      "make_phase_state",
      [](int n, double l0, double phi) {
        return make_phase_state({phi, n, l0});
      },
      py::arg("n_particles"), py::arg("l0"), py::arg("phi") = 0.0);
  m.def(
      "make_gaussian_fragmented",
      [](int n, double l0, double u, double theta_k, double sigma, double phi0,
         double boundary_tol) {
        return make_gaussian_fragmented(
            {n, l0, sigma, u, theta_k, phi0, boundary_tol});
      },
      py::arg("n_particles"), py::arg("l0"), py::arg("u"),
      py::arg("theta_k") = 0.0, py::arg("sigma") = 0.0, py::arg("phi0") = 0.0,
      py::arg("boundary_tol") = 1e-6);
  m.def(
      "make_cat",
      [](int n, double beta_sq, double r, double theta, double phi_beta) {
        return make_cat({beta_sq, phi_beta, n, r, theta});
      },
      py::arg("n_particles"), py::arg("beta_sq"), py::arg("r") = 1.0,
      py::arg("theta") = 1.5707963267948966,
      py::arg("phi_beta") = 1.5707963267948966);

  m.def("lambda_beta", &lambda_beta, py::arg("beta_sq"));
  m.def(
      "kangsoo_to_cat",
      [](double u, double theta_k, double lb) {
        const CatPolar p = kangsoo_to_cat({u, theta_k, lb});
        return py::make_tuple(p.r, p.theta);
      },
      py::arg("u"), py::arg("theta_k"), py::arg("lambda_beta"));
  m.def(
      "cat_to_kangsoo",
      [](double r, double theta, double lb) {
        const KangsooParams k = cat_to_kangsoo(r, theta, lb);
        return py::make_tuple(k.u_mod, k.theta_k);
      },
      py::arg("r"), py::arg("theta"), py::arg("lambda_beta"));

  m.def(
      "apply_monomial",
      [](const TwoModeState& s, const std::string& op) {
        return apply_monomial(s, ModeMonomial::parse(op));
      },
      py::arg("state"), py::arg("monomial"),
      "Unnormalized coefficient vector of (monomial)|state>, e.g. 'a0+ a1'");
  m.def(
      "expectation",
      [](const TwoModeState& s, const std::string& op) {
        return expectation(s, ModeMonomial::parse(op));
      },
      py::arg("state"), py::arg("monomial"));
  m.def("inner", &inner, py::arg("a"), py::arg("b"));
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));

  m.def(
      "apply_ladder",
      [](const TwoModeState& s, const std::string& kind, bool dagger) {
        return apply_ladder(s, ladder_from_string(kind), dagger);
      },
      py::arg("state"), py::arg("kind") = "b", py::arg("dagger") = false);
  m.def(
      "commutator_deficit",
      [](const TwoModeState& s, const std::string& kind) {
        return commutator_deficit(s, ladder_from_string(kind));
      },
      py::arg("state"), py::arg("kind") = "b");
  m.def(
      "commutator_deficit_closed",
      [](const TwoModeState& s, const std::string& kind) {
        return commutator_deficit_closed(s, ladder_from_string(kind));
      },
      py::arg("state"), py::arg("kind") = "b");
  m.def("robustness_loss", &robustness_loss, py::arg("beta_sq"),
        py::arg("n_particles"), py::arg("n"));
  m.def("tof_rotate", &tof_rotate, py::arg("state"), py::arg("varphi"));

  py::class_<Spdm>(m, "Spdm")
      .def_readonly("m00", &Spdm::m00)
      .def_readonly("m01", &Spdm::m01)
      .def_readonly("m10", &Spdm::m10)
      .def_readonly("m11", &Spdm::m11)
      .def_readonly("lambda0", &Spdm::lambda0)
      .def_readonly("lambda1", &Spdm::lambda1)
      .def_readonly("frag_degree", &Spdm::frag_degree);
  m.def("spdm", &spdm, py::arg("state"));

  py::class_<QuadratureReport>(m, "QuadratureReport")
      .def_readonly("mean_b", &QuadratureReport::mean_b)
      .def_readonly("mean_b_dagger", &QuadratureReport::mean_b_dagger)
      .def_readonly("mean_plus", &QuadratureReport::mean_plus)
      .def_readonly("mean_minus", &QuadratureReport::mean_minus)
      .def_readonly("var_plus", &QuadratureReport::var_plus)
      .def_readonly("var_minus", &QuadratureReport::var_minus);
  m.def(
      "quadratures_exact",
      [](const TwoModeState& s, const std::string& kind) {
        return quadratures_exact(s, ladder_from_string(kind));
      },
      py::arg("state"), py::arg("kind") = "b");
  m.def("quadratures_asymptotic", &quadratures_asymptotic, py::arg("beta_sq"),
        py::arg("phi_beta"), py::arg("r"));

  m.def(
      "antipodal_overlap",
      [](double beta_sq, int n) {
        const OverlapResult o = antipodal_overlap(beta_sq, n);
        return py::make_tuple(o.exact, o.asymptotic);
      },
      py::arg("beta_sq"), py::arg("n_particles"));
  m.def("cat_size", &cat_size, py::arg("frag_degree"), py::arg("n_particles"));
  m.def("cat_size_from_overlap", &cat_size_from_overlap,
        py::arg("overlap_exact"));
  m.def(
      "coherent_phase_distribution",
      [](double phi, int n, double l0, int samples) {
        const PhaseDistribution d =
            coherent_phase_distribution(phi, n, l0, samples);
        return py::make_tuple(d.phi_beta, d.magnitude);
      },
      py::arg("phi"), py::arg("n_particles"), py::arg("l0"),
      py::arg("n_samples") = 360);

  py::class_<OrbitalPair>(m, "OrbitalPair")
      .def_static("harmonic", &OrbitalPair::harmonic)
      .def_readonly("name", &OrbitalPair::name)
      .def("psi0", [](const OrbitalPair& o, double z) { return o.psi0(z); })
      .def("psi1", [](const OrbitalPair& o, double z) { return o.psi1(z); });

  py::class_<CorrelationGrid>(m, "CorrelationGrid")
      .def_property_readonly("z",
                             [](const CorrelationGrid& g) { return g.z; })
      .def_readonly("state_label", &CorrelationGrid::state_label)
      .def_readonly("varphi", &CorrelationGrid::varphi)
      .def_readonly("method", &CorrelationGrid::method)
      .def("at", py::overload_cast<int, int>(&CorrelationGrid::at, py::const_),
           py::arg("i"), py::arg("j"))
      .def("abs_max", &CorrelationGrid::abs_max)
      .def_property_readonly("values", [](const CorrelationGrid& g) {
        std::vector<std::vector<double>> rows;
        rows.reserve(static_cast<std::size_t>(g.size()));
        for (int i = 0; i < g.size(); ++i) {
          std::vector<double> row(static_cast<std::size_t>(g.size()));
          for (int j = 0; j < g.size(); ++j) {
            row[static_cast<std::size_t>(j)] = g.at(i, j);
          }
          rows.push_back(std::move(row));
        }
        return rows;
      });

  m.def("linspace", &linspace, py::arg("lo"), py::arg("hi"), py::arg("n"));
  m.def(
      "density",
      [](const TwoModeState& s, double z) {
        return density(s, OrbitalPair::harmonic(), z);
      },
      py::arg("state"), py::arg("z"));
  m.def(
      "delta_rho2_exact",
      [](const TwoModeState& s, const std::vector<double>& z, double varphi) {
        return delta_rho2_exact(s, OrbitalPair::harmonic(), z, varphi);
      },
      py::arg("state"), py::arg("z_samples"), py::arg("varphi") = 0.0);
  m.def(
      "delta_rho2_asymptotic",
      [](int n, double l0, double r, double varphi,
         const std::vector<double>& z) {
        return delta_rho2_asymptotic(n, l0, r, varphi,
                                     OrbitalPair::harmonic(), z);
      },
      py::arg("n_particles"), py::arg("l0"), py::arg("r"), py::arg("varphi"),
      py::arg("z_samples"));
  m.def(
      "rho2_correlator",
      [](const TwoModeState& s, const std::vector<double>& z, double varphi) {
        return rho2_correlator(s, OrbitalPair::harmonic(), z, varphi);
      },
      py::arg("state"), py::arg("z_samples"), py::arg("varphi") = 0.0);

#ifdef FRAGCAT_VERSION
  m.attr("__version__") = FRAGCAT_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
