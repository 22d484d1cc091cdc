#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slspec/asymptotics.hpp"
#include "slspec/factorization.hpp"
#include "slspec/inverse.hpp"
#include "slspec/potentials.hpp"
#include "slspec/spectrum.hpp"
#include "slspec/tauseries.hpp"

namespace py = pybind11;
using namespace slspec;

namespace {

std::vector<cplx> node_values(const GridFunction& g) { return g.values; }

BoundaryCondition bc_of(const std::string& s)
{
    if (s == "dirichlet") return BoundaryCondition::dirichlet;
    if (s == "neumann") return BoundaryCondition::neumann;
    throw std::invalid_argument("bc must be 'dirichlet' or 'neumann'");
}

SystemForm form_of(const std::string& s)
{
    if (s == "sigma_form") return SystemForm::sigma_form;
    if (s == "tau_form") return SystemForm::tau_form;
    throw std::invalid_argument("form must be 'sigma_form' or 'tau_form'");
}

} // namespace

PYBIND11_MODULE(_slspec, m)
{
    m.doc() = "Spectra of Sturm-Liouville operators with singular potentials: "
              "forward solves, eigenvalue asymptotics and inverse reconstruction";

    py::class_<GridFunction>(m, "GridFunction")
        .def_readonly("cells", &GridFunction::cells)
        .def("values", &node_values)
        .def("value_at", &GridFunction::value_at)
        .def("__len__", [](const GridFunction& g) { return g.values.size(); });

    py::class_<PotentialSpec>(m, "PotentialSpec")
        .def_readwrite("h_offset", &PotentialSpec::h_offset)
        .def_readwrite("nominal_alpha", &PotentialSpec::nominal_alpha)
        .def_static("zero", &PotentialSpec::zero)
        .def_static("constant", &PotentialSpec::constant)
        .def_static("linear", &PotentialSpec::linear)
        .def_static("step", &PotentialSpec::step)
        .def_static("fourier_random", &PotentialSpec::fourier_random)
        .def_static("log_singularity", &PotentialSpec::log_singularity,
                    py::arg("strength"), py::arg("clip_epsilon") = 0.0)
        .def_static("from_file", &PotentialSpec::from_file);

    m.def("realize", &realize, py::arg("spec"), py::arg("M"));

    m.def("quadrature", [](const GridFunction& f) { return quadrature(f); });
    m.def("fourier_coeff", [](const GridFunction& f, int n, const std::string& kind) {
        return fourier_coeff(f, n, kind == "sine" ? SeqKind::sine : SeqKind::cosine);
    });

    m.def("char_value", [](const GridFunction& coeff, cplx lambda, const std::string& form,
                           const std::string& bc) {
        return char_value(coeff, lambda, form_of(form), bc_of(bc));
    });

    m.def("spectrum",
          [](const GridFunction& coeff, const std::string& form, const std::string& bc,
             int n_max) {
              const SpectralSequence seq =
                  locate_real(coeff, form_of(form), bc_of(bc), n_max);
              return seq.values;
          },
          py::arg("coeff"), py::arg("form"), py::arg("bc"), py::arg("n_max"),
          "Eigenvalue square roots of a real potential");

    m.def("spectrum_complex",
          [](const GridFunction& coeff, const std::string& form, const std::string& bc,
             int n_max) {
              return locate_complex(coeff, form_of(form), bc_of(bc), n_max).values;
          });

    m.def("factorize", [](const GridFunction& sigma) {
        const FactorizationResult fac = factorize(sigma);
        py::dict d;
        d["u"] = fac.u;
        d["phi"] = fac.phi;
        d["tau"] = fac.tau;
        d["tilde_phi"] = fac.tilde_phi;
        d["shift_C"] = fac.shift_C;
        d["riccati_residual"] = fac.riccati_residual;
        return d;
    });

    m.def("sigma_star",
          [](const std::vector<cplx>& lam_rem, const std::vector<cplx>& mu_rem, int M) {
              return sigma_star(CoeffSeq(SeqKind::plain, 1, lam_rem),
                                CoeffSeq(SeqKind::plain, 1, mu_rem), M);
          });

    m.def("detect_jumps", [](const GridFunction& star, int n_used) {
        std::vector<std::pair<double, cplx>> out;
        for (const auto& j : detect_jumps(star, n_used))
            out.emplace_back(j.position, j.size);
        return out;
    });

    m.def("estimate_decay", [](const std::vector<cplx>& values, int n_min, int n_max) {
        const DecayEstimate e = estimate_decay(CoeffSeq(SeqKind::plain, 1, values), n_min, n_max);
        py::dict d;
        d["exponent"] = e.exponent;
        d["capped"] = e.capped;
        d["all_zero"] = e.all_zero;
        return d;
    });

    m.def("weighted_norm", [](const std::vector<cplx>& values, double p, double s) {
        return weighted_norm(CoeffSeq(SeqKind::plain, 1, values), p, s);
    });
}
