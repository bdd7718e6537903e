#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgas/errors.hpp"
#include "qgas/gas_statistics.hpp"
#include "qgas/regime.hpp"
#include "qgas/special_functions.hpp"
#include "qgas/sweep_report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

qgas::FermiSeries parse_series(const std::string& name) {
    if (name == "truncated") return qgas::FermiSeries::Truncated;
    if (name == "full") return qgas::FermiSeries::Full;
    throw qgas::PreconditionError("series must be 'full' or 'truncated', got '" + name + "'");
}

qgas::SweepMode parse_mode(const std::string& name) {
    if (name == "paper") return qgas::SweepMode::Paper;
    if (name == "self") return qgas::SweepMode::Self;
    if (name == "both") return qgas::SweepMode::Both;
    throw qgas::PreconditionError("mode must be 'paper', 'self' or 'both', got '" + name + "'");
}

qgas::OccupationBranch parse_occupation_branch(const std::string& name) {
    if (name == "bose") return qgas::OccupationBranch::Bose;
    if (name == "fermi") return qgas::OccupationBranch::Fermi;
    throw qgas::PreconditionError("branch must be 'bose' or 'fermi', got '" + name + "'");
}

qgas::SeriesBranch parse_series_branch(const std::string& name) {
    if (name == "bose") return qgas::SeriesBranch::Bose;
    if (name == "fermi-full") return qgas::SeriesBranch::FermiFull;
    if (name == "fermi-truncated") return qgas::SeriesBranch::FermiTruncated;
    throw qgas::PreconditionError("branch must be bose, fermi-full or fermi-truncated");
}

std::optional<std::string> label_name(const std::optional<qgas::RegimeLabel>& label) {
    if (!label) return std::nullopt;
    return std::string(qgas::to_string(*label));
}

py::dict row_dict(const qgas::SweepRow& row) {
    return py::dict("p0"_a = row.p0, "K"_a = row.coupling, "paper_label"_a = row.paper_label,
                    "selfconsistent_label"_a = row.selfconsistent_label, "branch"_a = row.branch,
                    "z"_a = row.z, "z_prime"_a = row.z_prime, "b"_a = row.b,
                    "flags"_a = row.flags);
}

qgas::SweepSpec make_spec(double p_min, double p_max, int steps, const std::string& mode,
                          const std::string& series, double window, double tol) {
    qgas::SweepSpec spec;
    spec.p_min = p_min;
    spec.p_max = p_max;
    spec.steps = steps;
    spec.mode = parse_mode(mode);
    spec.series = parse_series(series);
    spec.window = window;
    spec.tol = tol;
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mono-energetic ideal Bose gas: polylogarithms, self-consistency and regimes";

    py::register_exception<qgas::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<qgas::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<qgas::TruncationError>(m, "TruncationError", PyExc_ArithmeticError);
    py::register_exception<qgas::ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

    m.attr("ZETA_3_2") = qgas::kZeta32;
    m.attr("FOUR_PI_POW_5_2") = qgas::kFourPiPow52;

    // special functions
    m.def("bose_g32",
          [](double z, double tolerance, std::size_t max_terms) {
              return qgas::bose_g32(qgas::Fugacity(z), {tolerance, max_terms});
          },
          "z"_a, "tolerance"_a = 1e-12, "max_terms"_a = 100000);
    m.def("fermi_f32_full",
          [](double z, double tolerance, std::size_t max_terms) {
              return qgas::fermi_f32_full(qgas::Fugacity(z), {tolerance, max_terms});
          },
          "z"_a, "tolerance"_a = 1e-12, "max_terms"_a = 100000);
    m.def("fermi_f32_truncated", [](double z) { return qgas::fermi_f32_truncated(qgas::Fugacity(z)); },
          "z"_a);
    m.def("bose_g32_quadrature",
          [](double z) { return qgas::bose_g32_quadrature(qgas::Fugacity(z)); }, "z"_a);

    // gas statistics
    py::class_<qgas::MonoEnergeticState>(m, "MonoEnergeticState")
        .def_readonly("p0", &qgas::MonoEnergeticState::p0)
        .def_readonly("temperature", &qgas::MonoEnergeticState::temperature)
        .def_readonly("lambda_", &qgas::MonoEnergeticState::lambda)
        .def_readonly("beta_eps", &qgas::MonoEnergeticState::beta_eps);

    py::class_<qgas::FugacityPair>(m, "FugacityPair")
        .def_readonly("z", &qgas::FugacityPair::z)
        .def_readonly("z_prime", &qgas::FugacityPair::z_prime)
        .def_readonly("b", &qgas::FugacityPair::b)
        .def("__repr__", [](const qgas::FugacityPair& p) {
            return "FugacityPair(z=" + qgas::format_number(p.z) +
                   ", z_prime=" + qgas::format_number(p.z_prime) +
                   ", b=" + qgas::format_number(p.b) + ")";
        });

    m.def("occupation_bose", &qgas::occupation_bose, "z"_a, "beta_eps"_a);
    m.def("occupation_fermi", &qgas::occupation_fermi, "z"_a, "beta_eps"_a);
    m.def("mono_energetic_state",
          [](double p0, double hbar, double mass, double boltzmann) {
              return qgas::mono_energetic_state(p0, {hbar, mass, boltzmann});
          },
          "p0"_a, "hbar"_a = 1.0, "mass"_a = 1.0, "boltzmann"_a = 1.0);
    m.def("reduced_fugacity", &qgas::reduced_fugacity, "lambda_"_a, "specific_volume"_a);
    m.def("b_factor",
          [](double z, const std::string& branch) {
              return qgas::b_factor(z, parse_series_branch(branch));
          },
          "z"_a, "branch"_a = "bose");
    m.def("specific_volume_from_constraint",
          [](double p0, double z, double hbar) {
              return qgas::specific_volume_from_constraint(p0, z, {hbar, 1.0, 1.0});
          },
          "p0"_a, "z"_a, "hbar"_a = 1.0);

    // regime
    m.def("coupling_from_momentum", [](double p0) { return qgas::coupling_from_momentum(p0).value(); },
          "p0"_a);
    m.def("bose_residual",
          [](double z, double k) {
              return qgas::bose_residual(qgas::Fugacity(z), qgas::CouplingK(k));
          },
          "z"_a, "K"_a);
    m.def("fermi_residual",
          [](double z, double k, const std::string& series) {
              return qgas::fermi_residual(qgas::Fugacity(z), qgas::CouplingK(k),
                                          parse_series(series));
          },
          "z"_a, "K"_a, "series"_a = "truncated");
    m.def("solve_bose",
          [](double k, double tol) -> std::optional<double> {
              const auto outcome = qgas::solve_bose(qgas::CouplingK(k), tol);
              if (!outcome.has_root()) return std::nullopt;
              return outcome.z;
          },
          "K"_a, "tol"_a = qgas::kDefaultSolverTol, "Root z, or None outside (e, H(1)].");
    m.def("solve_fermi",
          [](double k, const std::string& series, double tol) -> std::optional<double> {
              const auto outcome = qgas::solve_fermi(qgas::CouplingK(k), parse_series(series), tol);
              if (!outcome.has_root()) return std::nullopt;
              return outcome.z;
          },
          "K"_a, "series"_a = "truncated", "tol"_a = qgas::kDefaultSolverTol);
    m.def("threshold_condensation", &qgas::threshold_condensation, "b"_a);
    m.def("threshold_dilution", &qgas::threshold_dilution, "b"_a);
    m.def("condensation_fugacity", [](double tol) { return qgas::condensation_fugacity(tol); },
          "tol"_a = 1e-12);

    py::class_<qgas::RegimeReport>(m, "RegimeReport")
        .def_readonly("p0", &qgas::RegimeReport::p0)
        .def_property_readonly("K", [](const qgas::RegimeReport& r) { return r.coupling.value(); })
        .def_property_readonly("paper_label",
                               [](const qgas::RegimeReport& r) { return label_name(r.paper_label); })
        .def_property_readonly(
            "selfconsistent_label",
            [](const qgas::RegimeReport& r) { return label_name(r.selfconsistent_label); })
        .def_property_readonly(
            "branch", [](const qgas::RegimeReport& r) { return std::string(qgas::to_string(r.branch)); })
        .def_readonly("fugacity", &qgas::RegimeReport::fugacity)
        .def_property_readonly("flags",
                               [](const qgas::RegimeReport& r) {
                                   std::vector<std::string> out;
                                   for (auto name : r.flags.names()) out.emplace_back(name);
                                   return out;
                               })
        .def_property_readonly("labels_disagree", &qgas::RegimeReport::labels_disagree);

    m.def("classify_paper", &qgas::classify_paper, "p0"_a, "window"_a = qgas::kDefaultWindow);
    m.def("classify_selfconsistent",
          [](double p0, const std::string& series, double tol) {
              return qgas::classify_selfconsistent(p0, parse_series(series), tol);
          },
          "p0"_a, "series"_a = "truncated", "tol"_a = qgas::kDefaultSolverTol);
    m.def("classify_both",
          [](double p0, double window, const std::string& series, double tol) {
              return qgas::classify_both(p0, window, parse_series(series), tol);
          },
          "p0"_a, "window"_a = qgas::kDefaultWindow, "series"_a = "truncated",
          "tol"_a = qgas::kDefaultSolverTol);

    // sweep
    m.def("run_sweep",
          [](double p_min, double p_max, int steps, const std::string& mode,
             const std::string& series, double window, double tol) {
              py::list out;
              for (const auto& row : qgas::run_sweep(make_spec(p_min, p_max, steps, mode, series, window, tol))) {
                  out.append(row_dict(row));
              }
              return out;
          },
          "p_min"_a, "p_max"_a, "steps"_a, "mode"_a = "both", "series"_a = "truncated",
          "window"_a = qgas::kDefaultWindow, "tol"_a = qgas::kDefaultSolverTol);
    m.def("sweep_csv",
          [](double p_min, double p_max, int steps, const std::string& mode,
             const std::string& series, double window, double tol) {
              return qgas::emit_csv(qgas::run_sweep(make_spec(p_min, p_max, steps, mode, series, window, tol)));
          },
          "p_min"_a, "p_max"_a, "steps"_a, "mode"_a = "both", "series"_a = "truncated",
          "window"_a = qgas::kDefaultWindow, "tol"_a = qgas::kDefaultSolverTol);
    m.def("sweep_json",
          [](double p_min, double p_max, int steps, const std::string& mode,
             const std::string& series, double window, double tol) {
              return qgas::emit_json(qgas::run_sweep(make_spec(p_min, p_max, steps, mode, series, window, tol)));
          },
          "p_min"_a, "p_max"_a, "steps"_a, "mode"_a = "both", "series"_a = "truncated",
          "window"_a = qgas::kDefaultWindow, "tol"_a = qgas::kDefaultSolverTol);
    m.def("occupation_curve",
          [](double z, double beta_eps_min, double beta_eps_max, int steps, const std::string& branch) {
              std::vector<std::pair<double, double>> out;
              for (const auto& p : qgas::occupation_curve(z, beta_eps_min, beta_eps_max, steps,
                                                          parse_occupation_branch(branch))) {
                  out.emplace_back(p.beta_eps, p.occupation);
              }
              return out;
          },
          "z"_a, "beta_eps_min"_a, "beta_eps_max"_a, "steps"_a, "branch"_a = "bose");
}
