#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superchsh/checks.hpp"
#include "superchsh/json_io.hpp"
#include "superchsh/optimizer.hpp"

namespace py = pybind11;
using namespace superchsh;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Superqubit CHSH game: Grassmann algebra, UOSp(1|2) states, "
              "probability maps, game evaluation and optimization";
    m.attr("__version__") = kVersion;

    py::register_exception<ExtractionError>(m, "ExtractionError");

    py::enum_<Party>(m, "Party").value("A", Party::A).value("B", Party::B);

    py::enum_<Parity>(m, "Parity")
        .value("Zero", Parity::Zero)
        .value("Even", Parity::Even)
        .value("Odd", Parity::Odd)
        .value("Mixed", Parity::Mixed);

    py::enum_<Basis>(m, "Basis")
        .value("Dot", Basis::Dot)
        .value("Zero", Basis::Zero)
        .value("One", Basis::One);

    py::enum_<MapKind>(m, "MapKind")
        .value("DeWitt", MapKind::DeWitt)
        .value("Trigonometric", MapKind::Trigonometric)
        .value("ModifiedRogers", MapKind::ModifiedRogers);

    py::enum_<TrigScale>(m, "TrigScale")
        .value("Rotation", TrigScale::Rotation)
        .value("State", TrigScale::State);

    py::class_<Supernumber>(m, "Supernumber")
        .def(py::init<>())
        .def(py::init<double>())
        .def(py::init<const Complex&>())
        .def_static("monomial", &Supernumber::monomial, py::arg("mask"), py::arg("coeff"))
        .def_static("generator", &Supernumber::generator, py::arg("index"))
        .def("coeff", &Supernumber::coeff, py::arg("mask"))
        .def("involution", &Supernumber::involution)
        .def("body", &Supernumber::body)
        .def("rogers", &Supernumber::rogers)
        .def("parity", &Supernumber::parity)
        .def("is_zero", &Supernumber::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(py::self * Complex())
        .def(Complex() * py::self)
        .def(py::self == py::self)
        .def("__repr__", &Supernumber::to_string);

    m.def("theta", &theta, py::arg("party"));
    m.def("theta_hash", &theta_hash, py::arg("party"));
    m.def("mul", [](const Supernumber& a, const Supernumber& b) { return a * b; });
    m.def("involution", [](const Supernumber& a) { return a.involution(); });
    m.def("body", [](const Supernumber& a) { return a.body(); });
    m.def("rogers", [](const Supernumber& a) { return a.rogers(); });
    m.def("parity", [](const Supernumber& a) { return a.parity(); });
    m.def("max_coeff_dist", &max_coeff_dist);

    py::class_<SuperMatrix>(m, "SuperMatrix")
        .def(py::init<>())
        .def_static("identity", &SuperMatrix::identity)
        .def("at", [](const SuperMatrix& s, Basis r, Basis c) { return s.at(r, c); },
             py::arg("row"), py::arg("col"))
        .def("set",
             [](SuperMatrix& s, Basis r, Basis c, const Supernumber& v) { s.at(r, c) = v; })
        .def(py::self * py::self);

    py::class_<SuperKet3>(m, "SuperKet3")
        .def(py::init<>())
        .def("component", [](const SuperKet3& k, Basis b) { return k[b]; })
        .def_readwrite("party", &SuperKet3::party)
        .def("__rmul__",
             [](const SuperKet3& v, const SuperMatrix& z) { return z * v; });

    py::class_<SuperKet9>(m, "SuperKet9")
        .def(py::init<>())
        .def("component", [](const SuperKet9& k, Basis m, Basis n) { return k.at(m, n); })
        .def("set",
             [](SuperKet9& k, Basis m, Basis n, const Supernumber& v) { k.at(m, n) = v; })
        .def("__repr__", &SuperKet9::to_string);

    m.def("s_element", &s_element, py::arg("r"), py::arg("party"));
    m.def("u_element", &u_element, py::arg("angle"));
    m.def("superqubit_state", &superqubit_state, py::arg("alpha"), py::arg("beta"),
          py::arg("r"), py::arg("party") = Party::A);
    m.def("graded_adjoint", py::overload_cast<const SuperMatrix&>(&graded_adjoint));
    m.def("gamma_state", &gamma_state, py::arg("p"), py::arg("q"));
    m.def("apply_local", &apply_local, py::arg("z_a"), py::arg("z_b"), py::arg("state"));
    m.def("grassmann_prob",
          py::overload_cast<Basis, Basis, const SuperKet9&>(&grassmann_prob));
    m.def("grassmann_prob", py::overload_cast<Basis, const SuperKet3&>(&grassmann_prob));
    m.def("apply", [](const SuperMatrix& z, const SuperKet3& v) { return z * v; });

    py::class_<TrigContext>(m, "TrigContext")
        .def(py::init([](double rho_a, double rho_b) {
                 return TrigContext{rho_a, rho_b};
             }),
             py::arg("rho_a"), py::arg("rho_b"))
        .def_readwrite("rho_a", &TrigContext::rho_a)
        .def_readwrite("rho_b", &TrigContext::rho_b);

    m.def("extract", &extract, py::arg("kind"), py::arg("p_g"),
          py::arg("ctx") = std::nullopt);

    py::class_<GameParameters>(m, "GameParameters")
        .def(py::init([](double p, double q, double r0, double r1, double s0, double s1,
                         double a0, double a1, double b0, double b1) {
                 return GameParameters{p, q, r0, r1, s0, s1, a0, a1, b0, b1};
             }),
             py::arg("p") = 0.0, py::arg("q") = 0.0, py::arg("r0") = 0.0,
             py::arg("r1") = 0.0, py::arg("s0") = 0.0, py::arg("s1") = 0.0,
             py::arg("a0") = 0.0, py::arg("a1") = 0.0, py::arg("b0") = 0.0,
             py::arg("b1") = 0.0)
        .def_readwrite("p", &GameParameters::p)
        .def_readwrite("q", &GameParameters::q)
        .def_readwrite("r0", &GameParameters::r0)
        .def_readwrite("r1", &GameParameters::r1)
        .def_readwrite("s0", &GameParameters::s0)
        .def_readwrite("s1", &GameParameters::s1)
        .def_readwrite("a0", &GameParameters::a0)
        .def_readwrite("a1", &GameParameters::a1)
        .def_readwrite("b0", &GameParameters::b0)
        .def_readwrite("b1", &GameParameters::b1)
        .def("as_array", &GameParameters::as_array)
        .def("__repr__", [](const GameParameters& p) { return to_json(p).dump(); });

    py::class_<GameOptions>(m, "GameOptions")
        .def(py::init<>())
        .def_readwrite("experimental_trig", &GameOptions::experimental_trig)
        .def_readwrite("trig_scale", &GameOptions::trig_scale);

    m.def("is_winning_cell", &is_winning_cell, py::arg("i"), py::arg("j"), py::arg("m"),
          py::arg("n"));
    m.def("outcome_tables", &outcome_tables, py::arg("params"), py::arg("map"),
          py::arg("opts") = GameOptions{});
    m.def("win_probability", &win_probability, py::arg("tables"));
    m.def("classical_best", &classical_best);
    m.def("quantum_baseline", &quantum_baseline);
    m.def("paper_winning_parameters", &paper_winning_parameters);
    m.def("zero_parameters", &zero_parameters);

    py::class_<GameReport>(m, "GameReport")
        .def_readonly("map", &GameReport::map)
        .def_readonly("params", &GameReport::params)
        .def_readonly("tables", &GameReport::tables)
        .def_readonly("p_win", &GameReport::p_win)
        .def_readonly("feasible", &GameReport::feasible)
        .def_readonly("worst_violation", &GameReport::worst_violation)
        .def("__repr__", [](const GameReport& r) { return report_to_json(r, 0).dump(); });

    m.def("play_game", &play_game, py::arg("params"), py::arg("map"),
          py::arg("opts") = GameOptions{}, py::arg("feasibility_tol") = 1e-8);

    py::class_<OptConfig>(m, "OptConfig")
        .def(py::init<>())
        .def_readwrite("restarts", &OptConfig::restarts)
        .def_readwrite("max_iters", &OptConfig::max_iters)
        .def_readwrite("seed", &OptConfig::seed)
        .def_readwrite("penalty_weights", &OptConfig::penalty_weights)
        .def_readwrite("feasibility_tol", &OptConfig::feasibility_tol)
        .def_readwrite("box", &OptConfig::box)
        .def_readwrite("map", &OptConfig::map)
        .def_readwrite("game", &OptConfig::game)
        .def_readwrite("threads", &OptConfig::threads);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("best", &OptResult::best)
        .def_readonly("p_win", &OptResult::p_win)
        .def_readonly("feasible", &OptResult::feasible)
        .def_readonly("restarts_run", &OptResult::restarts_run)
        .def_readonly("history", &OptResult::history);

    m.def("optimize", &optimize, py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());
    m.def("feasibility", &feasibility, py::arg("params"), py::arg("map"),
          py::arg("opts") = GameOptions{}, py::arg("tol") = 1e-8);
    m.def("evaluate_paper_params", &evaluate_paper_params, py::arg("map"));

    py::class_<checks::CheckResult>(m, "CheckResult")
        .def_readonly("name", &checks::CheckResult::name)
        .def_readonly("pass_", &checks::CheckResult::pass)
        .def_readonly("worst", &checks::CheckResult::worst)
        .def_readonly("detail", &checks::CheckResult::detail);

    m.def("run_checks", &checks::run_all, py::arg("seed") = 0);
}
