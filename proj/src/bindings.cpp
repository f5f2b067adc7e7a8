#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heatpen/analysis.hpp"
#include "heatpen/corrector.hpp"
#include "heatpen/penalty.hpp"
#include "heatpen/problem.hpp"
#include "heatpen/solver.hpp"

namespace py = pybind11;
using namespace heatpen;

namespace {

ProblemSpec make_problem(const Domain& domain, double nu, const TimeGrid& time,
                         const BoundaryMode& mode, const std::string& u0,
                         const std::string& g, const std::string& f) {
  ProblemSpec s;
  s.domain = domain;
  s.nu = nu;
  s.time = time;
  s.mode = mode;
  s.u0 = space_function(u0);
  s.g = time_signal(g);
  s.f = forcing(f);
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Explicit heat-equation solvers with penalty-relaxed boundary data";

  py::class_<Interval1D>(m, "Interval1D")
      .def(py::init<int>(), py::arg("n_cells"))
      .def_readonly("n_cells", &Interval1D::n_cells)
      .def_property_readonly("dx", &Interval1D::dx)
      .def("node_count", &Interval1D::node_count)
      .def("x", &Interval1D::x);

  py::class_<SquareGrid>(m, "SquareGrid")
      .def(py::init<int, int>(), py::arg("nx"), py::arg("ny"))
      .def_readonly("nx", &SquareGrid::nx)
      .def_readonly("ny", &SquareGrid::ny)
      .def_property_readonly("dx", &SquareGrid::dx)
      .def_property_readonly("dy", &SquareGrid::dy)
      .def("node_count", &SquareGrid::node_count)
      .def("index", &SquareGrid::index)
      .def("x", &SquareGrid::x)
      .def("y", &SquareGrid::y);

  py::class_<PolarGrid>(m, "PolarGrid")
      .def(py::init<int, int>(), py::arg("nr"), py::arg("ntheta"))
      .def_readonly("nr", &PolarGrid::nr)
      .def_readonly("ntheta", &PolarGrid::ntheta)
      .def_property_readonly("dr", &PolarGrid::dr)
      .def_property_readonly("dtheta", &PolarGrid::dtheta)
      .def("node_count", &PolarGrid::node_count)
      .def("index", &PolarGrid::index)
      .def("r", &PolarGrid::r)
      .def("theta", &PolarGrid::theta);

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init<int, double>(), py::arg("n_steps"), py::arg("t_end") = 1.0)
      .def_readonly("n_steps", &TimeGrid::n_steps)
      .def_readonly("t_end", &TimeGrid::t_end)
      .def_property_readonly("dt", &TimeGrid::dt)
      .def("time", &TimeGrid::time);

  py::class_<BoundaryMode>(m, "BoundaryMode")
      .def_static("direct", &BoundaryMode::direct)
      .def_static("penalty", &BoundaryMode::penalty, py::arg("epsilon"))
      .def_static("corrector", &BoundaryMode::corrector, py::arg("procedure"))
      .def_readonly("epsilon", &BoundaryMode::epsilon)
      .def_readonly("procedure", &BoundaryMode::procedure);

  py::class_<BoundaryNode>(m, "BoundaryNode")
      .def_readonly("node", &BoundaryNode::node)
      .def_readonly("x", &BoundaryNode::x)
      .def_readonly("y", &BoundaryNode::y);

  py::class_<ScalarField>(m, "ScalarField")
      .def_readonly("values", &ScalarField::values)
      .def("__len__", &ScalarField::size)
      .def("__getitem__",
           [](const ScalarField& f, std::size_t i) { return f.values.at(i); });

  py::class_<ProblemSpec>(m, "ProblemSpec")
      .def_readonly("nu", &ProblemSpec::nu)
      .def_readonly("time", &ProblemSpec::time)
      .def_readonly("mode", &ProblemSpec::mode);

  m.def("make_problem", &make_problem, py::arg("domain"), py::arg("nu"),
        py::arg("time"), py::arg("mode"), py::arg("u0"), py::arg("g") = "zero",
        py::arg("f") = "zero", "Assemble a problem from built-in function names");

  m.def("evaluate_initial", &evaluate_initial);
  m.def("boundary_nodes",
        [](const Domain& d) { return boundary_nodes(d); });

  py::class_<CflReport>(m, "CflReport")
      .def_readonly("lambda_", &CflReport::lambda)
      .def_readonly("stable", &CflReport::stable)
      .def_readonly("formula", &CflReport::formula);
  m.def("cfl_check", &cfl_check);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("snapshot_steps", &Trajectory::snapshot_steps)
      .def_readonly("snapshots", &Trajectory::snapshots)
      .def_readonly("boundary_history", &Trajectory::boundary_history)
      .def_readonly("penalty_warning", &Trajectory::penalty_warning)
      .def("at_step", &Trajectory::at_step, py::return_value_policy::reference_internal)
      .def("snapshot_time", &Trajectory::snapshot_time);

  m.def(
      "solve",
      [](const ProblemSpec& spec, std::optional<std::vector<int>> snapshot_steps) {
        SolveOptions opt;
        opt.snapshot_steps = std::move(snapshot_steps);
        return solve(spec, opt);
      },
      py::arg("spec"), py::arg("snapshot_steps") = std::nullopt);

  py::class_<PenaltyParams>(m, "PenaltyParams")
      .def(py::init([](double epsilon, double k0, const std::string& g) {
             return PenaltyParams{epsilon, k0, time_signal(g)};
           }),
           py::arg("epsilon"), py::arg("k0"), py::arg("g") = "zero")
      .def_readonly("epsilon", &PenaltyParams::epsilon)
      .def_readonly("k0", &PenaltyParams::k0);

  m.def("penalty_exact", &penalty_exact, py::arg("params"), py::arg("t"));
  m.def("penalty_step", &penalty_step, py::arg("k_n"), py::arg("g_n"),
        py::arg("epsilon"), py::arg("dt"));
  m.def("penalty_step_warns", &penalty_step_warns, py::arg("epsilon"), py::arg("dt"));
  m.def("inner_term", &inner_term, py::arg("order"), py::arg("params"), py::arg("t"));
  m.def("asymptotic_approx", &asymptotic_approx, py::arg("order"), py::arg("params"),
        py::arg("t"));

  py::class_<RemainderReport>(m, "RemainderReport")
      .def_readonly("order", &RemainderReport::order)
      .def_readonly("epsilon", &RemainderReport::epsilon)
      .def_readonly("l2_norm", &RemainderReport::l2_norm)
      .def_readonly("sup_norm", &RemainderReport::sup_norm);
  m.def("remainder_norms", &remainder_norms, py::arg("order"), py::arg("params"),
        py::arg("time"));

  m.def("s0", &s0, py::arg("x"), py::arg("t"), py::arg("nu"));
  m.def("s1", &s1, py::arg("x"), py::arg("t"), py::arg("nu"));
  m.def("s1_closed", &s1_closed, py::arg("x"), py::arg("t"), py::arg("nu"));

  py::class_<ErrorCurve>(m, "ErrorCurve")
      .def_readonly("times", &ErrorCurve::times)
      .def_readonly("max_error", &ErrorCurve::max_error)
      .def_readonly("mode", &ErrorCurve::mode)
      .def("peak", &ErrorCurve::peak)
      .def("initial_step_error", &ErrorCurve::initial_step_error)
      .def("final_step_error", &ErrorCurve::final_step_error);
  m.def("comparative_error", &comparative_error, py::arg("coarse"), py::arg("fine"));

  py::class_<RateFit>(m, "RateFit")
      .def_readonly("h", &RateFit::h)
      .def_readonly("error", &RateFit::error)
      .def_readonly("slope", &RateFit::slope)
      .def_readonly("residual", &RateFit::residual);
  m.def("fit_rate", &fit_rate, py::arg("points"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("epsilon", &SweepRow::epsilon)
      .def_readonly("initial_error", &SweepRow::initial_error)
      .def_readonly("final_error", &SweepRow::final_error)
      .def_readonly("warning", &SweepRow::warning);
  m.def("epsilon_sweep", &epsilon_sweep, py::arg("coarse_base"), py::arg("fine_base"),
        py::arg("epsilons"));

#ifdef HEATPEN_VERSION
  m.attr("__version__") = HEATPEN_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
