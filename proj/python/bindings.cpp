#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "rendezvous/analysis.hpp"
#include "rendezvous/analytic.hpp"
#include "rendezvous/errors.hpp"
#include "rendezvous/optimize.hpp"
#include "rendezvous/simulate.hpp"

namespace py = pybind11;
using namespace rendezvous;

namespace {

// k may be a positive int, math.inf or the string "inf".
StepCount steps_from(const py::object& k)
{
    if (py::isinstance<py::str>(k)) {
        if (k.cast<std::string>() == "inf") {
            return StepCount::unbounded();
        }
        throw py::value_error("k must be a positive int or 'inf'");
    }
    if (py::isinstance<py::float_>(k)) {
        const double v = k.cast<double>();
        if (std::isinf(v) && v > 0) {
            return StepCount::unbounded();
        }
        throw py::value_error("k must be a positive int or 'inf'");
    }
    return StepCount::finite(k.cast<std::int64_t>());
}

py::object steps_to(StepCount s)
{
    if (s.is_unbounded()) {
        return py::str("inf");
    }
    return py::int_(s.count());
}

CompetitiveRatioCurve named_curve(const std::string& name)
{
    if (name == "naive") {
        return naive_curve;
    }
    if (name == "one-rb") {
        return one_rb_curve;
    }
    if (name == "one-step") {
        return one_step_curve;
    }
    if (name == "unbounded") {
        return unbounded_curve;
    }
    if (name == "greedy-bisector") {
        return greedy_bisector_ratio;
    }
    throw py::value_error("unknown curve '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Symmetric rendezvous in a disk: analytic formulas, optimizers and simulator.";

    py::register_exception<DegenerateInstanceError>(m, "DegenerateInstanceError", PyExc_ValueError);
    py::register_exception<InvalidStrategyError>(m, "InvalidStrategyError", PyExc_ValueError);
    py::register_exception<NumericDomainError>(m, "NumericDomainError", PyExc_ArithmeticError);
    py::register_exception<OutOfValidatedRangeError>(m, "OutOfValidatedRangeError", PyExc_ValueError);

    py::class_<Instance>(m, "Instance")
        .def_static("from_alpha", &Instance::from_alpha, py::arg("alpha"))
        .def_static("from_rho", &Instance::from_rho, py::arg("rho"))
        .def_property_readonly("alpha", &Instance::alpha)
        .def_property_readonly("rho", &Instance::rho)
        .def("__repr__", [](const Instance& i) {
            return "Instance(alpha=" + std::to_string(i.alpha()) + ", rho=" + std::to_string(i.rho()) + ")";
        });

    py::class_<Strategy>(m, "Strategy")
        .def(py::init([](const py::object& k, double beta, double gamma) {
                 return Strategy{steps_from(k), beta, gamma};
             }),
             py::arg("k"), py::arg("beta"), py::arg("gamma"))
        .def_property(
            "k", [](const Strategy& s) { return steps_to(s.steps); },
            [](Strategy& s, const py::object& k) { s.steps = steps_from(k); })
        .def_readwrite("beta", &Strategy::beta)
        .def_readwrite("gamma", &Strategy::gamma)
        .def("__repr__", [](const Strategy& s) {
            return "Strategy(k=" + s.steps.to_string() + ", beta=" + std::to_string(s.beta) +
                   ", gamma=" + std::to_string(s.gamma) + ")";
        });

    py::class_<DartingGeometry>(m, "DartingGeometry")
        .def_readonly("w", &DartingGeometry::w)
        .def_readonly("y", &DartingGeometry::y)
        .def_readonly("d", &DartingGeometry::d)
        .def_readonly("x", &DartingGeometry::x);

    py::class_<PerformanceReport>(m, "PerformanceReport")
        .def_readonly("expected_time_alpha", &PerformanceReport::expected_time_alpha)
        .def_readonly("competitive_ratio", &PerformanceReport::competitive_ratio)
        .def_readonly("energy_alpha", &PerformanceReport::energy_alpha)
        .def_readonly("rho", &PerformanceReport::rho)
        .def_property_readonly("energy_rho", &PerformanceReport::energy_rho);

    m.def("darting_geometry", [](const Instance& i, const Strategy& s) { return darting_geometry(i, s); });
    m.def("expected_time", [](const Instance& i, const Strategy& s) { return expected_time(i, s); });
    m.def("competitive_ratio", [](const Instance& i, const Strategy& s) { return competitive_ratio(i, s); });
    m.def("energy", [](const Instance& i, const Strategy& s) { return energy(i, s); });
    m.def("evaluate", [](const Instance& i, const Strategy& s) { return evaluate(i, s); });
    m.def("greedy_bisector_strategy", &greedy_bisector_strategy);
    m.def("greedy_bisector_ratio", &greedy_bisector_ratio, py::arg("rho"));
    m.def("one_rb_ratio", &one_rb_ratio, py::arg("rho"));

    m.def("optimal_1rb", &optimal_1rb);
    m.def("optimal_1rb2", &optimal_1rb2);
    m.def("optimal_inf", [](const Instance& i) {
        const Optimum o = optimal_inf(i);
        return py::make_tuple(o.strategy,
                              o.source == OptimumSource::ClosedForm ? "closed_form" : "numeric_fallback");
    });
    m.def("residuals_inf", &residuals_inf);
    m.def("residuals_1rb2", &residuals_1rb2);
    m.def("grid_refine", [](const Instance& i, const py::object& k) { return grid_refine(i, steps_from(k)); });
    m.def("hessian_eigenvalues_inf", [](const Instance& i) { return hessian_check_inf(i).hessian_eigenvalues; });

    m.def(
        "monte_carlo",
        [](const Instance& i, const Strategy& s, std::int64_t trials, std::uint64_t seed, unsigned threads) {
            SimulationSummary r;
            {
                py::gil_scoped_release release;
                r = monte_carlo(i, s, trials, seed, MonteCarloOptions{threads});
            }
            py::dict out;
            out["mean"] = r.mean_time;
            out["std_error"] = r.std_error;
            out["trials"] = r.trials;
            out["seed"] = r.seed;
            out["first_darting"] = r.first_darting;
            out["second_darting"] = r.second_darting;
            out["origin"] = r.origin;
            out["truncated"] = r.truncated;
            out["round_histogram"] = r.round_histogram;
            return out;
        },
        py::arg("instance"), py::arg("strategy"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 1);
    m.def("exact_enumeration", &exact_enumeration);
    m.def("worst_case_time", [](const Instance& i, const Strategy& s) { return worst_case_time(i, s); });

    m.def(
        "effectiveness",
        [](const std::string& curve) {
            const EffectivenessResult r = effectiveness(named_curve(curve));
            if (r.kind == EffectivenessResult::Kind::Zero) {
                return 0.0;
            }
            if (r.kind == EffectivenessResult::Kind::BeyondSearchRange) {
                return kInfinity;
            }
            return r.rho;
        },
        py::arg("curve"));
    m.def("competitive_ratio_curve", [](const std::string& curve, double rho) { return named_curve(curve)(rho); });

    m.def("asymptotics_report", [](double rho) {
        const AsymptoticsReport r = asymptotics_report(rho);
        py::dict out;
        out["beta_slope"] = r.beta_slope;
        out["gamma_slope"] = r.gamma_slope;
        out["cr_gap_scaled"] = r.cr_gap_scaled;
        out["energy_scaled"] = r.energy_scaled;
        return out;
    });

    m.def(
        "tradeoff",
        [](const std::string& family, double epsilon, double rho, py::object lambda) {
            TradeoffPoint p;
            if (family == "A") {
                p = tradeoff_family_A(epsilon);
            } else if (family == "B") {
                p = lambda.is_none() ? tradeoff_family_B(epsilon) : tradeoff_family_B(epsilon, lambda.cast<double>());
            } else if (family == "B-equal") {
                p = tradeoff_family_B_equal(epsilon);
            } else {
                throw py::value_error("family must be A, B or B-equal");
            }
            const TradeoffEvaluation e = evaluate_tradeoff(p, rho);
            py::dict out;
            out["competitive_ratio"] = e.competitive_ratio;
            out["scaled_energy"] = e.scaled_energy;
            out["cr_gap_scaled"] = e.cr_gap_scaled;
            out["limit_competitive_ratio"] = p.limit_competitive_ratio;
            out["limit_scaled_energy"] = p.limit_scaled_energy;
            return out;
        },
        py::arg("family"), py::arg("epsilon"), py::arg("rho") = 1e4, py::arg("lambda_") = py::none());
}
