#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "multigrover/commands.hpp"
#include "multigrover/validate.hpp"
#include "multigrover/version.hpp"
#include "multigrover/rng.hpp"

namespace py = pybind11;

using namespace multigrover;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multiobject quantum search: full-space simulation and the "
              "reduced two-dimensional model";
    m.attr("__version__") = kVersion;
    m.attr("GENERATOR_NAME") = PortableRng::kName;
    m.attr("NORM_TOL") = kNormTol;
    m.attr("DENSE_LIMIT") = static_cast<long>(kDenseLimit);
    m.attr("MIN_COUPLING") = kMinCoupling;

    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                               base.ptr());
    py::register_exception<OrthogonalStartError>(m, "OrthogonalStartError",
                                                 base.ptr());
    py::register_exception<NumericalConsistencyError>(
        m, "NumericalConsistencyError", base.ptr());
    py::register_exception<InvalidUnitaryError>(m, "InvalidUnitaryError",
                                                base.ptr());
    py::register_exception<InvalidStateError>(m, "InvalidStateError",
                                              base.ptr());
    py::register_exception<InvalidTargetError>(m, "InvalidTargetError",
                                               base.ptr());
    py::register_exception<DegenerateSubspaceError>(
        m, "DegenerateSubspaceError", base.ptr());
    py::register_exception<PrecheckError>(m, "PrecheckError", base.ptr());

    py::enum_<PrecheckVerdict>(m, "PrecheckVerdict")
        .value("Proceed", PrecheckVerdict::Proceed)
        .value("AlreadySolved", PrecheckVerdict::AlreadySolved)
        .value("OrthogonalStart", PrecheckVerdict::OrthogonalStart);

    py::enum_<IterationMode>(m, "IterationMode")
        .value("Paper", IterationMode::Paper)
        .value("Exact", IterationMode::Exact);

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<Vector>(), py::arg("amplitudes"))
        .def_static("basis", &StateVector::basis, py::arg("dim"),
                    py::arg("index"))
        .def_property_readonly("dim", &StateVector::dim)
        .def_property_readonly("amplitudes", &StateVector::amplitudes)
        .def("__getitem__",
             [](const StateVector& state, Eigen::Index k) {
                 if (k < 0 || k >= state.dim()) {
                     throw py::index_error();
                 }
                 return state[k];
             })
        .def("__len__", &StateVector::dim);

    py::class_<LinearOperator>(m, "LinearOperator")
        .def_static("identity", &LinearOperator::identity, py::arg("dim"))
        .def_static("walsh_hadamard", &LinearOperator::walsh_hadamard,
                    py::arg("dim"))
        .def_static("dense", &LinearOperator::dense, py::arg("matrix"))
        .def_property_readonly("dim", &LinearOperator::dim)
        .def("apply_raw", &LinearOperator::apply_raw, py::arg("x"),
             py::arg("adjoint") = false)
        .def("materialize", &LinearOperator::materialize,
             py::arg("dense_limit") = kDenseLimit);

    py::class_<TargetSet>(m, "TargetSet")
        .def(py::init<Eigen::Index, std::vector<Eigen::Index>>(),
             py::arg("dim"), py::arg("indices"))
        .def_property_readonly("dim", &TargetSet::dim)
        .def_property_readonly("count", &TargetSet::count)
        .def_property_readonly("indices", &TargetSet::indices)
        .def("contains", &TargetSet::contains, py::arg("index"));

    py::class_<SearchProblem>(m, "SearchProblem")
        .def(py::init<TargetSet, StateVector, LinearOperator>(),
             py::arg("targets"), py::arg("gamma"), py::arg("v"))
        .def_property_readonly("dim", &SearchProblem::dim)
        .def_property_readonly("targets", &SearchProblem::targets)
        .def_property_readonly("gamma", &SearchProblem::gamma)
        .def_property_readonly("v", &SearchProblem::v);

    py::class_<OverlapData>(m, "OverlapData")
        .def_readonly("mu", &OverlapData::mu)
        .def_readonly("ssq", &OverlapData::ssq);

    py::class_<ReducedModel>(m, "ReducedModel")
        .def_readonly("a", &ReducedModel::a)
        .def_readonly("m2", &ReducedModel::m2)
        .def_readonly("theta", &ReducedModel::theta)
        .def_readonly("overlaps", &ReducedModel::overlaps);

    py::class_<CoefficientPair>(m, "CoefficientPair")
        .def(py::init([](double c1, double c2) {
                 return CoefficientPair{c1, c2};
             }),
             py::arg("c1"), py::arg("c2"))
        .def_readonly("c1", &CoefficientPair::c1)
        .def_readonly("c2", &CoefficientPair::c2)
        .def("__repr__", [](const CoefficientPair& c) {
            return "CoefficientPair(c1=" + std::to_string(c.c1) +
                   ", c2=" + std::to_string(c.c2) + ")";
        });

    py::class_<TraceRow>(m, "TraceRow")
        .def_readonly("m", &TraceRow::m)
        .def_readonly("c1", &TraceRow::c1)
        .def_readonly("c2", &TraceRow::c2)
        .def_readonly("p_reduced", &TraceRow::p_reduced)
        .def_readonly("p_full", &TraceRow::p_full)
        .def_readonly("deviation", &TraceRow::deviation);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("rows", &IterationTrace::rows)
        .def_readonly("has_full", &IterationTrace::has_full);

    py::class_<MeasurementOutcome>(m, "MeasurementOutcome")
        .def_readonly("index", &MeasurementOutcome::index)
        .def_readonly("hit", &MeasurementOutcome::hit);

    // hilbert
    m.def("inner_product", &inner_product, py::arg("x"), py::arg("y"));
    m.def("fwht", &fwht, py::arg("x"));
    m.def("apply", &apply, py::arg("op"), py::arg("x"),
          py::arg("adjoint") = false);
    m.def("unitarity_residual", &unitarity_residual, py::arg("op"),
          py::arg("dense_limit") = kDenseLimit);

    // operators
    m.def("oracle_reflection", &oracle_reflection, py::arg("targets"),
          py::arg("x"));
    m.def("diffusion_reflection", &diffusion_reflection, py::arg("gamma"),
          py::arg("x"));
    m.def("search_step", &search_step, py::arg("problem"), py::arg("x"));
    m.def("materialize_search_operator", &materialize_search_operator,
          py::arg("problem"), py::arg("dense_limit") = kDenseLimit);

    // reduced
    m.def("compute_overlaps", &compute_overlaps, py::arg("problem"));
    m.def("build_reduced_model", &build_reduced_model, py::arg("overlaps"));
    m.def("mu_state", &mu_state, py::arg("problem"), py::arg("overlaps"));
    m.def("big_m_matrix", &big_m_matrix, py::arg("overlaps"));
    m.def("reduced_step", &reduced_step, py::arg("model"), py::arg("c"));
    m.def("iterate_reduced", &iterate_reduced, py::arg("model"),
          py::arg("steps"));
    m.def("success_probability", &success_probability, py::arg("model"),
          py::arg("c"));
    m.def("optimal_iteration_count", &optimal_iteration_count,
          py::arg("model"), py::arg("mode"));

    // generators (spec-string front ends)
    m.def(
        "make_unitary",
        [](const std::string& spec, Eigen::Index n) {
            return make_unitary(parse_unitary_spec(spec), n);
        },
        py::arg("spec"), py::arg("n"));
    m.def(
        "make_state",
        [](const std::string& spec, Eigen::Index n) {
            return make_state(parse_state_spec(spec), n);
        },
        py::arg("spec"), py::arg("n"));
    m.def(
        "make_targets",
        [](const std::string& spec, Eigen::Index n) {
            return make_targets(parse_targets_spec(spec), n);
        },
        py::arg("spec"), py::arg("n"));
    m.def(
        "make_problem",
        [](const std::string& targets, const std::string& gamma,
           const std::string& unitary, Eigen::Index n) {
            return make_problem(parse_targets_spec(targets),
                                parse_state_spec(gamma),
                                parse_unitary_spec(unitary), n);
        },
        py::arg("targets"), py::arg("gamma"), py::arg("unitary"),
        py::arg("n"));
    m.def("haar_unitary", &haar_unitary, py::arg("n"), py::arg("seed"));

    // simulate
    m.def("precheck_start", &precheck_start, py::arg("problem"));
    m.def(
        "run_search",
        [](const SearchProblem& problem, long m_max, bool record_full) {
            return run_search(problem, m_max, record_full);
        },
        py::arg("problem"), py::arg("m_max"), py::arg("record_full") = false);
    m.def("measure", &measure, py::arg("state"), py::arg("targets"),
          py::arg("v"), py::arg("seed"));
    m.def("invariance_residual", &invariance_residual, py::arg("problem"),
          py::arg("trials"), py::arg("seed"));
    m.def("compare_full_reduced", &compare_full_reduced, py::arg("problem"),
          py::arg("m_max"));

    // validation families (formatted reports)
    m.def(
        "validate_report",
        [](const std::string& scope, std::uint64_t seed) {
            std::ostringstream out;
            std::ostringstream err;
            ValidateConfig config;
            config.scope = parse_validate_scope(scope);
            config.seed = seed;
            const int code = cmd_validate(config, out, err);
            return py::make_tuple(code, out.str());
        },
        py::arg("scope") = "all", py::arg("seed") = 0);

    // serialization
    m.def("trace_csv", &trace_csv, py::arg("trace"));
    m.def("load_state", &load_state, py::arg("path"));
    m.def("save_state", &save_state, py::arg("path"), py::arg("state"));
    m.def("load_unitary", &load_unitary, py::arg("path"));
    m.def("save_unitary", &save_unitary, py::arg("path"), py::arg("matrix"));
}
