"""Smoke tests for the compiled extension module."""

import math

import numpy as np
import pytest

import multigrover as mg


def classic_problem():
    return mg.make_problem("idx:0", "uniform", "identity", 4)


def test_version_and_constants():
    assert mg.__version__ == "1.0.0"
    assert mg.GENERATOR_NAME == "mt19937_64/box-muller"
    assert mg.NORM_TOL == 1e-12
    assert mg.DENSE_LIMIT == 4096
    assert mg.MIN_COUPLING == 1e-9


def test_classic_search_is_exact():
    problem = classic_problem()
    model = mg.build_reduced_model(mg.compute_overlaps(problem))
    assert model.a == 1.0

    trace = mg.run_search(problem, 1, record_full=True)
    assert trace.has_full
    assert len(trace.rows) == 2
    assert trace.rows[0].p_reduced == 0.25
    assert abs(trace.rows[1].p_full - 1.0) <= 1e-12


def test_trace_rows_match_reduced_recursion():
    problem = mg.make_problem("idx:0", "basis:0", "walsh-hadamard", 1024)
    model = mg.build_reduced_model(mg.compute_overlaps(problem))
    m = mg.optimal_iteration_count(model, mg.IterationMode.Paper)
    assert m == 25
    p = mg.success_probability(model, mg.iterate_reduced(model, m))
    assert p >= 0.999
    analytic = math.sin((2 * m + 1) * math.asin(1 / 32)) ** 2
    assert abs(p - analytic) <= 1e-10


def test_haar_unitaries_are_deterministic():
    one = mg.make_unitary("haar:42", 16).materialize()
    two = mg.make_unitary("haar:42", 16).materialize()
    assert np.array_equal(one, two)
    assert mg.unitarity_residual(mg.make_unitary("haar:42", 16)) <= 1e-11


def test_precheck_verdicts():
    solved = mg.make_problem("idx:0,1", "uniform", "identity", 2)
    assert mg.precheck_start(solved) == mg.PrecheckVerdict.AlreadySolved
    orthogonal = mg.make_problem("idx:1", "basis:0", "identity", 4)
    assert mg.precheck_start(orthogonal) == mg.PrecheckVerdict.OrthogonalStart
    assert mg.precheck_start(classic_problem()) == mg.PrecheckVerdict.Proceed
    with pytest.raises(mg.PrecheckError):
        mg.run_search(solved, 1)


def test_dimension_errors_reach_python():
    with pytest.raises(mg.DimensionError):
        mg.make_unitary("walsh-hadamard", 6)
    with pytest.raises(mg.Error):
        mg.make_unitary("walsh-hadamard", 6)  # subclass of the base


def test_overlaps_and_states():
    overlaps = mg.compute_overlaps(classic_problem())
    assert overlaps.ssq == 0.25
    assert overlaps.mu[0] == 0.5

    state = mg.make_state("uniform", 4)
    assert len(state) == 4
    assert state[0] == 0.5
    assert np.allclose(state.amplitudes, 0.5)


def test_measurement_after_one_step_hits():
    problem = classic_problem()
    state = mg.search_step(problem, problem.gamma)
    for seed in range(5):
        outcome = mg.measure(state, problem.targets, problem.v, seed)
        assert outcome.index == 0
        assert outcome.hit


def test_invariance_residual_is_tiny():
    problem = mg.make_problem("count:3@4", "random:2", "haar:1", 32)
    assert mg.invariance_residual(problem, 8, 5) <= 1e-10
    assert mg.compare_full_reduced(problem, 10) <= 1e-10


def test_validate_report_runs():
    code, text = mg.validate_report("degenerate", 0)
    assert code == 0
    assert "family degenerate: PASS" in text
    assert "overall: PASS" in text


def test_trace_csv_header():
    trace = mg.run_search(classic_problem(), 1, record_full=True)
    text = mg.trace_csv(trace)
    assert text.startswith("m,c1,c2,p_reduced,p_full,deviation\n")
    assert len(text.strip().split("\n")) == 3
