import numpy as np

from twostep import signals
from twostep.common import FAMILY
from twostep.conditionm import MatrixSet, build_matrix_set, certify_step_sizes, suggest_step_sizes
from twostep.engine import (
    Block,
    BlockProblem,
    InnerSolverConfig,
    IterateState,
    StopCriteria,
    Stepper,
    dense_operands,
    feasibility,
    generic_two_step_dense,
    kkt_residual,
    make_spec,
    solve,
    step,
)
from twostep.errors import ConvergenceError, SizingError, StructureError
from twostep.instances import (
    THREE_BLOCK_MULTIPLIER,
    THREE_BLOCK_OBJECTIVE,
    THREE_BLOCK_SOLUTION,
    random_instance,
    three_block_l1,
)
from twostep.linops import MatrixOperator, identity
from twostep.proxlib import point_indicator
from twostep.tests import NumericTestCase

TIGHT = InnerSolverConfig(max_inner=100000, inner_tol=1e-13)
THETA = 0.3
HYBRID_PARTITION = (1,)


def random_state(problem, seed):
    rng = np.random.default_rng(seed)
    return IterateState(
        [rng.standard_normal(size) for size in problem.sizes],
        rng.standard_normal(problem.m),
        prev_x=[rng.standard_normal(size) for size in problem.sizes],
        prev_y=rng.standard_normal(problem.m),
    )


def spec_for(problem, family, safety=0.9):
    base = {
        FAMILY.VARIANT_DIAG: FAMILY.TWO_STEP_IMPLICIT,
        FAMILY.VARIANT_OFFDIAG: FAMILY.TWO_STEP_IMPLICIT,
        FAMILY.VARIANT_OFFDIAG_EXPLICIT: FAMILY.TWO_STEP_EXPLICIT,
        FAMILY.VARIANT_DIAG_EXPLICIT: FAMILY.TWO_STEP_EXPLICIT,
    }.get(family, family)
    partition = HYBRID_PARTITION if family == FAMILY.HYBRID else ()
    alphas = suggest_step_sizes(base, problem.operators, safety=safety, partition=partition)
    return make_spec(family, alphas, 1.3, theta=THETA, partition=partition, inner=TIGHT)


def assert_states_close(test, left, right, atol):
    for a, b in zip(left.x, right.x):
        test.assertAllClose(a, b, atol=atol)
    test.assertAllClose(left.y, right.y, atol=atol)


class ProblemTestCase(NumericTestCase):
    def test_row_mismatch(self):
        with self.assertRaises(SizingError):
            BlockProblem(
                [Block(point_indicator([0.0]), MatrixOperator([[1.0]])), Block(point_indicator([0.0]), identity(2))],
                [0.0],
            )

    def test_theta_range_for_diag_variant(self):
        with self.assertRaises(ValueError):
            make_spec(FAMILY.VARIANT_DIAG, [0.1], 1.0, theta=1.0)

    def test_aliases(self):
        self.assertEqual(make_spec("2SFPPA", [0.1], 1.0).family, FAMILY.TWO_STEP_EXPLICIT)
        self.assertEqual(make_spec("jladmm", [0.1], 1.0).family, FAMILY.PD_DUAL_FIRST)


class StepTestCase(NumericTestCase):
    def test_zero_problem_is_a_fixed_point(self):
        problem = BlockProblem([Block(point_indicator(np.zeros(3)), identity(3))], np.zeros(3))
        for family in FAMILY:
            state = step(problem, make_spec(family, [0.3], 1.0, inner=TIGHT), IterateState.zeros(problem))
            self.assertAllClose(state.x[0], np.zeros(3), atol=0.0)
            self.assertAllClose(state.y, np.zeros(3), atol=0.0)

    def test_equal_memory_reduces_to_ladmm(self):
        problem = random_instance(4)
        spec = spec_for(problem, FAMILY.TWO_STEP_EXPLICIT)
        two_step = Stepper(problem, spec)
        ladmm = Stepper(problem, spec._replace(family=FAMILY.LADMM_DIRECT))
        state = random_state(problem, 1)
        state = IterateState(state.x, state.y)
        for _ in range(10):
            left, right = two_step(state), ladmm(state)
            for a, b in zip(left.x, right.x):
                self.assertTrue(np.array_equal(a, b))
            self.assertTrue(np.array_equal(left.y, right.y))
            state = IterateState(left.x, left.y)

    def test_zero_theta_variants_match_implicit_exactly(self):
        problem = random_instance(5)
        spec = spec_for(problem, FAMILY.TWO_STEP_IMPLICIT)
        base = Stepper(problem, spec)(random_state(problem, 2))
        for family in (FAMILY.VARIANT_DIAG, FAMILY.VARIANT_OFFDIAG):
            variant = Stepper(problem, spec._replace(family=family, theta=0.0))(random_state(problem, 2))
            for a, b in zip(base.x, variant.x):
                self.assertTrue(np.array_equal(a, b), family)

    def test_memory_rotates(self):
        problem = random_instance(6)
        state = random_state(problem, 3)
        new_state = step(problem, spec_for(problem, FAMILY.TWO_STEP_EXPLICIT), state)
        self.assertEqual(new_state.k, state.k + 1)
        self.assertAllClose(new_state.prev_y, state.y, atol=0.0)
        self.assertAllClose(new_state.prev_x[0], state.x[0], atol=0.0)

    def test_solution_is_fixed_for_every_family(self):
        problem = three_block_l1()
        solution = IterateState([[value] for value in THREE_BLOCK_SOLUTION], [THREE_BLOCK_MULTIPLIER])
        self.assertLess(kkt_residual(problem, solution, [0.05] * 3, 1.0), 1e-10)
        for family in FAMILY:
            spec = make_spec(family, [0.05] * 3, 1.0, theta=THETA, partition=HYBRID_PARTITION, inner=TIGHT)
            after = step(problem, spec, solution)
            assert_states_close(self, after, solution, atol=1e-10)

    def test_stalled_inner_solver_is_flagged(self):
        problem = random_instance(7)
        spec = spec_for(problem, FAMILY.TWO_STEP_IMPLICIT)._replace(inner=InnerSolverConfig(1, 1e-16))
        stalled = []

        def listener(sender, **kwargs):
            stalled.append(sender)

        signals.inner_solver_stalled.connect(listener)
        try:
            state = step(problem, spec, random_state(problem, 4))
        finally:
            signals.inner_solver_stalled.disconnect(listener)
        self.assertEqual(state.inner_stalls, 3)
        self.assertEqual(stalled, [0, 1, 2])


class DenseOracleTestCase(NumericTestCase):
    def test_every_family_matches_the_dense_engine(self):
        for family in FAMILY:
            for seed in range(10):
                with self.subTest(family=family, seed=seed):
                    problem = random_instance(10 + seed)
                    spec = spec_for(problem, family)
                    ms = build_matrix_set(
                        family, problem.dense_blocks(), spec.alphas, spec.beta, spec.theta, spec.partition
                    )
                    R, E = dense_operands(problem, spec.alphas, spec.beta)
                    stepper = Stepper(problem, spec)
                    fast = dense = random_state(problem, seed)
                    for _ in range(10):
                        fast = stepper(fast)
                        dense = generic_two_step_dense(ms, problem, dense, R, E, inner=TIGHT)
                        assert_states_close(self, fast, dense, atol=1e-10)

    def test_primal_dual_set_reproduces_primal_first(self):

        problem = random_instance(3)
        spec = spec_for(problem, FAMILY.PD_PRIMAL_FIRST)
        ms = build_matrix_set(FAMILY.PD_PRIMAL_FIRST, problem.dense_blocks(), spec.alphas, spec.beta)
        R, E = dense_operands(problem, spec.alphas, spec.beta)
        state = random_state(problem, 9)
        assert_states_close(self, generic_two_step_dense(ms, problem, state, R, E), step(problem, spec, state), 1e-12)

    def test_unresolvable_matrix_set(self):
        problem = random_instance(1)
        spec = spec_for(problem, FAMILY.TWO_STEP_EXPLICIT)
        R, E = dense_operands(problem, spec.alphas, spec.beta)
        zero = np.zeros_like(E)
        with self.assertRaises(StructureError):
            generic_two_step_dense(MatrixSet(zero, zero, zero), problem, IterateState.zeros(problem), R, E)


class KktTestCase(NumericTestCase):
    def test_feasibility_term(self):
        problem = three_block_l1()
        state = IterateState([[1.0], [1.0], [0.0]], [0.0])
        self.assertAlmostEqual(feasibility(problem, state, 2.0), 0.0)
        state = IterateState([[0.0], [0.0], [0.0]], [0.0])
        self.assertAlmostEqual(feasibility(problem, state, 2.0), 6.0)


class SolveTestCase(NumericTestCase):
    def test_zero_problem_stops_immediately(self):
        problem = BlockProblem([Block(point_indicator(np.zeros(2)), identity(2))], np.zeros(2))
        _, trace = solve(problem, make_spec(FAMILY.TWO_STEP_EXPLICIT, [0.5], 1.0), StopCriteria(100, kkt_tol=1e-12))
        self.assertTrue(trace.converged)
        self.assertLessEqual(len(trace), 2)

    def test_non_finite_iterate_raises(self):
        problem = three_block_l1()
        start = IterateState([[0.0], [0.0], [0.0]], [np.nan])
        with self.assertRaises(ConvergenceError) as context:
            solve(problem, make_spec(FAMILY.TWO_STEP_EXPLICIT, [0.01] * 3, 1.0), initial_state=start, label="nan")
        self.assertEqual(context.exception.payload["k"], 1)
        self.assertEqual(context.exception.exit_code, 4)

    def test_max_iter_is_flagged(self):

        problem = three_block_l1()
        _, trace = solve(problem, make_spec(FAMILY.TWO_STEP_EXPLICIT, [0.01] * 3, 1.0), StopCriteria(3, kkt_tol=1e-30))
        self.assertFalse(trace.converged)
        self.assertEqual(trace.stop_reason, "max_iter")
        self.assertEqual(len(trace), 3)

    def test_three_block_instance_with_2sfppa(self):
        problem = three_block_l1()
        probe = certify_step_sizes(FAMILY.TWO_STEP_EXPLICIT, problem.operators, [1e-6] * 3, 1.0)
        alphas = [0.99 * bound for bound in probe.per_block_bounds]
        self.assertTrue(certify_step_sizes(FAMILY.TWO_STEP_EXPLICIT, problem.operators, alphas, 1.0).certified)
        state, trace = solve(problem, make_spec("2sfppa", alphas, 1.0), StopCriteria(20000, kkt_tol=1e-10))
        self.assertAllClose(np.concatenate(state.x), THREE_BLOCK_SOLUTION, atol=1e-6)
        self.assertAlmostEqual(problem.objective(state.x), THREE_BLOCK_OBJECTIVE, delta=1e-6)
        self.assertAlmostEqual(state.y[0], THREE_BLOCK_MULTIPLIER, delta=1e-6)
        kkt = trace.column("kkt")
        self.assertLess(kkt[-1], kkt[0])

    def test_three_block_instance_with_primal_dual(self):
        problem = three_block_l1()
        alphas = suggest_step_sizes(FAMILY.PD_PRIMAL_FIRST, problem.operators, safety=0.99)
        self.assertTrue(certify_step_sizes(FAMILY.PD_PRIMAL_FIRST, problem.operators, alphas, 1.0).certified)
        state, _ = solve(problem, make_spec(FAMILY.PD_PRIMAL_FIRST, alphas, 1.0), StopCriteria(20000, kkt_tol=1e-10))
        self.assertAllClose(np.concatenate(state.x), THREE_BLOCK_SOLUTION, atol=1e-6)

    def test_history_and_hooks(self):
        problem = three_block_l1()
        seen = []

        def hook(state, record):
            seen.append(state.k)
            record["eps1"] = 0.0

        _, trace = solve(
            problem,
            make_spec(FAMILY.PD_DUAL_FIRST, [0.05] * 3, 1.0),
            StopCriteria(5, kkt_tol=None),
            hooks=[hook],
            record_history=True,
        )
        self.assertEqual(seen, [1, 2, 3, 4, 5])
        self.assertEqual(len(trace.history), 6)
        self.assertEqual(trace.column("eps1").tolist(), [0.0] * 5)
        self.assertTrue(np.all(np.isnan(trace.column("kkt"))))
