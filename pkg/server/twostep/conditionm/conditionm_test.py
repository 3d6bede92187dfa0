import numpy as np

from twostep.common import FAMILY
from twostep.conditionm import (
    PRACTICAL_LABEL,
    MatrixSet,
    build_matrix_set,
    certify_step_sizes,
    check_condition_m,
    mtilde_norm,
    suggest_step_sizes,
    theta_shrink,
)
from twostep.conditionm.certify import analytic_bounds
from twostep.errors import SizingError
from twostep.linops import MatrixOperator, make_tv_operator
from twostep.tests import NumericTestCase


def random_blocks(rng, m=5, sizes=(2, 2, 2)):
    return [rng.standard_normal((m, size)) for size in sizes]


class CheckConditionMTestCase(NumericTestCase):
    def test_passing_two_step_set(self):
        report = check_condition_m(MatrixSet(np.eye(3), 0.4 * np.eye(3), 0.6 * np.eye(3)))
        self.assertTrue(report.passed)
        self.assertAllClose(report.H, 1.6 * np.eye(3))
        self.assertAlmostEqual(report.contraction_norm, 0.375)

    def test_contraction_too_large(self):
        report = check_condition_m(MatrixSet(np.eye(2), -np.eye(2), 2.0 * np.eye(2)))
        self.assertFalse(report.passed)
        self.assertAlmostEqual(report.contraction_norm, 2.0 / 3.0)

    def test_one_step_reduction(self):
        report = check_condition_m(MatrixSet(np.eye(4), np.eye(4), np.zeros((4, 4))))
        self.assertTrue(report.passed)
        self.assertEqual(report.contraction_norm, 0.0)

    def test_asymmetric_h_fails_with_diagnostic(self):
        M0 = np.array([[1.0, 1.0], [0.0, 1.0]])
        report = check_condition_m(MatrixSet(M0, M0, np.zeros((2, 2))))
        self.assertFalse(report.passed)
        self.assertIn("not symmetric", report.diagnostic)

    def test_additivity_failure(self):
        report = check_condition_m(MatrixSet(np.eye(2), np.eye(2), 0.1 * np.eye(2)))
        self.assertFalse(report.passed)
        self.assertAlmostEqual(report.additivity_error, 0.1)

    def test_verdict_invariant_under_scaling(self):
        rng = np.random.default_rng(21)
        blocks = random_blocks(rng)
        for alphas in ([0.05, 0.05, 0.05], [2.0, 2.0, 2.0]):
            ms = build_matrix_set(FAMILY.TWO_STEP_IMPLICIT, blocks, alphas, 1.0)
            verdict = check_condition_m(ms).passed
            for c in (0.01, 3.0, 250.0):
                scaled = MatrixSet(*(c * M for M in ms))
                report = check_condition_m(scaled)
                self.assertEqual(report.passed, verdict)

    def test_shape_mismatch(self):
        with self.assertRaises(SizingError):
            check_condition_m(MatrixSet(np.eye(2), np.eye(3), np.eye(2)))


class BuildMatrixSetTestCase(NumericTestCase):
    def test_implicit_m2_pattern(self):
        A1, A2 = np.array([[1.0], [2.0]]), np.array([[3.0], [-1.0]])
        ms = build_matrix_set(FAMILY.TWO_STEP_IMPLICIT, [A1, A2], [0.1, 0.1], 2.0)
        expected = np.zeros((4, 4))
        expected[0, 1] = 2.0 * (A1.T.dot(A2))[0, 0]
        self.assertAllClose(ms.M2, expected)
        self.assertAllClose(ms.M0 - ms.M1 - ms.M2, np.zeros((4, 4)), atol=1e-14)

    def test_single_block_is_one_step(self):
        ms = build_matrix_set(FAMILY.TWO_STEP_EXPLICIT, [np.eye(3)], [0.5], 1.0)
        self.assertAllClose(ms.M2, np.zeros((6, 6)), atol=0.0)

    def test_offdiag_with_zero_theta_is_implicit(self):
        blocks = random_blocks(np.random.default_rng(2))
        base = build_matrix_set(FAMILY.TWO_STEP_IMPLICIT, blocks, [0.1, 0.2, 0.3], 1.5)
        variant = build_matrix_set(FAMILY.VARIANT_OFFDIAG, blocks, [0.1, 0.2, 0.3], 1.5, theta=0.0)
        self.assertAllClose(variant.M0, base.M0, atol=0.0)
        self.assertAllClose(variant.M2, base.M2, atol=0.0)

    def test_offdiag_variant_keeps_h_symmetric(self):
        blocks = random_blocks(np.random.default_rng(3))
        for family in (FAMILY.VARIANT_OFFDIAG, FAMILY.VARIANT_OFFDIAG_EXPLICIT):
            ms = build_matrix_set(family, blocks, [0.01, 0.01, 0.01], 1.0, theta=0.4)
            H = ms.M0 + ms.M2
            self.assertAllClose(H, H.T, atol=1e-12)

    def test_primal_dual_sets(self):
        A = np.array([[1.0, 2.0]])
        primal = build_matrix_set(FAMILY.PD_PRIMAL_FIRST, [A], [0.5], 2.0)
        self.assertAllClose(primal.M0, [[4.0, 0.0, -1.0], [0.0, 4.0, -2.0], [-1.0, -2.0, 0.5]])
        dual = build_matrix_set(FAMILY.PD_DUAL_FIRST, [A], [0.5], 2.0)
        self.assertAllClose(dual.M0[2], [1.0, 2.0, 0.5])
        self.assertAllClose(dual.M2, np.zeros((3, 3)), atol=0.0)

    def test_alpha_count_mismatch(self):
        with self.assertRaises(SizingError):
            build_matrix_set(FAMILY.TWO_STEP_IMPLICIT, [np.eye(2), np.eye(2)], [0.1], 1.0)

    def test_unknown_family(self):
        with self.assertRaises(ValueError):
            build_matrix_set("admm_g", [np.eye(2)], [0.1], 1.0)


class MtildeNormTestCase(NumericTestCase):
    def test_single_block(self):
        self.assertEqual(mtilde_norm([MatrixOperator(np.eye(2))]), 0.0)

    def test_two_identities(self):
        ops = [MatrixOperator([[1.0]]), MatrixOperator([[1.0]])]
        self.assertAlmostEqual(mtilde_norm(ops), 1.0, places=8)

    def test_matches_dense_oracle(self):
        blocks = random_blocks(np.random.default_rng(4))
        for beta in (0.5, 1.0, 2.0):
            ms = build_matrix_set(FAMILY.TWO_STEP_IMPLICIT, blocks, [0.1, 0.1, 0.1], beta)
            dense = np.linalg.norm(ms.M2[:6, :6] / beta, 2)
            self.assertAlmostEqual(mtilde_norm([MatrixOperator(block) for block in blocks]), dense, delta=1e-6)


class CertifyTestCase(NumericTestCase):
    def test_primal_dual_identity(self):
        certificate = certify_step_sizes(FAMILY.PD_PRIMAL_FIRST, [MatrixOperator([[1.0]])], [0.25], 1.0)
        self.assertTrue(certificate.certified)
        self.assertAlmostEqual(certificate.aq_norm, 0.5, places=8)

    def test_explicit_rejects_large_alpha(self):
        B = make_tv_operator(4, 4)
        certificate = certify_step_sizes(FAMILY.TWO_STEP_EXPLICIT, [B], [0.13], 1.0)
        self.assertFalse(certificate.certified)
        self.assertEqual(certificate.violated_blocks, (0,))

    def test_practical_rule_is_never_certified(self):
        ops = [MatrixOperator([[1.0]]), MatrixOperator([[1.0]])]
        certificate = certify_step_sizes(
            FAMILY.TWO_STEP_EXPLICIT, ops, [0.999999, 0.999999], 1.0, rule="paper_practical"
        )
        self.assertFalse(certificate.certified)
        self.assertEqual(certificate.label, PRACTICAL_LABEL)

    def test_variants_use_condition_m(self):
        ops = [MatrixOperator(block) for block in random_blocks(np.random.default_rng(8))]
        certificate = certify_step_sizes(FAMILY.VARIANT_DIAG, ops, [0.01, 0.01, 0.01], 1.0, theta=0.1)
        self.assertEqual(certificate.method, "condition_m")
        self.assertTrue(certificate.certified)
        ladmm = certify_step_sizes(FAMILY.LADMM_DIRECT, ops, [0.01, 0.01, 0.01], 1.0)
        self.assertFalse(ladmm.certified)

    def test_certified_steps_satisfy_condition_m(self):
        rng = np.random.default_rng(13)
        families = [FAMILY.TWO_STEP_IMPLICIT, FAMILY.TWO_STEP_EXPLICIT, FAMILY.HYBRID]
        for trial in range(50):
            family = families[trial % 3]
            blocks = random_blocks(rng)
            ops = [MatrixOperator(block) for block in blocks]
            partition = (1,) if family == FAMILY.HYBRID else ()
            beta = rng.uniform(0.5, 2.0)
            probe = certify_step_sizes(family, ops, [1e-6] * 3, beta, partition=partition)
            alphas = [rng.uniform(0.1, 0.95) * bound for bound in probe.per_block_bounds]
            certificate = certify_step_sizes(family, ops, alphas, beta, partition=partition)
            self.assertTrue(certificate.certified)
            ms = build_matrix_set(family, blocks, alphas, beta, partition=partition)
            self.assertTrue(check_condition_m(ms).passed, family)


class SuggestTestCase(NumericTestCase):
    def test_explicit_single_block(self):
        alphas = suggest_step_sizes(FAMILY.TWO_STEP_EXPLICIT, [make_tv_operator(4, 4)], safety=0.999999)
        self.assertAlmostEqual(alphas[0], 0.999999 / 8.0, places=8)

    def test_implicit_two_identities(self):
        ops = [MatrixOperator([[1.0]]), MatrixOperator([[1.0]])]
        alphas = suggest_step_sizes(FAMILY.TWO_STEP_IMPLICIT, ops, safety=0.9)
        self.assertAlmostEqual(alphas[0], 0.45, places=7)
        self.assertAlmostEqual(alphas[1], 0.45, places=7)

    def test_safety_must_be_a_fraction(self):
        with self.assertRaises(ValueError):
            suggest_step_sizes(FAMILY.TWO_STEP_EXPLICIT, [MatrixOperator([[1.0]])], safety=1.0)

    def test_unbounded_suggestion(self):
        alphas = suggest_step_sizes(FAMILY.TWO_STEP_IMPLICIT, [MatrixOperator([[1.0]])], safety=0.5)
        self.assertEqual(alphas, [float("inf")])

    def test_theta_shrinks_variant_suggestions(self):
        ops = [MatrixOperator(block) for block in random_blocks(np.random.default_rng(21))]
        for family in (FAMILY.VARIANT_DIAG, FAMILY.VARIANT_OFFDIAG, FAMILY.VARIANT_OFFDIAG_EXPLICIT):
            with self.subTest(family=family):
                _, bounds = analytic_bounds(family, ops)
                shrunk = suggest_step_sizes(family, ops, safety=0.9, theta=0.5)
                for alpha, bound in zip(shrunk, bounds):
                    self.assertLessEqual(alpha, 0.9 * theta_shrink(family, 0.5) * bound * (1 + 1e-12))
                certificate = certify_step_sizes(family, ops, shrunk, 1.0, theta=0.5)
                self.assertTrue(certificate.certified, certificate.violated_blocks)

    def test_theta_shrink_factors(self):
        self.assertAlmostEqual(theta_shrink(FAMILY.VARIANT_DIAG, 0.5), 1.0 / 3.0)
        self.assertAlmostEqual(theta_shrink(FAMILY.VARIANT_OFFDIAG, 1.0), 0.5)
        self.assertEqual(theta_shrink(FAMILY.TWO_STEP_EXPLICIT, 0.5), 1.0)
        with self.assertRaises(ValueError):
            theta_shrink(FAMILY.VARIANT_DIAG, 1.0)
