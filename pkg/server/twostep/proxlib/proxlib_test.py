import math

import numpy as np

from twostep.errors import SizingError
from twostep.proxlib import (
    box_indicator,
    conjugate,
    group_ball_indicator,
    group_l2_value,
    l1_norm,
    linear_function,
    point_indicator,
    project_box,
    project_group_l2_ball,
    prox_linear_shift,
    prox_weighted_l1,
    tv_value,
    zero_function,
)
from twostep.tests import NumericTestCase


class SoftThresholdTestCase(NumericTestCase):
    def test_examples(self):
        self.assertAllClose(prox_weighted_l1([3.0, -0.5], 1.0, [1.0, 1.0]), [2.0, 0.0])
        self.assertAllClose(prox_weighted_l1([0.7], 1.0, [0.5]), [0.2])
        u = np.array([1.5, -2.0, 0.0])
        self.assertAllClose(prox_weighted_l1(u, 3.0, np.zeros(3)), u)

    def test_tie_maps_to_zero(self):
        self.assertEqual(prox_weighted_l1([0.5], 1.0, 0.5)[0], 0.0)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            prox_weighted_l1([1.0], -1.0)
        with self.assertRaises(SizingError):
            prox_weighted_l1([1.0, 2.0], 1.0, [1.0])

    def test_matches_grid_argmin(self):
        grid = np.arange(-4.0, 4.0, 1e-4)
        for u, gamma, weight in [(2.3, 1.0, 0.7), (-0.4, 0.5, 1.0), (1.1, 2.0, 0.25)]:
            objective = 0.5 * (grid - u) ** 2 + gamma * weight * np.abs(grid)
            expected = grid[np.argmin(objective)]
            self.assertAlmostEqual(prox_weighted_l1([u], gamma, weight)[0], expected, delta=1e-4)


class ProjectionTestCase(NumericTestCase):
    def test_group_ball_examples(self):
        self.assertAllClose(project_group_l2_ball([3.0, 4.0], 1.0, 1), [0.6, 0.8])
        self.assertAllClose(project_group_l2_ball([3.0, 0.0, 4.0, 0.0], 2.0, 2), [1.2, 0.0, 1.6, 0.0])
        inside = np.array([0.1, -0.2, 0.3, 0.05])
        self.assertAllClose(project_group_l2_ball(inside, 1.0), inside, atol=0.0)

    def test_group_ball_rejects_bad_length(self):
        with self.assertRaises(SizingError):
            project_group_l2_ball([1.0, 2.0, 3.0], 1.0, 2)

    def test_box_examples(self):
        self.assertAllClose(project_box([0.7], [0.5]), [0.5])
        self.assertEqual(project_box([-0.7, 0.3], [0.0, 1.0])[0], 0.0)
        self.assertAllClose(project_box([0.2, -0.1], 0.5), [0.2, -0.1], atol=0.0)

    def test_projections_are_idempotent(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            y = 3.0 * rng.standard_normal(8)
            once = project_group_l2_ball(y, 1.3)
            self.assertAllClose(project_group_l2_ball(once, 1.3), once, atol=1e-14)
            radii = np.abs(rng.standard_normal(8))
            boxed = project_box(y, radii)
            self.assertAllClose(project_box(boxed, radii), boxed, atol=0.0)


class ShiftTestCase(NumericTestCase):
    def test_examples(self):
        self.assertAllClose(prox_linear_shift([1.0, 1.0], 2.0, [0.5, 0.0]), [0.0, 1.0])
        self.assertAllClose(prox_linear_shift([1.0, -3.0], 2.0, [0.0, 0.0]), [1.0, -3.0])

    def test_moreau_identity_with_point_indicator(self):
        rng = np.random.default_rng(11)
        b = rng.standard_normal(4)
        conj = conjugate(point_indicator(b))
        for gamma in (0.5, 1.0, 2.0):
            y = rng.standard_normal(4)
            self.assertAllClose(conj.prox(y, gamma), prox_linear_shift(y, gamma, b), atol=1e-12)


class ValueTestCase(NumericTestCase):
    def test_group_value(self):
        self.assertEqual(group_l2_value([3.0, 4.0]), 5.0)
        with self.assertRaises(SizingError):
            group_l2_value([1.0, 2.0, 3.0], 1)

    def test_tv_value(self):
        self.assertEqual(tv_value(np.ones(16), 4, 4), 0.0)
        # gradient pairs of e_0 on a periodic 2x2 grid: (1,1), (-1,0), (0,-1), (0,0)
        self.assertAlmostEqual(tv_value([1.0, 0.0, 0.0, 0.0], 2, 2), math.sqrt(2.0) + 2.0)

    def test_indicator_values(self):
        self.assertEqual(group_ball_indicator(1.0, 1).value([0.6, 0.8]), 0.0)
        self.assertEqual(group_ball_indicator(1.0, 1).value([3.0, 4.0]), math.inf)
        self.assertEqual(box_indicator([0.0, 0.5]).value([0.0, -0.5]), 0.0)
        self.assertEqual(box_indicator([0.0, 0.5]).value([0.1, 0.0]), math.inf)


class FirmNonexpansivenessTestCase(NumericTestCase):
    def functions(self):
        rng = np.random.default_rng(3)
        return [
            zero_function(6),
            l1_norm(6, np.abs(rng.standard_normal(6))),
            linear_function(rng.standard_normal(6)),
            group_ball_indicator(0.8, 3),
            box_indicator(np.abs(rng.standard_normal(6))),
        ]

    def test_random_pairs(self):
        rng = np.random.default_rng(5)
        for fn in self.functions():
            for _ in range(100):
                u, w = 2.0 * rng.standard_normal(6), 2.0 * rng.standard_normal(6)
                gamma = rng.uniform(0.1, 3.0)
                pu, pw = fn.prox(u, gamma), fn.prox(w, gamma)
                slack = np.dot(pu - pw, u - w) - np.dot(pu - pw, pu - pw)
                self.assertGreaterEqual(slack, -1e-10, fn.label)

    def test_prox_minimises_model(self):
        rng = np.random.default_rng(9)
        for fn in self.functions():
            u = rng.standard_normal(6)
            gamma = 0.7
            p = fn.prox(u, gamma)
            best = 0.5 * np.dot(p - u, p - u) + gamma * fn.value(p)
            for _ in range(50):
                q = p + 0.05 * rng.standard_normal(6)
                candidate = 0.5 * np.dot(q - u, q - u) + gamma * fn.value(q)
                self.assertLessEqual(best, candidate + 1e-12, fn.label)
