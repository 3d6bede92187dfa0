# -*- coding: utf-8; -*-
#
# This file is part of twostep-proximity.
#
# For the full copyright and license information, please see the
# LICENSE file distributed with this source code.

"""Small block problems used by the ``solve`` and ``rate`` commands and the tests."""

from typing import Sequence

import numpy as np

from twostep.engine.problem import Block, BlockProblem, IterateState
from twostep.linops.operators import MatrixOperator
from twostep.proxlib import functions

#: known solution of :func:`three_block_l1`
THREE_BLOCK_SOLUTION = (0.0, 0.0, 1.0)
THREE_BLOCK_MULTIPLIER = -1.0 / 3.0
THREE_BLOCK_OBJECTIVE = 1.0


def three_block_l1() -> BlockProblem:
    """min |x1| + |x2| + |x3| s.t. x1 + 2 x2 + 3 x3 = 3."""
    blocks = [
        Block(functions.l1_norm(1), MatrixOperator([[float(coefficient)]], label="A_{}".format(coefficient)))
        for coefficient in (1, 2, 3)
    ]
    return BlockProblem(blocks, [3.0], label="three_block_l1")


def random_instance(seed: int = 0, m: int = 5, sizes: Sequence[int] = (2, 2, 2)) -> BlockProblem:
    """Random A_i with a mix of l1, box and linear block functions; b = A x_feasible."""
    rng = np.random.default_rng(seed)
    makers = [
        lambda size: functions.l1_norm(size, rng.uniform(0.1, 1.0, size)),
        lambda size: functions.box_indicator(rng.uniform(0.5, 2.0, size)),
        lambda size: functions.linear_function(0.1 * rng.standard_normal(size)),
    ]
    blocks = []
    for index, size in enumerate(sizes):
        operator = MatrixOperator(rng.standard_normal((m, size)), label="A_{}".format(index + 1))
        blocks.append(Block(makers[index % len(makers)](size), operator))
    feasible = [0.5 * rng.uniform(-1.0, 1.0, size) for size in sizes]
    b = sum(block.operator.apply(part) for block, part in zip(blocks, feasible))
    return BlockProblem(blocks, b, label="random_{}".format(seed))


def problem_from_config(config: dict) -> BlockProblem:
    """Problem section of a run configuration (already validated)."""
    kind = config.get("kind", "three_block_l1")
    if kind == "three_block_l1":
        return three_block_l1()
    if kind == "random":
        return random_instance(int(config.get("seed", 0)), int(config.get("m", 5)), config.get("sizes", (2, 2, 2)))

    blocks = []
    for index, entry in enumerate(config["blocks"]):
        matrix = np.atleast_2d(np.asarray(entry["A"], dtype=float))
        size = matrix.shape[1]
        function = entry.get("function", "l1")
        if function == "l1":
            fn = functions.l1_norm(size, entry.get("weights", 1.0))
        elif function == "box":
            fn = functions.box_indicator(np.broadcast_to(np.asarray(entry.get("radii", 1.0), dtype=float), (size,)))
        elif function == "linear":
            fn = functions.linear_function(entry["c"])
        else:
            fn = functions.zero_function(size)
        blocks.append(Block(fn, MatrixOperator(matrix, label="A_{}".format(index + 1))))
    return BlockProblem(blocks, config["b"], label=config.get("label", "custom"))


def three_block_saddle() -> IterateState:
    """Saddle point (x*, y*) of :func:`three_block_l1`."""
    return IterateState([[value] for value in THREE_BLOCK_SOLUTION], [THREE_BLOCK_MULTIPLIER])
