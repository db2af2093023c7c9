"""Knot reordering strategies, applied jointly to knots and values."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OrderingDomainError, ShapeError
from .problem import InterpProblem, is_real
from .numerics import magnitude

AS_GIVEN = "as-given"
INCREASING = "increasing"
DECREASING = "decreasing"
LEJA = "leja"

STRATEGIES = (AS_GIVEN, INCREASING, DECREASING, LEJA)


@dataclass(frozen=True)
class OrderingPermutation:
    """A bijection of knot indices together with the strategy that produced it.

    ``perm[i]`` is the original index of the knot placed at position i.
    """

    perm: tuple[int, ...]
    strategy: str

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ShapeError("perm must be a permutation of 0..N")

    def inverse(self) -> "OrderingPermutation":
        inv = [0] * len(self.perm)
        for i, q in enumerate(self.perm):
            inv[q] = i
        return OrderingPermutation(tuple(inv), self.strategy)


def apply_permutation(
    problem: InterpProblem, perm: OrderingPermutation
) -> InterpProblem:
    """Gather knots and values through ``perm`` (new[i] = old[perm[i]])."""
    if len(perm.perm) != len(problem):
        raise ShapeError(
            f"permutation length {len(perm.perm)} != problem length {len(problem)}"
        )
    return InterpProblem(
        knots=[problem.knots[q] for q in perm.perm],
        values=[problem.values[q] for q in perm.perm],
    )


def order_as_given(problem: InterpProblem):
    """Identity ordering; exists so experiment code treats all strategies alike."""
    perm = OrderingPermutation(tuple(range(len(problem))), AS_GIVEN)
    return problem, perm


def order_monotone(problem: InterpProblem, direction: str = INCREASING):
    """Sort real knots strictly increasing or decreasing, values alongside.

    Monotone ordering is undefined for complex knots and raises
    OrderingDomainError if any knot has a nonzero imaginary part.
    """
    if direction not in (INCREASING, DECREASING):
        raise ValueError(f"direction must be {INCREASING!r} or {DECREASING!r}")
    if not all(is_real(k) for k in problem.knots):
        raise OrderingDomainError("monotone ordering requires real knots")
    idx = sorted(range(len(problem)), key=lambda i: problem.knots[i])
    if direction == DECREASING:
        idx.reverse()
    perm = OrderingPermutation(tuple(idx), direction)
    return apply_permutation(problem, perm), perm


def order_leja(problem: InterpProblem):
    """Greedy ordering maximizing the distance product to the knots chosen so far.

    The first knot has maximal modulus; each next knot maximizes the
    product of distances to all previously placed knots; the single
    remaining knot takes the last position.  Exact ties go to the smallest
    original index.  Products are accumulated in working precision; a
    non-finite intermediate product raises OverflowError.
    """
    knots = problem.knots
    n_pts = len(knots)
    remaining = list(range(n_pts))

    best = 0
    best_mag = magnitude(knots[0])
    for i in range(1, n_pts):
        m = magnitude(knots[i])
        if m > best_mag:
            best, best_mag = i, m
    order = [remaining.pop(best)]

    prods = {i: 1.0 for i in remaining}
    while remaining:
        last = knots[order[-1]]
        best = None
        best_prod = -1.0
        for i in remaining:
            prods[i] *= magnitude(knots[i] - last)
            if not math.isfinite(prods[i]):
                raise OverflowError("distance product overflowed working precision")
            if prods[i] > best_prod:
                best, best_prod = i, prods[i]
        order.append(best)
        remaining.remove(best)
        del prods[best]

    perm = OrderingPermutation(tuple(order), LEJA)
    return apply_permutation(problem, perm), perm
