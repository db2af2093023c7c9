"""Problem containers: knot/value data and the evaluation parameters (z, t)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DistinctnessViolation, InvalidScalar, ShapeError

# A scalar is a plain Python number; complex values with an exactly zero
# imaginary part are normalized to float so that "real" is a property of the
# value, not of how it happened to be constructed.
Scalar = float | complex


def as_scalar(x) -> Scalar:
    """Validate and normalize one scalar input.

    Accepts ints, floats, complex, and numpy scalar types.  Raises
    InvalidScalar for NaN or infinities.
    """
    if isinstance(x, complex) or (hasattr(x, "imag") and x.imag != 0):
        z = complex(x)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise InvalidScalar(f"non-finite scalar: {z!r}")
        if z.imag == 0.0:
            return z.real
        return z
    v = float(x)
    if not math.isfinite(v):
        raise InvalidScalar(f"non-finite scalar: {v!r}")
    return v


def is_real(x: Scalar) -> bool:
    return not isinstance(x, complex)


@dataclass(frozen=True)
class InterpProblem:
    """Pairwise-distinct knots with index-aligned sample values."""

    knots: tuple[Scalar, ...]
    values: tuple[Scalar, ...]

    def __init__(self, knots, values):
        ks = tuple(as_scalar(k) for k in knots)
        vs = tuple(as_scalar(v) for v in values)
        if len(ks) == 0:
            raise ShapeError("a problem needs at least one knot")
        if len(ks) != len(vs):
            raise ShapeError(
                f"{len(ks)} knots but {len(vs)} values; lengths must match"
            )
        if len(set(ks)) != len(ks):
            raise DistinctnessViolation("knots must be pairwise distinct")
        object.__setattr__(self, "knots", ks)
        object.__setattr__(self, "values", vs)

    def __len__(self) -> int:
        return len(self.knots)

    @property
    def degree(self) -> int:
        """Largest prefix index N (one less than the number of knots)."""
        return len(self.knots) - 1

    @property
    def is_real(self) -> bool:
        """True when every knot and value has an exactly zero imaginary part."""
        return all(is_real(k) for k in self.knots) and all(
            is_real(v) for v in self.values
        )


@dataclass(frozen=True)
class EvalSpec:
    """The (z, t) pair selecting which member of the evaluator family to compute.

    t=1 evaluates the interpolating polynomial at z; t=0 with z=1 produces
    the Newton coefficients.
    """

    z: Scalar
    t: Scalar

    def __init__(self, z, t):
        object.__setattr__(self, "z", as_scalar(z))
        object.__setattr__(self, "t", as_scalar(t))

    @property
    def is_real(self) -> bool:
        return is_real(self.z) and is_real(self.t)


# The parameter choice that turns the general evaluator into the Newton
# coefficient computation.
NEWTON_COEFFICIENTS = EvalSpec(z=1.0, t=0.0)
