"""Knot set generation and scalar file parsing for the experiment harness."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, InputFormatError
from .problem import Scalar, as_scalar

# Name recorded in CSV headers: the PCG64 bit stream consumed raw, with the
# top 53 bits of each draw scaled into [0, 1).  The raw stream is stable
# across numpy versions and platforms.
RNG_NAME = "PCG64-raw53"


class UniformStream:
    """Deterministic uniform doubles in [0, 1) from a seeded PCG64 raw stream."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed)

    def draw(self, count: int) -> np.ndarray:
        raw = self._bits.random_raw(count)
        return (raw >> np.uint64(11)) * (2.0**-53)


@dataclass(frozen=True)
class KnotSource:
    """Where knots come from: a generator recipe or a file."""

    kind: str  # "equispaced" | "random" | "complex-segment" | "file"
    a: Scalar = 0.0
    b: Scalar = 0.0
    seed: int | None = None
    path: str | None = None

    def describe(self) -> str:
        if self.kind == "equispaced":
            return f"equispaced[{self.a!r},{self.b!r}]"
        if self.kind == "random":
            return f"random-uniform[{self.a!r},{self.b!r}] seed={self.seed} rng={RNG_NAME}"
        if self.kind == "complex-segment":
            return f"complex-segment[{self.a!r},{self.b!r}]"
        return f"file:{self.path}"


def equispaced_knots(a: float, b: float, n: int) -> list[float]:
    """n+1 points a + j*(b-a)/n for j = 0..n."""
    if a == b:
        raise ConfigError("--equispaced", "interval endpoints must differ")
    if n < 1:
        raise ConfigError("--n", "need n >= 1 for generated knots")
    h = (b - a) / n
    return [a + j * h for j in range(n + 1)]


def complex_segment_knots(a: complex, b: complex, n: int) -> list[Scalar]:
    """n+1 points equally spaced along the segment from a to b."""
    if a == b:
        raise ConfigError("--complex-segment", "segment endpoints must differ")
    if n < 1:
        raise ConfigError("--n", "need n >= 1 for generated knots")
    h = (complex(b) - complex(a)) / n
    return [as_scalar(complex(a) + j * h) for j in range(n + 1)]


def random_uniform_knots(a: float, b: float, n: int, seed: int) -> list[float]:
    """n+1 distinct uniform draws from [a, b); deterministic for a given seed.

    Collisions are essentially impossible with 53-bit uniforms but are
    handled by drawing replacements from the same stream.
    """
    if a == b:
        raise ConfigError("--random", "interval endpoints must differ")
    if n < 1:
        raise ConfigError("--n", "need n >= 1 for generated knots")
    if seed is None:
        raise ConfigError("--seed", "a seed is required with --random")
    stream = UniformStream(seed)
    want = n + 1
    out: list[float] = []
    seen = set()
    while len(out) < want:
        for u in stream.draw(want - len(out)):
            x = a + (b - a) * float(u)
            if x not in seen:
                seen.add(x)
                out.append(x)
    return out


def generate_knots(source: KnotSource, n: int) -> list[Scalar]:
    """Materialize a knot source; n is the prefix degree (n+1 knots)."""
    if source.kind == "equispaced":
        return equispaced_knots(float(source.a), float(source.b), n)
    if source.kind == "random":
        return random_uniform_knots(float(source.a), float(source.b), n, source.seed)
    if source.kind == "complex-segment":
        return complex_segment_knots(source.a, source.b, n)
    if source.kind == "file":
        return read_scalar_file(source.path)
    raise ConfigError("knot source", f"unknown kind {source.kind!r}")


def read_scalar_file(path: str) -> list[Scalar]:
    """Parse one scalar per line: ``re`` or ``re im``; '#' starts a comment."""
    out: list[Scalar] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if len(parts) == 1:
                    out.append(as_scalar(float(parts[0])))
                elif len(parts) == 2:
                    out.append(as_scalar(complex(float(parts[0]), float(parts[1]))))
                else:
                    raise ValueError("expected 1 or 2 fields")
            except ValueError as exc:
                raise InputFormatError(f"{path}:{lineno}: {exc}") from None
    return out
