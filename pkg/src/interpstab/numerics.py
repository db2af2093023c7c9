"""Extended-precision arithmetic and the ground-truth evaluator.

Working precision is IEEE binary64.  The wide format is a double-double:
an unevaluated pair hi + lo with |lo| <= ulp(hi)/2, giving roughly twice
the working precision.  Every wide operation below keeps its relative
error within a small multiple of the square of the working-precision
unit roundoff, which is what lets wide results stand in for exact values
in error measurements.  The error-free transforms assume intermediate
magnitudes stay far from binary64 under/overflow (roughly 1e-290..1e290),
which holds at the problem sizes and data ranges this library targets.

All primitives are written with plain arithmetic operators so the same
code runs on Python floats (scalar paths) and on numpy arrays (batched
evaluation points).
"""

from __future__ import annotations

import math
import sys

import numpy as np

from .problem import EvalSpec, InterpProblem, Scalar

# Dekker splitting constant for binary64: 2**27 + 1.
_SPLITTER = 134217729.0


def unit_roundoff() -> float:
    """Spacing between 1.0 and the next representable working-precision value."""
    return sys.float_info.epsilon


def _two_sum(a, b):
    """Error-free sum: returns (s, e) with s = fl(a+b) and s + e == a + b."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _fast_two_sum(a, b):
    # Requires |a| >= |b| (or a == 0).
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    """Error-free product via Dekker splitting: p + e == a * b exactly."""
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


class DD:
    """Real double-double value; components are floats or numpy arrays."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi, lo=0.0):
        self.hi = hi
        self.lo = lo

    def __repr__(self):
        return f"DD({self.hi!r}, {self.lo!r})"

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __abs__(self):
        hi = self.hi
        if isinstance(hi, float):
            return DD(-hi, -self.lo) if hi < 0.0 else self
        neg = hi < 0.0
        return DD(np.where(neg, -hi, hi), np.where(neg, -self.lo, self.lo))

    def __add__(self, other):
        o = _as_dd(other)
        s, e = _two_sum(self.hi, o.hi)
        t, f = _two_sum(self.lo, o.lo)
        e = e + t
        s, e = _fast_two_sum(s, e)
        e = e + f
        hi, lo = _fast_two_sum(s, e)
        return DD(hi, lo)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_dd(other))

    def __rsub__(self, other):
        return _as_dd(other) + (-self)

    def __mul__(self, other):
        o = _as_dd(other)
        p, e = _two_prod(self.hi, o.hi)
        e = e + (self.hi * o.lo + self.lo * o.hi)
        hi, lo = _fast_two_sum(p, e)
        return DD(hi, lo)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_dd(other)
        q1 = self.hi / o.hi
        r = self - o * q1
        q2 = r.hi / o.hi
        r = r - o * q2
        q3 = r.hi / o.hi
        s, e = _fast_two_sum(q1, q2)
        hi, lo = _fast_two_sum(s, e + q3)
        return DD(hi, lo)

    def __rtruediv__(self, other):
        return _as_dd(other) / self

    def sqrt(self):
        """Square root with double-double accuracy (nonnegative input)."""
        hi = self.hi
        if isinstance(hi, float):
            if hi == 0.0:
                return DD(0.0, 0.0)
            s = math.sqrt(hi)
            p, e = _two_prod(s, s)
            d = self - DD(p, e)
            res, err = _fast_two_sum(s, d.hi / (2.0 * s))
            return DD(res, err)
        s = np.sqrt(hi)
        p, e = _two_prod(s, s)
        d = self - DD(p, e)
        denom = np.where(s == 0.0, 1.0, 2.0 * s)
        corr = np.where(s == 0.0, 0.0, d.hi / denom)
        res, err = _fast_two_sum(s, corr)
        return DD(res, err)

    def to_float(self):
        return self.hi + self.lo

    def is_one(self) -> bool:
        return (
            isinstance(self.hi, float) and self.hi == 1.0 and self.lo == 0.0
        )


def _as_dd(x):
    if isinstance(x, DD):
        return x
    return DD(x, x * 0.0)


class CDD:
    """Complex wide value: a double-double for each component."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = re if isinstance(re, DD) else DD(re, re * 0.0)
        self.im = im if isinstance(im, DD) else DD(im, im * 0.0)

    def __repr__(self):
        return f"CDD({self.re!r}, {self.im!r})"

    def __neg__(self):
        return CDD(-self.re, -self.im)

    def __add__(self, other):
        o = _as_cdd(other)
        return CDD(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_cdd(other))

    def __rsub__(self, other):
        return _as_cdd(other) + (-self)

    def __mul__(self, other):
        o = _as_cdd(other)
        return CDD(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_cdd(other)
        # Unscaled formula; safe at the magnitudes this library works with.
        den = o.re * o.re + o.im * o.im
        return CDD(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def __rtruediv__(self, other):
        return _as_cdd(other) / self

    def __abs__(self) -> DD:
        return (self.re * self.re + self.im * self.im).sqrt()

    def to_complex(self):
        return complex(self.re.to_float(), self.im.to_float())

    def is_one(self) -> bool:
        return (
            self.re.is_one()
            and isinstance(self.im.hi, float)
            and self.im.hi == 0.0
            and self.im.lo == 0.0
        )


def _as_cdd(x):
    if isinstance(x, CDD):
        return x
    if isinstance(x, DD):
        return CDD(x, DD(x.hi * 0.0, 0.0))
    if isinstance(x, complex):
        return CDD(DD(x.real), DD(x.imag))
    return CDD(DD(x, x * 0.0), DD(x * 0.0, 0.0))


def wide(x):
    """Promote a working-precision scalar (or array) to the wide format."""
    if isinstance(x, (DD, CDD)):
        return x
    if isinstance(x, complex):
        return CDD(DD(x.real), DD(x.imag))
    if isinstance(x, np.ndarray) and np.iscomplexobj(x):
        return CDD(DD(np.ascontiguousarray(x.real)), DD(np.ascontiguousarray(x.imag)))
    return DD(x, x * 0.0)


def wide_pow(x, k: int):
    """x**k for integer k >= 0 by repeated wide multiplication (0**0 == 1)."""
    if k < 0:
        raise ValueError("wide_pow expects a nonnegative exponent")
    w = wide(x)
    acc = CDD(DD(1.0), DD(0.0)) if isinstance(w, CDD) else DD(1.0)
    for _ in range(k):
        acc = acc * w
    return acc


def narrow(x) -> Scalar:
    """Round a wide value back to working precision."""
    if isinstance(x, CDD):
        c = x.to_complex()
        return c.real if c.imag == 0.0 else c
    return x.to_float()


def magnitude(x: Scalar) -> float:
    """|x| computed as sqrt(re^2 + im^2); byte-deterministic across platforms."""
    if isinstance(x, complex):
        return math.sqrt(x.real * x.real + x.imag * x.imag)
    return abs(x)


def coincidence_index(knots, z, t):
    """Smallest j with z equal (in working precision) to the product t * z_j.

    Returns None when no knot coincides.  The comparison uses the rounded
    product, matching how the evaluation algorithms would see the data.
    """
    for j, zj in enumerate(knots):
        if z == t * zj:
            return j
    return None


def _is_complex_data(knots, values, z, t) -> bool:
    if isinstance(z, np.ndarray):
        zc = np.iscomplexobj(z)
    else:
        zc = isinstance(z, complex)
    return (
        zc
        or isinstance(t, complex)
        or any(isinstance(k, complex) for k in knots)
        or any(isinstance(v, complex) for v in values)
    )


def _oracle_prefix_wide(knots, values, z, t):
    """Wide-precision prefix values p_0..p_N by direct term-by-term summation.

    Each p_n is the sum of its defining terms, every term an explicit
    product; no work is shared with the recurrences under test.  O(N^3).
    """
    n_pts = len(knots)
    cplx = _is_complex_data(knots, values, z, t)
    lift = _as_cdd if cplx else _as_dd
    wz = lift(wide(z))
    wt = lift(wide(t))
    wk = [lift(wide(k)) for k in knots]
    wf = [lift(wide(v)) for v in values]
    num = [wz - wt * wk[i] for i in range(n_pts)]

    j_star = coincidence_index(knots, z, t) if not isinstance(z, np.ndarray) else None

    out = []
    for n in range(n_pts):
        if j_star is not None and n >= j_star:
            out.append(wf[j_star] * wide_pow(wt, n))
            continue
        acc = lift(wide(0.0))
        for j in range(n + 1):
            num_prod = lift(wide(1.0))
            den_prod = lift(wide(1.0))
            for i in range(n + 1):
                if i == j:
                    continue
                num_prod = num_prod * num[i]
                den_prod = den_prod * (wk[j] - wk[i])
            acc = acc + wf[j] * num_prod / den_prod
        out.append(acc)
    return out


def oracle_prefix_values(problem: InterpProblem, spec: EvalSpec) -> list[Scalar]:
    """Ground-truth prefix values, rounded to working precision at the end.

    Forward relative error is a few units of working precision, dominated
    by the final rounding, so these values serve as the exact reference in
    all error measurements.
    """
    wide_vals = _oracle_prefix_wide(problem.knots, problem.values, spec.z, spec.t)
    return [narrow(v) for v in wide_vals]


def _condition_sums_wide(knots, values, z, t):
    """S_n = sum_j |f_j| * prod_{i<=n, i!=j} |z - t*z_i| / |z_j - z_i|, wide.

    All factors are nonnegative, so products and sums may be accumulated
    incrementally without cancellation; accuracy stays at the wide level
    regardless of association order.  ``z`` may be a scalar or an ndarray
    of evaluation points (handled by the 2D-blocked variant below).

    Returns a list of positive DD values (or DD arrays), one per prefix.
    """
    if isinstance(z, np.ndarray):
        return _condition_sums_wide_batch(knots, values, z, t)
    n_pts = len(knots)
    cplx = _is_complex_data(knots, values, z, t)
    lift = _as_cdd if cplx else _as_dd
    wz = lift(wide(z))
    wt = lift(wide(t))
    wk = [lift(wide(k)) for k in knots]

    a = [abs(wz - wt * wk[i]) for i in range(n_pts)]  # DD, >= 0
    absf = [abs(lift(wide(v))) for v in values]
    a_is_one = [x.is_one() for x in a]

    terms: list[DD] = [absf[0]]
    lead = a[0] * DD(1.0)  # prod of a_i over i < n at the top of each step
    out = [terms[0]]
    for n in range(1, n_pts):
        an = a[n]
        if a_is_one[n]:
            for j in range(n):
                terms[j] = terms[j] / abs(wk[j] - wk[n])
        else:
            for j in range(n):
                terms[j] = terms[j] * an / abs(wk[j] - wk[n])
        den = abs(wk[n] - wk[0])
        for i in range(1, n):
            den = den * abs(wk[n] - wk[i])
        terms.append(absf[n] * lead / den)
        lead = lead * an
        s = terms[0]
        for j in range(1, n + 1):
            s = s + terms[j]
        out.append(s)
    return out


def _condition_sums_wide_batch(knots, values, zs: np.ndarray, t):
    """Batched condition sums over an array of evaluation points.

    Keeps the per-knot terms as rows of one 2D double-double array so each
    prefix step performs a constant number of array operations.
    """
    n_pts = len(knots)
    cplx = _is_complex_data(knots, values, zs, t)
    lift = _as_cdd if cplx else _as_dd
    wz = lift(wide(zs))
    wt = lift(wide(t))
    wk = [lift(wide(k)) for k in knots]

    a = [abs(wz - wt * wk[i]) for i in range(n_pts)]  # DD arrays, >= 0
    absf = [abs(lift(wide(v))) for v in values]  # DD scalars

    # |z_j - z_i| for all pairs, as a DD matrix.
    if cplx:
        karr = np.array(knots, dtype=complex)
        dre = DD(np.ascontiguousarray(karr.real[:, None])) - DD(karr.real[None, :])
        dim = DD(np.ascontiguousarray(karr.imag[:, None])) - DD(karr.imag[None, :])
        kdist = (dre * dre + dim * dim).sqrt()
    else:
        karr = np.array(knots, dtype=float)
        kdist = abs(DD(karr[:, None]) - DD(karr[None, :]))

    shape = (n_pts,) + zs.shape
    row_hi = np.empty(shape)
    row_lo = np.empty(shape)
    row_hi[0] = absf[0].hi
    row_lo[0] = absf[0].lo
    lead = a[0] * DD(1.0)

    out = [DD(row_hi[0].copy(), row_lo[0].copy())]
    for n in range(1, n_pts):
        an = a[n]
        dcol = DD(kdist.hi[:n, n : n + 1], kdist.lo[:n, n : n + 1])
        upd = DD(row_hi[:n], row_lo[:n]) * DD(an.hi[None, :], an.lo[None, :]) / dcol
        row_hi[:n] = upd.hi
        row_lo[:n] = upd.lo
        den = DD(kdist.hi[n, 0], kdist.lo[n, 0])
        for i in range(1, n):
            den = den * DD(kdist.hi[n, i], kdist.lo[n, i])
        fresh = absf[n] * lead / den
        row_hi[n] = fresh.hi
        row_lo[n] = fresh.lo
        lead = lead * an
        s = DD(row_hi[0], row_lo[0])
        for j in range(1, n + 1):
            s = s + DD(row_hi[j], row_lo[j])
        out.append(s)
    return out


def condition_sums(problem: InterpProblem, spec: EvalSpec) -> list[float]:
    """Per-prefix absolute term sums of the evaluator, as working-precision floats.

    These are the weights that multiply relative data perturbations in the
    first-order sensitivity of the problem; every error metric and bound in
    the analysis module normalizes against their maximum.
    """
    sums = _condition_sums_wide(problem.knots, problem.values, spec.z, spec.t)
    return [s.to_float() for s in sums]
