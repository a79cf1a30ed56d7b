"""Multi-term modulus transformations for sn, cn and dn.

Each family relates a single Jacobi function at a transformed parameter
m~ to a p-term combination of functions at parameter m, the terms shifted
by equal fractions of the period (4K/p for odd p, 2K/p for even p):

    dn, p odd   dn(x, m~) = a1 * sum_i dn(a1 x + 4(i-1)K/p, m)
    dn, p even  same shape with a2 and 2(i-1)K/p shifts
    cn, p odd   cn(x, m~) = a3 * sum_i cn(b x + 4(i-1)K/p, m)
    cn, p even  cn(x, m~) = a4 * sum_i (-1)^(i-1) dn(a4 sqrt(m~) x + ..., m)
    sn, p odd   sn(x, m~) = a3 * sum_i sn(a1 x + 4(i-1)K/p, m)
    sn, p even  A5 a2 sn(x, m~) = prod_i sn(a2 x + 2(i-1)K/p, m)

The normalization constants are reciprocals of the corresponding sums of
shifted function values at x = 0, and m~ follows from cubic sums (A1..A4)
or the shift product A5; see :func:`coefficients`.  For p = 2 every family
collapses to the classical quadratic map of :mod:`landen.classic`.

Numerics: the defining sums suffer severe cancellation for large p and
small m (the normalizations grow like 1e5 and beyond), which in pure
binary64 leaves identity residuals near 1e-9.  All internal sums therefore
run in extended precision (np.longdouble) with compensated accumulation
and results are rounded to float64 at the API boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .elliptic import complete_elliptic_k, jacobi_eval

__all__ = [
    "Family",
    "LandenSpec",
    "LandenCoefficients",
    "IdentityResidual",
    "AlternatingSumDegenerateError",
    "coefficients",
    "transform_rhs",
    "verify_identity",
    "m_tilde_closed_p3",
    "m_tilde_closed_p4",
    "a5_product",
]

_LD = np.dtype(np.longdouble)

# Below this parameter the alternating sum behind the even cn family
# underflows toward zero (every dn tends to 1) and its reciprocal is
# noise; the operation refuses rather than fabricate a value.
CN_EVEN_MIN_M = 1e-8


class Family(str, Enum):
    DN = "dn"
    CN = "cn"
    SN = "sn"


class AlternatingSumDegenerateError(ValueError):
    """Alternating-sum normalization degenerate (even cn family, m -> 0)."""


@dataclass(frozen=True)
class LandenSpec:
    """Transformation selector: function family and term count p >= 2."""

    family: Family
    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or self.p < 2:
            raise ValueError(f"term count p must be an integer >= 2, got {self.p!r}")
        object.__setattr__(self, "family", Family(self.family))

    @property
    def odd(self) -> bool:
        return self.p % 2 == 1


@dataclass(frozen=True)
class LandenCoefficients:
    """Normalization, cubic-sum/product constant, transformed parameter,
    and the multiplier applied to x inside the right-hand side.

    `a_sum` is None for the odd sn family, whose parameter map
    m~ = m a1^2 / a3^2 involves no cubic sum or product constant.
    """

    alpha: float
    a_sum: float | None
    m_tilde: float
    arg_scale: float


@dataclass(frozen=True)
class IdentityResidual:
    """Absolute residual statistics of one identity over a uniform grid."""

    max_abs: float
    mean_abs: float
    grid_points: int
    x_span: float


def _csum(terms):
    """Neumaier-compensated sum of a sequence of same-shape terms."""
    acc = terms[0] * 0
    comp = acc
    for t in terms:
        s = acc + t
        comp = comp + np.where(np.abs(acc) >= np.abs(t), (acc - s) + t, (t - s) + acc)
        acc = s
    return acc + comp


@dataclass(frozen=True)
class _Raw:
    """Coefficient set in working precision, plus the shift geometry."""

    alpha: object
    a_sum: object
    m_tilde: object
    arg_scale: object
    big_k: object
    step: object


def _shift_step(big_k, p, odd, dtype):
    width = dtype.type(4) if odd else dtype.type(2)
    return width * big_k / dtype.type(p)


def _raw_coefficients(spec, m, dtype=_LD):
    m = float(m)
    if not np.isfinite(m) or m < 0.0 or m > 1.0:
        raise ValueError(f"parameter m must lie in [0, 1], got {m!r}")
    family, p, odd = spec.family, spec.p, spec.odd
    one = dtype.type(1)

    if family is Family.CN and not odd and m < CN_EVEN_MIN_M:
        raise AlternatingSumDegenerateError(
            f"alternating-sum degenerate: for m = {m!r} < {CN_EVEN_MIN_M} every dn "
            "tends to 1 and the alternating normalization underflows")

    if m == 1.0:
        # Hyperbolic limit: only the unshifted term survives (all shifted
        # arguments run off to infinity where sech vanishes, tanh -> 1).
        a_sum = None if (family is Family.SN and odd) else 1.0
        return _Raw(one, a_sum, one, one, math.inf, math.inf)

    big_k = complete_elliptic_k(m, dtype=dtype)
    step = _shift_step(big_k, p, odd, dtype)
    if m == 0.0:
        inv_p = one / dtype.type(p)
        if family is Family.DN:
            return _Raw(inv_p, dtype.type(p), dtype.type(0), inv_p, big_k, step)
        if family is Family.SN and not odd:
            a5 = dtype.type(p) / dtype.type(2) ** (p - 1)
            return _Raw(inv_p, a5, dtype.type(0), inv_p, big_k, step)
        if family is Family.SN:
            # sum of equally spaced cosines vanishes, so a3 diverges; the
            # parameter map still has the clean limit m~ = 0 and the inner
            # scale a1 -> 1/p.
            return _Raw(math.inf, None, dtype.type(0), inv_p, big_k, step)
        # odd cn: normalization diverges like the odd sn case and the inner
        # scale b = a3 sqrt(m~/m) has no closed limit worth fabricating.
        shifts = step * np.arange(p, dtype=dtype)
        a3_cubes = _csum(list(jacobi_eval(shifts, m, dtype=dtype).cn ** 3))
        return _Raw(math.inf, a3_cubes, dtype.type(0), math.nan, big_k, step)

    shifts = step * np.arange(p, dtype=dtype)
    sn, cn, dn = jacobi_eval(shifts, m, dtype=dtype)
    two = dtype.type(2)
    md = dtype.type(m)

    if family is Family.DN:
        alpha = one / _csum(list(dn))
        a_sum = _csum(list(dn ** 3))
        m_tilde = (md - two) * alpha ** 2 + two * alpha ** 3 * a_sum
        return _Raw(alpha, a_sum, m_tilde, alpha, big_k, step)

    if family is Family.CN and odd:
        alpha = one / _csum(list(cn))
        a_sum = _csum(list(cn ** 3))
        m_tilde = md / ((one - two * md) * alpha ** 2 + two * md * alpha ** 3 * a_sum)
        arg_scale = alpha * np.sqrt(m_tilde) / np.sqrt(md)
        return _Raw(alpha, a_sum, m_tilde, arg_scale, big_k, step)

    if family is Family.CN:
        signs = np.where(np.arange(p) % 2 == 0, one, -one)
        alpha = one / _csum(list(signs * dn))
        a_sum = _csum(list(signs * dn ** 3))
        m_tilde = one / ((md - two) * alpha ** 2 + two * alpha ** 3 * a_sum)
        return _Raw(alpha, a_sum, m_tilde, alpha * np.sqrt(m_tilde), big_k, step)

    if odd:  # sn, p odd
        a1 = one / _csum(list(dn))
        a3 = one / _csum(list(cn))
        m_tilde = md * a1 ** 2 / a3 ** 2
        return _Raw(a3, None, m_tilde, a1, big_k, step)

    # sn, p even
    a2 = one / _csum(list(dn))
    interior = step * np.arange(1, p, dtype=dtype)
    a5 = np.prod(jacobi_eval(interior, m, dtype=dtype).sn)
    m_tilde = md ** p * a2 ** 4 * a5 ** 4
    return _Raw(a2, a5, m_tilde, a2, big_k, step)


def coefficients(spec: LandenSpec, m) -> LandenCoefficients:
    """Normalization alpha, constant A (or A5), transformed parameter m~,
    and argument scale for one family at parameter m.

    m = 0 and m = 1 return the analytic limits rather than evaluating the
    defining sums (the quarter period diverges at m = 1; several sums
    vanish at m = 0).  The even cn family raises
    AlternatingSumDegenerateError below ``CN_EVEN_MIN_M``.
    """
    raw = _raw_coefficients(spec, m)
    a_sum = None if raw.a_sum is None else float(raw.a_sum)
    return LandenCoefficients(alpha=float(raw.alpha), a_sum=a_sum,
                              m_tilde=float(raw.m_tilde),
                              arg_scale=float(raw.arg_scale))


def _rhs_from_raw(raw, spec, m, x, dtype=_LD):
    if not (np.isfinite(float(raw.alpha)) and np.isfinite(float(raw.arg_scale))
            and np.isfinite(float(raw.step))):
        raise ValueError(
            f"right-hand side is not evaluable at m = {m!r} for {spec.family.value} "
            f"p = {spec.p}: coefficients degenerate at this boundary")
    family, p, odd = spec.family, spec.p, spec.odd
    x = np.asarray(x, dtype=dtype)
    args = raw.arg_scale * x
    shifts = raw.step * np.arange(p, dtype=dtype)

    if family is Family.SN and not odd:
        prod = np.ones_like(x)
        for i in range(p):
            prod = prod * jacobi_eval(args + shifts[i], m, dtype=dtype).sn
        return prod / (raw.a_sum * raw.alpha)

    terms = []
    for i in range(p):
        triple = jacobi_eval(args + shifts[i], m, dtype=dtype)
        if family is Family.DN:
            t = triple.dn
        elif family is Family.CN and odd:
            t = triple.cn
        elif family is Family.CN:
            t = triple.dn if i % 2 == 0 else -triple.dn
        else:
            t = triple.sn
        terms.append(t)
    return raw.alpha * _csum(terms)


def transform_rhs(spec: LandenSpec, m, x):
    """Evaluate the p-term side of the identity, normalized so it compares
    directly against the single function at (x, m~).

    For the even sn family this is the shifted product divided by A5 a2;
    for every other family the compensated alpha-weighted sum.  Accepts a
    scalar or array x; returns float64.
    """
    scalar = np.ndim(x) == 0
    raw = _raw_coefficients(spec, m)
    value = _rhs_from_raw(raw, spec, m, x)
    value = np.asarray(value, dtype=np.float64)
    return value[()] if scalar else value


def verify_identity(spec: LandenSpec, m, grid_points: int = 128) -> IdentityResidual:
    """Residual |lhs - rhs| of one identity over a uniform grid.

    The grid spans one full period of the left-hand side: [0, 2 K(m~)] for
    the dn family, [0, 4 K(m~)] for cn and sn.
    """
    if grid_points < 16:
        raise ValueError(f"grid_points must be at least 16, got {grid_points}")
    raw = _raw_coefficients(spec, m)
    m_tilde = float(raw.m_tilde)
    width = 2.0 if spec.family is Family.DN else 4.0
    span = width * float(complete_elliptic_k(m_tilde))
    xs = np.linspace(0.0, span, grid_points)

    rhs = _rhs_from_raw(raw, spec, m, xs)
    triple = jacobi_eval(np.asarray(xs, dtype=_LD), m_tilde, dtype=_LD)
    lhs = {Family.DN: triple.dn, Family.CN: triple.cn, Family.SN: triple.sn}[spec.family]
    diff = np.abs(np.asarray(lhs - rhs, dtype=np.float64))
    return IdentityResidual(max_abs=float(diff.max()), mean_abs=float(diff.mean()),
                            grid_points=grid_points, x_span=span)


def _check_open_interval(m):
    m = float(m)
    if not np.isfinite(m) or m <= 0.0 or m >= 1.0:
        raise ValueError(f"closed form requires 0 < m < 1, got {m!r}")
    return m


def m_tilde_closed_p3(m):
    """Closed-form transformed parameter for p = 3.

    Returns m (1-q)^2 / [(1+q)^2 (1+2q)^2] with q = dn(2K/3, m), after
    checking the quartic q^4 + 2q^3 - 2(1-m)q - (1-m) = 0 that q must
    satisfy (residual below 1e-12, else ArithmeticError).
    """
    m = _check_open_interval(m)
    big_k = complete_elliptic_k(m, dtype=_LD)
    q = jacobi_eval(2 * big_k / 3, m, dtype=_LD).dn
    mp1 = _LD.type(1.0 - m)
    quartic = q ** 4 + 2 * q ** 3 - 2 * mp1 * q - mp1
    if abs(float(quartic)) >= 1e-12:
        raise ArithmeticError(
            f"quartic consistency check failed at m = {m!r}: residual {float(quartic):.3e}")
    one = _LD.type(1)
    return float(_LD.type(m) * (one - q) ** 2 / ((one + q) ** 2 * (one + 2 * q) ** 2))


def m_tilde_closed_p4(m):
    """Closed-form transformed parameter for p = 4: (1-t)^4 / (1+t)^4 with
    t = (1-m)^(1/4).

    Checks dn(K/2) = dn(3K/2) = t and dn(K) = t^2 to 1e-12 first.
    """
    m = _check_open_interval(m)
    big_k = complete_elliptic_k(m, dtype=_LD)
    t = _LD.type(1.0 - m) ** _LD.type(0.25)
    half = jacobi_eval(big_k / 2, m, dtype=_LD).dn
    three_half = jacobi_eval(3 * big_k / 2, m, dtype=_LD).dn
    full = jacobi_eval(big_k, m, dtype=_LD).dn
    worst = max(abs(float(half - t)), abs(float(three_half - t)),
                abs(float(full - t * t)))
    if worst >= 1e-12:
        raise ArithmeticError(
            f"quarter-period dn consistency check failed at m = {m!r}: {worst:.3e}")
    one = _LD.type(1)
    return float((one - t) ** 4 / (one + t) ** 4)


def a5_product(p: int, m):
    """Product of sn over the interior even-p shift points,
    prod_{i=1}^{p-1} sn(2iK/p, m).

    At m = 0 this is the classical sine product sin(pi/p) ... and equals
    p / 2^(p-1) to rounding.
    """
    if not isinstance(p, (int, np.integer)) or p < 2 or p % 2 == 1:
        raise ValueError(f"a5_product requires an even integer p >= 2, got {p!r}")
    m = float(m)
    if not np.isfinite(m) or m < 0.0 or m >= 1.0:
        raise ValueError(f"a5_product requires 0 <= m < 1, got {m!r}")
    big_k = complete_elliptic_k(m, dtype=_LD)
    points = 2 * big_k * np.arange(1, p, dtype=_LD) / _LD.type(p)
    return float(np.prod(jacobi_eval(points, m, dtype=_LD).sn))
