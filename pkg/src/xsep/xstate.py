"""Two-qubit X states, their PSD factor pairs, spectra and concurrence.

The factor pair is P1 = diag(t1, t2, t3, t4) and P2 with unit diagonal,
v1 in the (0,3) corner and v2 in the (1,2) slot (conjugates mirrored).
Their product is X shaped; it is Hermitian and PSD exactly when t3 = t2
and t4 = t1, in which case it has diagonal (t1, t2, t2, t1), corner t1*v1
and inner entry t2*v2. With t1 + t2 = 1/2 the product is a normalized
two-qubit state.

All criteria downstream depend only on |v1| and |v2|, but the matrices
built here keep the complex phases: partial transposition acts on the
phased entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import InvalidParams

# Slack on the |v| <= 1 bound, absorbing roundoff in moduli of unit phases.
_V_BOUND_SLACK = 1e-12

# Slack on the 2x2 block PSD inequalities of an X matrix.
_PSD_SLACK = 1e-10


def _check_finite(value: complex, name: str) -> None:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise InvalidParams(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class XParams:
    """Parameters (t1, t2, t3, t4, v1, v2) of the factor pair.

    The diagonal weights must be nonnegative and the off-diagonal
    amplitudes must satisfy |v1| <= 1 and |v2| <= 1, otherwise the second
    factor is not positive semi-definite.
    """

    t1: float
    t2: float
    t3: float
    t4: float
    v1: complex
    v2: complex

    def __post_init__(self):
        for name in ("t1", "t2", "t3", "t4"):
            t = float(getattr(self, name))
            if not math.isfinite(t):
                raise InvalidParams(f"{name} must be finite, got {t!r}")
            if t < 0:
                raise InvalidParams(f"{name} must be nonnegative, got {t}")
            object.__setattr__(self, name, t)
        for name in ("v1", "v2"):
            v = complex(getattr(self, name))
            _check_finite(v, name)
            if abs(v) > 1.0 + _V_BOUND_SLACK:
                raise InvalidParams(f"|{name}| must be <= 1, got {abs(v)}")
            object.__setattr__(self, name, v)

    @classmethod
    def symmetric(cls, t1: float, t2: float, v1: complex, v2: complex) -> "XParams":
        """Parameters with t3 = t2 and t4 = t1, yielding a Hermitian PSD product."""
        return cls(t1, t2, t2, t1, v1, v2)

    @property
    def is_symmetric(self) -> bool:
        return self.t3 == self.t2 and self.t4 == self.t1


@dataclass(frozen=True, eq=False)
class FactorPair:
    """The PSD pair (p1 diagonal, p2 unit-diagonal X shaped)."""

    p1: np.ndarray
    p2: np.ndarray


@dataclass(frozen=True)
class XMatrix:
    """A Hermitian X-shaped 4x4 matrix.

    Nonzero entries live on the diagonal (d11..d44, nonnegative) and the
    antidiagonal (c14 at (0,3), c23 at (1,2), conjugates mirrored). The
    two 2x2 blocks must be positive semi-definite: d11*d44 >= |c14|^2 and
    d22*d33 >= |c23|^2, up to a small slack.
    """

    d11: float
    d22: float
    d33: float
    d44: float
    c14: complex
    c23: complex

    def __post_init__(self):
        for name in ("d11", "d22", "d33", "d44"):
            d = float(getattr(self, name))
            if not math.isfinite(d):
                raise InvalidParams(f"{name} must be finite, got {d!r}")
            if d < -_PSD_SLACK:
                raise InvalidParams(f"diagonal entry {name} must be nonnegative, got {d}")
            object.__setattr__(self, name, d)
        for name in ("c14", "c23"):
            c = complex(getattr(self, name))
            _check_finite(c, name)
            object.__setattr__(self, name, c)
        if self.d11 * self.d44 < abs(self.c14) ** 2 - _PSD_SLACK:
            raise InvalidParams(
                "outer block not PSD: d11*d44 < |c14|^2 "
                f"({self.d11 * self.d44} < {abs(self.c14) ** 2})"
            )
        if self.d22 * self.d33 < abs(self.c23) ** 2 - _PSD_SLACK:
            raise InvalidParams(
                "inner block not PSD: d22*d33 < |c23|^2 "
                f"({self.d22 * self.d33} < {abs(self.c23) ** 2})"
            )

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.d11, self.d22, self.d33, self.d44
        m[0, 3] = self.c14
        m[3, 0] = np.conj(self.c14)
        m[1, 2] = self.c23
        m[2, 1] = np.conj(self.c23)
        return m

    @property
    def trace(self) -> float:
        return self.d11 + self.d22 + self.d33 + self.d44

    def is_normalized(self, tol: float = 1e-12) -> bool:
        return abs(self.trace - 1.0) <= tol

    @classmethod
    def from_matrix(cls, a: np.ndarray, tol: float = linalg.DEFAULT_TOL) -> "XMatrix":
        """Read an X matrix off a dense 4x4 array; rejects non-X shapes."""
        a = np.asarray(a, dtype=complex)
        if a.shape != (4, 4):
            raise InvalidParams(f"an X matrix is 4x4, got shape {a.shape}")
        if not is_x_shaped(a, tol):
            raise InvalidParams("matrix is not X shaped within tolerance")
        defect, _ = linalg.hermiticity_defect(a)
        if defect > tol:
            raise InvalidParams(f"matrix is not Hermitian within {tol} (defect {defect:.3e})")
        return cls(
            d11=a[0, 0].real, d22=a[1, 1].real, d33=a[2, 2].real, d44=a[3, 3].real,
            c14=complex(a[0, 3]), c23=complex(a[1, 2]),
        )


def is_x_shaped(a: np.ndarray, tol: float = linalg.DEFAULT_TOL) -> bool:
    """True iff every entry off the diagonal and antidiagonal is below tol."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    n = a.shape[0]
    mask = np.ones((n, n), dtype=bool)
    idx = np.arange(n)
    mask[idx, idx] = False
    mask[idx, n - 1 - idx] = False
    return bool(np.all(np.abs(a[mask]) <= tol))


def build_factors(params: XParams) -> FactorPair:
    """Assemble the factor pair (P1, P2) from validated parameters."""
    p1 = np.diag(np.array([params.t1, params.t2, params.t3, params.t4], dtype=complex))
    p2 = np.eye(4, dtype=complex)
    p2[0, 3] = params.v1
    p2[3, 0] = np.conj(params.v1)
    p2[1, 2] = params.v2
    p2[2, 1] = np.conj(params.v2)
    return FactorPair(p1=p1, p2=p2)


def product_state(params: XParams) -> XMatrix:
    """The X-shaped product P1 @ P2 for symmetric parameters.

    Requires t3 = t2 and t4 = t1; without that symmetry the product is
    not Hermitian and cannot be an XMatrix. Normalization (t1 + t2 = 1/2)
    is not enforced here; `concurrence` checks it where it matters.
    """
    if not params.is_symmetric:
        raise InvalidParams(
            "product is Hermitian and PSD only for t3 == t2 and t4 == t1; "
            f"got t3={params.t3}, t2={params.t2}, t4={params.t4}, t1={params.t1}"
        )
    return XMatrix(
        d11=params.t1, d22=params.t2, d33=params.t2, d44=params.t1,
        c14=params.t1 * params.v1, c23=params.t2 * params.v2,
    )


def x_eigenvalues(x: XMatrix) -> np.ndarray:
    """The four eigenvalues of an X matrix in closed form, sorted descending.

    Each 2x2 block contributes mean +- sqrt(half-gap^2 + |corner|^2).
    """
    mean_out = 0.5 * (x.d11 + x.d44)
    half_out = 0.5 * (x.d11 - x.d44)
    rad_out = math.sqrt(half_out * half_out + abs(x.c14) ** 2)
    mean_in = 0.5 * (x.d22 + x.d33)
    half_in = 0.5 * (x.d22 - x.d33)
    rad_in = math.sqrt(half_in * half_in + abs(x.c23) ** 2)
    w = np.array([mean_out + rad_out, mean_out - rad_out,
                  mean_in + rad_in, mean_in - rad_in])
    return np.sort(w)[::-1].copy()


def concurrence(x: XMatrix, trace_tol: float = 1e-9) -> float:
    """Concurrence of a normalized X state.

    C = 2 max{0, |c23| - sqrt(d11*d44), |c14| - sqrt(d22*d33)}; zero
    exactly for separable states. Raises unless the trace is 1 within
    `trace_tol`.
    """
    if abs(x.trace - 1.0) > trace_tol:
        raise InvalidParams(
            f"concurrence needs a normalized state, trace is {x.trace!r}"
        )
    inner = abs(x.c23) - math.sqrt(max(x.d11 * x.d44, 0.0))
    outer = abs(x.c14) - math.sqrt(max(x.d22 * x.d33, 0.0))
    return 2.0 * max(0.0, inner, outer)


def family_concurrence(params: XParams) -> float:
    """Closed-form concurrence of the symmetric family: 2 max{0, t2|v2|-t1, t1|v1|-t2}.

    Unlike `concurrence` this needs no normalization; it is the same
    formula expressed through the factor parameters.
    """
    return 2.0 * max(
        0.0,
        params.t2 * abs(params.v2) - params.t1,
        params.t1 * abs(params.v1) - params.t2,
    )


def zero_concurrence_region(params: XParams) -> bool:
    """True iff the family state has zero concurrence.

    For t1, t2 > 0 this is the region |v1| <= t2/t1 and |v2| <= t1/t2;
    degenerate weights fall back to evaluating the concurrence formula
    directly (the multiplicative form below covers both).
    """
    return (
        params.t2 * abs(params.v2) <= params.t1
        and params.t1 * abs(params.v1) <= params.t2
    )
