"""Fractional Fourier transform in three equivalent realizations.

The canonical form is diagonal in the Hermite-function basis: coefficient n
picks up the phase exp(-i n alpha).  It is exact for every angle, including
0 and +-pi where the integral representation does not exist.  The integral
form is kept for cross-validation; on the Fock side the whole transform is
the rotation z -> exp(-i alpha) z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RepresentationUnavailableError
from .quadrature import LineRule
from .representation import FockCoeffs, HermiteCoeffs
from .special import SQRT_PI, BranchRule, branch_sqrt

__all__ = [
    "FrftAngle",
    "branched_prefactor",
    "frft_coeffs",
    "frft_integral",
    "fock_rotation",
    "spectral_projection",
    "frft_spectrum",
]

_TWO_PI = 2.0 * math.pi

#: Below this |sin(alpha)| the integral representation is refused outright.
MIN_SIN_ALPHA = 1e-3

#: Largest |cot(alpha)| handled by a single quadrature pass.  Beyond it the
#: chirp exp(i cot(alpha) t^2) oscillates too fast for a Gauss-Hermite rule
#: of admissible size, so the transform is evaluated as a composition of two
#: benign-angle passes through the group law.
MAX_DIRECT_COT = 1.25


@dataclass(frozen=True)
class FrftAngle:
    """Transform angle, reduced once to (-pi, pi] at construction."""

    alpha: float

    def __post_init__(self):
        a = math.remainder(float(self.alpha), _TWO_PI)
        if a <= -math.pi:
            a += _TWO_PI
        object.__setattr__(self, "alpha", a)

    @property
    def sin(self) -> float:
        return math.sin(self.alpha)

    @property
    def cot(self) -> float:
        return math.cos(self.alpha) / math.sin(self.alpha)


def _angle(alpha) -> FrftAngle:
    return alpha if isinstance(alpha, FrftAngle) else FrftAngle(float(alpha))


def branched_prefactor(alpha) -> complex:
    """sqrt(1 - i cot(alpha)) / sqrt(pi), argument of the root in (-pi/2, pi/2].

    Recomputed from the reduced angle on every call; never cached across
    sign changes of cot(alpha).
    """
    a = _angle(alpha)
    if abs(a.sin) < MIN_SIN_ALPHA:
        raise RepresentationUnavailableError(
            f"prefactor undefined this close to a singular angle (sin={a.sin:.2e})"
        )
    return branch_sqrt(1.0 - 1.0j * a.cot, BranchRule.ARG_IN_HALF_OPEN) / SQRT_PI


def _phases(alpha: FrftAngle, n: int) -> np.ndarray:
    return np.exp(-1j * alpha.alpha * np.arange(n))


def frft_coeffs(h: HermiteCoeffs, alpha) -> HermiteCoeffs:
    """Canonical fractional Fourier transform: c_n -> exp(-i n alpha) c_n."""
    a = _angle(alpha)
    return HermiteCoeffs(h.coeffs * _phases(a, h.order))


def fock_rotation(F: FockCoeffs, alpha) -> FockCoeffs:
    """Taylor coefficients of z -> F(exp(-i alpha) z): c_n -> exp(-i n alpha) c_n."""
    a = _angle(alpha)
    return FockCoeffs(F.coeffs * _phases(a, F.order))


def spectral_projection(k: int, h: HermiteCoeffs) -> HermiteCoeffs:
    """Orthogonal projection onto the span of h_n with n = k (mod 4)."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"projection index must be in 0..3, got {k}")
    c = h.coeffs.copy()
    mask = np.arange(c.size) % 4 != k
    c[mask] = 0.0
    return HermiteCoeffs(c)


def frft_spectrum(alpha, n: int) -> np.ndarray:
    """The first n eigenvalues exp(-i n alpha) of the transform."""
    return _phases(_angle(alpha), n)


def _stage_values(fvals: np.ndarray, a: FrftAngle, x: np.ndarray, rule: LineRule) -> np.ndarray:
    """One quadrature pass of the defining integral, vectorized over x.

    ``fvals`` are the integrand function's values at the rule nodes.
    """
    cot, csc = a.cot, 1.0 / a.sin
    cp = branched_prefactor(a)
    t = rule.nodes
    weighted = rule.weights_nogauss * fvals * np.exp(1j * cot * t * t)
    kernel = np.exp(-2j * csc * np.outer(x, t))
    return cp * np.exp(1j * cot * x * x) * (kernel @ weighted)


def frft_integral(f, alpha, x, rule: LineRule):
    """Fractional Fourier transform by its defining oscillatory integral.

    Valid only away from the singular angles (|sin alpha| >= 1e-3); use the
    coefficient form otherwise.  When |cot(alpha)| is large the value is
    produced by composing two quadrature passes with benign angles
    (alpha = (alpha - pi/2) + pi/2, exact by the group law); a single rule
    of admissible size cannot resolve the chirp in that regime.

    ``x`` may be a scalar or a 1-d array; the return matches.
    """
    a = _angle(alpha)
    if abs(a.sin) < MIN_SIN_ALPHA:
        raise RepresentationUnavailableError(
            f"integral form unavailable at sin(alpha)={a.sin:.2e}; "
            "frft_coeffs is exact for every angle"
        )
    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    xarr = np.atleast_1d(np.asarray(x, dtype=float))
    if abs(a.cot) <= MAX_DIRECT_COT:
        fvals = np.asarray(f(rule.nodes), dtype=complex)
        out = _stage_values(fvals, a, xarr, rule)
    else:
        # A quadrature pass is only trustworthy at evaluation points inside
        # its plane-wave bandwidth, about sqrt(0.9 k); the inner pass must
        # cover the outer rule's node span, so it runs on a larger rule, and
        # anything beyond its trusted radius is clipped to zero (the true
        # values there are Gaussian-negligible).
        from .quadrature import MAX_LINE_SIZE, gauss_hermite_rule

        inner_rule = gauss_hermite_rule(min(MAX_LINE_SIZE, max(rule.size, 2 * rule.size)))
        inner = FrftAngle(math.pi / 2.0)
        outer = FrftAngle(a.alpha - math.pi / 2.0)
        fvals = np.asarray(f(inner_rule.nodes), dtype=complex)
        mid = _stage_values(fvals, inner, rule.nodes, inner_rule)
        mid[np.abs(rule.nodes) > math.sqrt(0.9 * inner_rule.size)] = 0.0
        out = _stage_values(mid, outer, xarr, rule)
    return complex(out[0]) if scalar else out
