"""Function representations on both sides of the Bargmann transform.

The package carries an L^2(R) function either as samples on a uniform grid
(:class:`SampledSignal`) or as a truncated coefficient vector in the Hermite
function basis (:class:`HermiteCoeffs`); an entire function is carried as a
truncated coefficient vector in the normalized monomial basis
(:class:`FockCoeffs`).  In coefficients the Bargmann transform is the
identity map between the two bases; the direct integral forms are provided
for cross-validation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import ConfigurationError, EnvelopeError
from .quadrature import LineRule, PlaneRule, integrate_line, integrate_plane
from .special import NORM_CONSTANT, hermite_fn_all

__all__ = [
    "SampledSignal",
    "HermiteCoeffs",
    "FockCoeffs",
    "analyze",
    "synthesize",
    "bargmann_coeff",
    "inverse_bargmann_coeff",
    "bargmann_direct",
    "inverse_bargmann_direct",
    "fock_eval",
]

#: Default guard on |z| for the direct integral transforms; larger arguments
#: need an explicitly larger rule.
DEFAULT_Z_MAX = 3.0

#: Truncation cap for inverse_bargmann_direct (the integrand must stay
#: resolvable by the plane rule).
INVERSE_DIRECT_MAX_ORDER = 40


@dataclass(frozen=True)
class SampledSignal:
    """Complex samples of a function on the uniform grid x0 + dx*arange(m)."""

    x0: float
    dx: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=complex)
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)
        if vals.size < 2:
            raise ConfigurationError(f"signal needs at least 2 samples, got {vals.size}")
        if not self.dx > 0.0:
            raise ConfigurationError(f"grid spacing must be positive, got {self.dx}")
        if not np.all(np.isfinite(vals.view(float))):
            raise ConfigurationError("signal contains non-finite samples")

    @property
    def grid(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.values.size)

    def norm(self) -> float:
        """Discrete L^2 norm sqrt(dx * sum |v|^2)."""
        return math.sqrt(self.dx * float(np.sum(np.abs(self.values) ** 2)))


class _CoeffVector:
    coeffs: np.ndarray

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    @property
    def order(self) -> int:
        return self.coeffs.size

    def padded(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=complex)
        out[: min(n, self.coeffs.size)] = self.coeffs[:n]
        return out


@dataclass(frozen=True)
class HermiteCoeffs(_CoeffVector):
    """Coefficients against the Hermite functions; entry n multiplies h_n."""

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size < 1:
            raise ConfigurationError("coefficients must be a nonempty 1-d vector")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)


@dataclass(frozen=True)
class FockCoeffs(_CoeffVector):
    """Coefficients against the normalized monomials; entry n multiplies z^n/sqrt(n!)."""

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size < 1:
            raise ConfigurationError("coefficients must be a nonempty 1-d vector")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)


def _as_callable(f):
    """Wrap a SampledSignal as a callable: cubic inside the grid, zero outside."""
    if isinstance(f, SampledSignal):
        spline = CubicSpline(f.grid, f.values, extrapolate=False)

        def evaluate(x):
            out = np.asarray(spline(x), dtype=complex)
            return np.where(np.isnan(out), 0.0 + 0.0j, out)

        return evaluate
    return f


def analyze(f, n_coeffs: int, rule: LineRule) -> HermiteCoeffs:
    """Project a function (callable or SampledSignal) onto h_0..h_{n-1}.

    The rule must have at least twice as many nodes as requested
    coefficients: the projection integrands have polynomial degree about
    2n against the Gaussian weight.
    """
    if n_coeffs < 1:
        raise ConfigurationError(f"need at least one coefficient, got {n_coeffs}")
    if rule.size < 2 * n_coeffs:
        raise ConfigurationError(
            f"rule of size {rule.size} is too small for {n_coeffs} coefficients; "
            f"need at least {2 * n_coeffs} nodes"
        )
    fvals = np.asarray(_as_callable(f)(rule.nodes), dtype=complex)
    hmat = hermite_fn_all(n_coeffs - 1, rule.nodes)
    weighted = rule.weights_nogauss * fvals
    coeffs = np.array(
        [
            complex(math.fsum(hmat[n] * weighted.real), math.fsum(hmat[n] * weighted.imag))
            for n in range(n_coeffs)
        ]
    )
    return HermiteCoeffs(coeffs)


def synthesize(coeffs: HermiteCoeffs, x0: float, dx: float, m: int) -> SampledSignal:
    """Evaluate sum_n c_n h_n on a uniform grid."""
    grid = x0 + dx * np.arange(m)
    hmat = hermite_fn_all(coeffs.order - 1, grid)
    return SampledSignal(x0, dx, coeffs.coeffs @ hmat)


def hermite_eval(coeffs: HermiteCoeffs, x):
    """Pointwise sum_n c_n h_n(x); scalar in, scalar out."""
    xarr = np.atleast_1d(np.asarray(x, dtype=float))
    out = coeffs.coeffs @ hermite_fn_all(coeffs.order - 1, xarr)
    return complex(out[0]) if np.isscalar(x) or np.asarray(x).ndim == 0 else out


def bargmann_coeff(h: HermiteCoeffs) -> FockCoeffs:
    """Bargmann transform in coefficients: h_n maps to z^n/sqrt(n!) verbatim."""
    return FockCoeffs(h.coeffs)


def inverse_bargmann_coeff(F: FockCoeffs) -> HermiteCoeffs:
    """Inverse Bargmann transform in coefficients (identity on the vector)."""
    return HermiteCoeffs(F.coeffs)


def fock_eval(F: FockCoeffs, z):
    """Evaluate sum_n c_n z^n/sqrt(n!) with a stable term recurrence.

    Accepts a scalar or ndarray ``z``.
    """
    zarr = np.asarray(z, dtype=complex)
    term = np.ones_like(zarr)
    acc = F.coeffs[0] * term
    for k in range(1, F.order):
        term = term * zarr / math.sqrt(k)
        acc = acc + F.coeffs[k] * term
    return complex(acc) if np.isscalar(z) or zarr.ndim == 0 else acc


def bargmann_direct(f, z: complex, rule: LineRule, z_max: float = DEFAULT_Z_MAX) -> complex:
    """Bargmann transform by its defining integral.

    c * integral of f(x) exp(2xz - x^2 - z^2/2) dx, where c = (2/pi)^{1/4}.
    ``f`` must decay like the Hermite-Gaussian class for the rule to apply.
    """
    z = complex(z)
    if abs(z) > z_max:
        raise EnvelopeError(
            f"|z|={abs(z):.3f} exceeds the guard {z_max}; pass z_max explicitly "
            "with a correspondingly larger rule"
        )
    fc = _as_callable(f)
    pref = cmath.exp(-0.5 * z * z)

    def integrand(x):
        return np.asarray(fc(x), dtype=complex) * np.exp(2.0 * x * z - x * x)

    return NORM_CONSTANT * pref * integrate_line(rule, integrand)


def inverse_bargmann_direct(
    F: FockCoeffs, x: float, rule: PlaneRule, x_max: float = DEFAULT_Z_MAX
) -> complex:
    """Inverse Bargmann transform by its defining integral.

    c * integral of F(z) exp(2x conj(z) - x^2 - conj(z)^2/2) dlambda(z).
    """
    if F.order > INVERSE_DIRECT_MAX_ORDER:
        raise EnvelopeError(
            f"truncation {F.order} exceeds {INVERSE_DIRECT_MAX_ORDER}; the plane "
            "rule cannot resolve the integrand"
        )
    if abs(x) > x_max:
        raise EnvelopeError(
            f"|x|={abs(x):.3f} exceeds the guard {x_max}; pass x_max explicitly "
            "with a correspondingly larger rule"
        )

    def integrand(z):
        zb = np.conj(z)
        return fock_eval(F, z) * np.exp(2.0 * x * zb - x * x - 0.5 * zb * zb)

    return NORM_CONSTANT * integrate_plane(rule, integrand)
