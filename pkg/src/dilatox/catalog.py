"""Closed-form example families: the linear map, the radial stretching, the
log-singular disc automorphism, and the exact radial Beltrami solution.

Each entry carries analytic partials plus closed-form dilatation, area, and
boundary length, which serve as oracles for the quadrature-based functionals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import ConfigError
from .mapping import MappingModel, RadialProfile, model_from_profile


@dataclass(frozen=True)
class CatalogEntry:
    """A model together with its closed-form functionals.

    dilatation(r, p) is the angular dilatation D_p (theta-independent for all
    catalog families, so it doubles as the circular mean d_p); area(r) is the
    Lebesgue area of the image of B_r; length(r) the image boundary length;
    ratio(r) the modulus ratio |f(z)|/|z| on the circle of radius r.
    """

    model: MappingModel
    dilatation: Callable[[np.ndarray, float], np.ndarray]
    area: Callable[[float], float]
    length: Callable[[float], float]
    ratio: Callable[[np.ndarray], np.ndarray]


def linear(k: complex) -> CatalogEntry:
    """f(z) = k z with 0 < |k| <= 1."""
    k = complex(k)
    ak = abs(k)
    if not 0.0 < ak <= 1.0:
        raise ConfigError(f"linear map needs 0 < |k| <= 1, got |k|={ak}")

    def value(r, theta):
        return k * np.asarray(r) * np.exp(1j * np.asarray(theta))

    def partial_r(r, theta):
        return k * np.exp(1j * np.asarray(theta)) * np.ones_like(np.asarray(r, dtype=float))

    def partial_theta(r, theta):
        return 1j * k * np.asarray(r) * np.exp(1j * np.asarray(theta))

    k_str = f"{k.real:g}" if k.imag == 0.0 else f"{k.real:g}{k.imag:+g}j"
    model = MappingModel(label=f"linear(k={k_str})", value=value, partial_r=partial_r,
                         partial_theta=partial_theta, theta_invariant=True)
    return CatalogEntry(
        model=model,
        dilatation=lambda r, p: np.full_like(np.asarray(r, dtype=float), ak ** (p - 2.0)),
        area=lambda r: math.pi * ak * ak * r * r,
        length=lambda r: 2.0 * math.pi * ak * r,
        ratio=lambda r: np.full_like(np.asarray(r, dtype=float), ak),
    )


def identity() -> CatalogEntry:
    """The identity map, the conformal equality case of every bound."""
    entry = linear(1.0)
    return CatalogEntry(model=entry.model.with_label("identity"),
                        dilatation=entry.dilatation, area=entry.area,
                        length=entry.length, ratio=entry.ratio)


def radial_stretch(alpha: float) -> CatalogEntry:
    """f(z) = z |z|^alpha, alpha > 0: vanishing asymptotic ratio at the origin."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise ConfigError(f"radial stretch needs alpha > 0, got {alpha}")
    profile = RadialProfile(
        R=lambda r: np.asarray(r, dtype=float) ** (alpha + 1.0),
        R_prime=lambda r: (alpha + 1.0) * np.asarray(r, dtype=float) ** alpha,
    )
    model = model_from_profile(profile, label=f"radial_stretch(alpha={alpha:g})")
    return CatalogEntry(
        model=model,
        dilatation=lambda r, p: np.asarray(r, dtype=float) ** (alpha * (p - 2.0)) / (alpha + 1.0),
        area=lambda r: math.pi * r ** (2.0 * (alpha + 1.0)),
        length=lambda r: 2.0 * math.pi * r ** (alpha + 1.0),
        ratio=lambda r: np.asarray(r, dtype=float) ** alpha,
    )


class _LogSingularProfile:
    """Radial profile R = I(r)^{-1/(p-2)} of the log-singular automorphism.

    I(r) = 1 + (p-2) * integral_r^1 dt / (t^{p-1} ln^{p-1}(e/t)) has no
    elementary antiderivative; it is tabulated once on a dense logarithmic grid
    and evaluated through a cubic-spline antiderivative (relative error well
    below 1e-10 on [r_floor, 1]).
    """

    def __init__(self, p: float, r_floor: float = 1e-10, n: int = 6001):
        self.p = p
        self.r_floor = r_floor
        # Tabulate in v = -ln t, integrating away from 1 where the integrand is
        # O(1): the antiderivative then equals I - 1 directly, avoiding the
        # catastrophic cancellation of differencing two huge running sums.
        v = np.linspace(0.0, -math.log(r_floor), n)
        # integrand of I in v: (p-2) e^{(p-2)v} (1+v)^{1-p}
        w = (p - 2.0) * np.exp((p - 2.0) * v) * (1.0 + v) ** (1.0 - p)
        self._anti = CubicSpline(v, w).antiderivative()

    def I(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r < self.r_floor) or np.any(r > 1.0):
            raise ConfigError(f"log-singular profile tabulated only on [{self.r_floor}, 1]")
        return 1.0 + self._anti(-np.log(r))

    def R(self, r):
        return self.I(r) ** (-1.0 / (self.p - 2.0))

    def R_prime(self, r):
        r = np.asarray(r, dtype=float)
        lg = 1.0 - np.log(r)  # ln(e/r)
        return self.R(r) * r ** (1.0 - self.p) * lg ** (1.0 - self.p) / self.I(r)


def log_singular(p: float) -> CatalogEntry:
    """The automorphism with D_p = ln^{p-1}(e/r): divergent disc mean at 0."""
    p = float(p)
    if not p > 2.0:
        raise ConfigError(f"log-singular automorphism needs p > 2, got {p}")
    prof = _LogSingularProfile(p)
    profile = RadialProfile(R=prof.R, R_prime=prof.R_prime)
    model = model_from_profile(profile, label=f"log_singular(p={p:g})")

    def dilatation(r, q):
        # General order q: D_q = R^{q-1} / (r^{q-1} R'); at q = p this is ln^{p-1}(e/r).
        r = np.asarray(r, dtype=float)
        R = prof.R(r)
        return R ** (q - 1.0) / (r ** (q - 1.0) * prof.R_prime(r))

    return CatalogEntry(
        model=model,
        dilatation=dilatation,
        area=lambda r: math.pi * float(prof.R(r)) ** 2,
        length=lambda r: 2.0 * math.pi * float(prof.R(r)),
        ratio=lambda r: prof.R(r) / np.asarray(r, dtype=float),
    )


def beltrami_exact(m: float, kappa: float) -> CatalogEntry:
    """f = kappa^{1/m} r e^{i theta}, the exact solution of the power-coefficient
    nonlinear Beltrami equation; linear with slope kappa^{1/m}."""
    m = float(m)
    kappa = float(kappa)
    if not (m > 0.0 and kappa > 0.0):
        raise ConfigError(f"beltrami_exact needs m > 0 and kappa > 0, got m={m}, kappa={kappa}")
    c = kappa ** (1.0 / m)

    def value(r, theta):
        return c * np.asarray(r) * np.exp(1j * np.asarray(theta))

    def partial_r(r, theta):
        return c * np.exp(1j * np.asarray(theta)) * np.ones_like(np.asarray(r, dtype=float))

    def partial_theta(r, theta):
        return 1j * c * np.asarray(r) * np.exp(1j * np.asarray(theta))

    model = MappingModel(label=f"beltrami_exact(m={m:g},kappa={kappa:g})",
                         value=value, partial_r=partial_r,
                         partial_theta=partial_theta, theta_invariant=True)
    return CatalogEntry(
        model=model,
        dilatation=lambda r, p: np.full_like(np.asarray(r, dtype=float), c ** (p - 2.0)),
        area=lambda r: math.pi * (c * r) ** 2,
        length=lambda r: 2.0 * math.pi * c * r,
        ratio=lambda r: np.full_like(np.asarray(r, dtype=float), c),
    )


_FAMILIES = {
    "linear": linear,
    "identity": lambda: identity(),
    "radial_stretch": radial_stretch,
    "log_singular": log_singular,
    "beltrami_exact": beltrami_exact,
}


def from_name(name: str, **params) -> CatalogEntry:
    """Look up a catalog family by name and instantiate it."""
    if name not in _FAMILIES:
        raise ConfigError(f"unknown catalog map {name!r}; known: {sorted(_FAMILIES)}")
    try:
        return _FAMILIES[name](**params)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for catalog map {name!r}: {exc}") from exc
