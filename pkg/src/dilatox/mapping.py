"""Mappings of the punctured unit disc in polar coordinates.

A MappingModel bundles the complex value f(r e^{i theta}) with its partial
derivatives f_r and f_theta, either closed-form or central finite differences.
All callables are vectorized over numpy arrays and must be pure: models are
safe to share across concurrent evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import (
    ConfigError,
    DegenerateJacobian,
    NonFiniteDerivative,
    StepTooLarge,
)
from .quadrature import JAC_TOL, circle_nodes

TWO_PI = 2.0 * math.pi

ComplexFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class PolarPoint:
    """A point r e^{i theta} of the punctured open disc, 0 < r < 1.

    The angle is normalized into [0, 2pi) on construction.
    """

    r: float
    theta: float

    def __post_init__(self):
        if not 0.0 < self.r < 1.0:
            raise ConfigError(f"radius must lie in (0,1), got {self.r}")
        theta = self.theta % TWO_PI
        if theta >= TWO_PI:  # -tiny % 2pi rounds up to exactly 2pi
            theta = 0.0
        object.__setattr__(self, "theta", theta)

    @property
    def z(self) -> complex:
        return self.r * complex(math.cos(self.theta), math.sin(self.theta))


@dataclass(frozen=True)
class MappingModel:
    """A polar-evaluable map with partial derivatives.

    theta_invariant marks maps whose |f|, |f_theta| and Jacobian do not depend
    on the angle; circle quadratures then collapse to a single sample.
    """

    label: str
    value: ComplexFn
    partial_r: ComplexFn
    partial_theta: ComplexFn
    derivative_kind: str = "analytic"
    theta_invariant: bool = False

    def with_label(self, label: str) -> "MappingModel":
        return replace(self, label=label)


@dataclass(frozen=True)
class RadialProfile:
    """Scalar profile R(r) of a rotationally symmetric map R(r) e^{i theta}."""

    R: Callable[[np.ndarray], np.ndarray]
    R_prime: Callable[[np.ndarray], np.ndarray]


def model_from_profile(profile: RadialProfile, label: str) -> MappingModel:
    """Rotationally symmetric model f = R(r) e^{i theta}."""

    def value(r, theta):
        return profile.R(r) * np.exp(1j * np.asarray(theta))

    def partial_r(r, theta):
        return profile.R_prime(r) * np.exp(1j * np.asarray(theta))

    def partial_theta(r, theta):
        return 1j * profile.R(r) * np.exp(1j * np.asarray(theta))

    return MappingModel(label=label, value=value, partial_r=partial_r,
                        partial_theta=partial_theta, theta_invariant=True)


def default_steps(r: float) -> tuple[float, float]:
    """Default central-difference steps, balancing truncation against roundoff."""
    return 1e-5 * max(r, 1e-3), 1e-5


def jacobian_grid(model: MappingModel, r: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Jacobian (1/r) Im(conj(f_r) f_theta) on a broadcastable grid.

    Raises DegenerateJacobian when any value drops below -1e-12; values in
    [-1e-12, 0] are clamped to 0.
    """
    r = np.asarray(r, dtype=float)
    fr = np.asarray(model.partial_r(r, theta))
    ft = np.asarray(model.partial_theta(r, theta))
    if not (np.isfinite(fr).all() and np.isfinite(ft).all()):
        raise NonFiniteDerivative(f"non-finite partial derivative of {model.label!r}")
    jac = np.imag(np.conj(fr) * ft) / r
    if np.any(jac < -JAC_TOL):
        raise DegenerateJacobian(
            f"Jacobian of {model.label!r} reaches {float(np.min(jac)):.3e} < -{JAC_TOL}")
    return np.maximum(jac, 0.0)


def jacobian(model: MappingModel, z: PolarPoint) -> float:
    """Pointwise Jacobian at z."""
    return float(jacobian_grid(model, np.array([z.r]), np.array([z.theta]))[0])


def finite_difference_partials(value: ComplexFn, z: PolarPoint,
                               h_r: float | None = None,
                               h_theta: float | None = None) -> tuple[complex, complex]:
    """Central-difference estimates of (f_r, f_theta) at z; O(h^2) for C^3 maps."""
    hr_default, ht_default = default_steps(z.r)
    h_r = hr_default if h_r is None else h_r
    h_theta = ht_default if h_theta is None else h_theta
    if z.r - h_r <= 0.0 or z.r + h_r >= 1.0:
        raise StepTooLarge(f"radial stencil [{z.r - h_r}, {z.r + h_r}] leaves the disc")
    r = np.array([z.r + h_r, z.r - h_r, z.r, z.r])
    th = np.array([z.theta, z.theta, z.theta + h_theta, z.theta - h_theta])
    v = np.asarray(value(r, th))
    f_r = (v[0] - v[1]) / (2.0 * h_r)
    f_t = (v[2] - v[3]) / (2.0 * h_theta)
    return complex(f_r), complex(f_t)


def fd_model(value: ComplexFn, label: str, theta_invariant: bool = False) -> MappingModel:
    """Wrap a value-only map with vectorized central-difference partials."""

    def partial_r(r, theta):
        r = np.asarray(r, dtype=float)
        h = 1e-5 * np.maximum(r, 1e-3)
        if np.any(r - h <= 0.0) or np.any(r + h >= 1.0):
            raise StepTooLarge("radial stencil leaves the disc")
        return (value(r + h, theta) - value(r - h, theta)) / (2.0 * h)

    def partial_theta(r, theta):
        theta = np.asarray(theta, dtype=float)
        h = 1e-5
        return (value(r, theta + h) - value(r, theta - h)) / (2.0 * h)

    return MappingModel(label=label, value=value, partial_r=partial_r,
                        partial_theta=partial_theta, derivative_kind="finite-difference",
                        theta_invariant=theta_invariant)


def min_max_modulus(model: MappingModel, r: float, n_theta: int = 2048) -> tuple[float, float]:
    """(min, max) of |f| over n_theta equispaced samples of the circle |z| = r.

    Dense equispaced sampling without local refinement; exact for rotationally
    symmetric maps, resolution-limited otherwise.
    """
    if not 0.0 < r < 1.0:
        raise ConfigError(f"radius must lie in (0,1), got {r}")
    if n_theta < 8:
        raise ConfigError(f"n_theta must be >= 8, got {n_theta}")
    mod = np.abs(np.asarray(model.value(np.full(n_theta, r), circle_nodes(n_theta))))
    return float(np.min(mod)), float(np.max(mod))


def validate_model(model: MappingModel, radii: np.ndarray | None = None,
                   n_theta: int = 256, jump_factor: float = 20.0) -> None:
    """Cheap sanity checks for ingested maps: neighbor-jump continuity on circle
    samples and strict Jacobian positivity on the sampled grid."""
    if radii is None:
        radii = np.geomspace(1e-3, 0.95, 16)
    th = circle_nodes(n_theta)
    for r in radii:
        v = np.asarray(model.value(np.full(n_theta, r), th))
        jumps = np.abs(np.diff(np.concatenate([v, v[:1]])))
        scale = max(float(np.max(np.abs(v))), 1e-30)
        if float(np.max(jumps)) > jump_factor * scale * (TWO_PI / n_theta):
            raise ConfigError(
                f"{model.label!r} looks discontinuous on circle r={r:.4g}")
        jac = jacobian_grid(model, np.full(n_theta, r), th)
        if np.any(jac <= 0.0):
            raise DegenerateJacobian(
                f"{model.label!r} has non-positive Jacobian on circle r={r:.4g}")


def map_from_json(doc: dict) -> MappingModel:
    """Ingest a custom map from its JSON document.

    Supported forms:
      {"type": "radial_profile", "samples": [[r, R], ...]}  (monotone r and R)
      {"type": "catalog", "name": ..., "params": {...}}
    """
    kind = doc.get("type")
    if kind == "radial_profile":
        samples = np.asarray(doc["samples"], dtype=float)
        if samples.ndim != 2 or samples.shape[1] != 2 or samples.shape[0] < 3:
            raise ConfigError("radial_profile needs >= 3 [r, R] sample pairs")
        r, R = samples[:, 0], samples[:, 1]
        if np.any(np.diff(r) <= 0):
            raise ConfigError("radial_profile radii must be strictly increasing")
        if np.any(np.diff(R) <= 0):
            raise ConfigError("radial_profile values must be strictly increasing")
        interp = PchipInterpolator(r, R)
        profile = RadialProfile(R=interp, R_prime=interp.derivative())
        return model_from_profile(profile, label="radial_profile")
    if kind == "catalog":
        from . import catalog  # local import: catalog depends on this module
        return catalog.from_name(doc["name"], **doc.get("params", {})).model
    raise ConfigError(f"unknown map document type {kind!r}")
