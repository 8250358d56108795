"""Integral functionals of the angular dilatation.

Covers the pointwise dilatation D_p, circular power means q_p / d_p, disc
means, the area functional S(r) with its rate S'(r), the image boundary length
L(r), and the two radial integrals of 1/(t^{p-1} d_p(t)).

Extended-real conventions: d_p = +inf makes the radial integrand 0; d_p = 0
makes it +inf and the integral is reported as +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .errors import ConfigError, EmptyRange
from .mapping import MappingModel, PolarPoint, jacobian_grid
from .quadrature import (
    QuadratureConfig,
    circle_nodes,
    integrate_from_origin,
    integrate_radial,
)

RadialFn = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class DilatationOrder:
    """The order p > 1 of the angular dilatation, with its conjugate exponent."""

    p: float

    def __post_init__(self):
        if not self.p > 1.0:
            raise ConfigError(f"dilatation order must satisfy p > 1, got {self.p}")

    @property
    def conjugate(self) -> float:
        """p' = p/(p-1); maps (1,2) onto (2,inf)."""
        return self.p / (self.p - 1.0)


def _order(p: Union[float, DilatationOrder]) -> float:
    if isinstance(p, DilatationOrder):
        return p.p
    return DilatationOrder(float(p)).p


@dataclass
class RadialSeries:
    """A sampled functional over a strictly increasing radius grid.

    Values are extended nonnegative reals; +inf is permitted and propagated.
    """

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.grid.ndim != 1 or self.grid.shape != self.values.shape:
            raise ConfigError("grid and values must be 1-d arrays of equal length")
        if np.any(np.diff(self.grid) <= 0):
            raise ConfigError("radius grid must be strictly increasing")
        if np.any(self.grid <= 0) or np.any(self.grid >= 1):
            raise ConfigError("radii must lie in (0,1)")
        if np.any(np.isnan(self.values)) or np.any(self.values < 0):
            raise ConfigError("series values must be nonnegative (inf allowed)")

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write("r,value\n")
            for r, v in zip(self.grid, self.values):
                fh.write(f"{float(r)!r},{float(v)!r}\n")

    @classmethod
    def from_csv(cls, path) -> "RadialSeries":
        rows = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(grid=rows[:, 0], values=rows[:, 1])

    def interpolant(self) -> RadialFn:
        """Piecewise-linear interpolant in log-radius; +inf regions propagate."""
        logs = np.log(self.grid)
        finite = np.isfinite(self.values)

        def fn(t):
            t = np.asarray(t, dtype=float)
            out = np.interp(np.log(t), logs[finite], self.values[finite])
            if not finite.all():
                # a query between two samples straddling an inf sample is inf
                idx = np.searchsorted(self.grid, t)
                lo = np.clip(idx - 1, 0, len(self.grid) - 1)
                hi = np.clip(idx, 0, len(self.grid) - 1)
                bad = ~finite[lo] | ~finite[hi]
                out = np.where(bad, math.inf, out)
            return out

        return fn


@dataclass
class TruncatedValue:
    """A truncated integral or mean plus its refinement-based error estimate."""

    value: float
    refinement_delta: float
    flags: tuple[str, ...] = ()

    def __float__(self) -> float:
        return self.value


# ----------------------------- pointwise dilatation -----------------------------

def dilatation_grid(model: MappingModel, r: np.ndarray, theta: np.ndarray,
                    p: Union[float, DilatationOrder]) -> np.ndarray:
    """D_p = |f_theta|^p / (r^p J_f) on a broadcastable grid; +inf where J_f = 0
    while f_theta does not vanish."""
    p = _order(p)
    r = np.asarray(r, dtype=float)
    jac = jacobian_grid(model, r, theta)
    ft_mod = np.abs(np.asarray(model.partial_theta(r, theta)))
    num = ft_mod ** p
    with np.errstate(divide="ignore", invalid="ignore"):
        out = num / (r ** p * jac)
    out = np.where((jac == 0.0) & (num > 0.0), math.inf, out)
    out = np.where((jac == 0.0) & (num == 0.0), 0.0, out)
    return out


def angular_dilatation(model: MappingModel, z: PolarPoint,
                       p: Union[float, DilatationOrder]) -> float:
    """The p-angular dilatation of the map at z, relative to the origin."""
    return float(dilatation_grid(model, np.array([z.r]), np.array([z.theta]), p)[0])


# ----------------------------- circular means -----------------------------

def circular_mean(q_fn: Callable[[np.ndarray, np.ndarray], np.ndarray], r: float,
                  p: Union[float, DilatationOrder], cfg: QuadratureConfig) -> float:
    """q_p(r): the power mean of exponent 1/(p-1) of Q over the circle |z| = r,
    raised back to p-1. Periodic trapezoid rule; +inf propagates."""
    p = _order(p)
    if not 0.0 < r < 1.0:
        raise ConfigError(f"radius must lie in (0,1), got {r}")
    th = circle_nodes(cfg.n_theta)
    q = np.asarray(q_fn(np.full_like(th, r), th), dtype=float)
    if np.isnan(q).any() or np.any(q < 0):
        raise ValueError("circular mean needs nonnegative, non-NaN samples")
    mean = float(np.mean(q ** (1.0 / (p - 1.0))))
    return mean ** (p - 1.0)


def circular_dilatation_mean(model: MappingModel, r: float,
                             p: Union[float, DilatationOrder],
                             cfg: QuadratureConfig) -> float:
    """d_p(r): the circular mean of the angular dilatation."""
    if model.theta_invariant:
        return float(dilatation_grid(model, np.array([r]), np.array([0.0]), p)[0])
    return circular_mean(lambda rr, th: dilatation_grid(model, rr, th, p), r, p, cfg)


def dilatation_radial_fn(model: MappingModel, p: Union[float, DilatationOrder],
                         cfg: QuadratureConfig) -> RadialFn:
    """Vectorized r -> d_p(r), used as the integrand source of radial integrals."""
    p = _order(p)
    if model.theta_invariant:
        def fn(t):
            t = np.asarray(t, dtype=float)
            return dilatation_grid(model, t, np.zeros_like(t), p)
    else:
        def fn(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            return np.array([circular_dilatation_mean(model, float(tv), p, cfg) for tv in t])
    return fn


def dilatation_series(model: MappingModel, p: Union[float, DilatationOrder],
                      radii: np.ndarray, cfg: QuadratureConfig) -> RadialSeries:
    """Sample d_p on an increasing radius grid."""
    radii = np.sort(np.asarray(radii, dtype=float))
    return RadialSeries(grid=radii, values=dilatation_radial_fn(model, p, cfg)(radii))


# ----------------------------- disc means and area -----------------------------

def _circle_integral_fn(sample: Callable[[np.ndarray, np.ndarray], np.ndarray],
                        cfg: QuadratureConfig, invariant: bool) -> RadialFn:
    """t -> t * integral_0^{2pi} sample(t, theta) d theta, vectorized over t."""
    if invariant:
        def fn(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            return t * 2.0 * math.pi * np.asarray(sample(t, np.zeros_like(t)), dtype=float)
    else:
        th = circle_nodes(cfg.n_theta)

        def fn(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            vals = np.asarray(sample(t[:, None], th[None, :]), dtype=float)
            return t * 2.0 * math.pi * np.mean(vals, axis=1)
    return fn


def _disc_integral(sample, r: float, cfg: QuadratureConfig, invariant: bool,
                   r_floor: float | None = None) -> float:
    """Lebesgue integral over B_r, truncated at r_floor with power-law tail fit."""
    r_floor = cfg.r_floor if r_floor is None else r_floor
    if not r_floor < r:
        raise EmptyRange(f"disc radius {r} does not exceed truncation radius {r_floor}")
    return integrate_from_origin(_circle_integral_fn(sample, cfg, invariant), r_floor, r, cfg)


def disc_mean(model: MappingModel, r: float, p: Union[float, DilatationOrder],
              cfg: QuadratureConfig) -> TruncatedValue:
    """((1/pi r^2) * integral_{B_r} D_p^{1/(p-1)} dxdy)^{p-1}.

    Truncation sensitivity is probed by recomputing with r_floor/2; a relative
    change beyond quadrature tolerance is flagged, not thrown.
    """
    p = _order(p)

    def sample(t, th):
        return dilatation_grid(model, t, th, p) ** (1.0 / (p - 1.0))

    def once(r_floor):
        raw = _disc_integral(sample, r, cfg, model.theta_invariant, r_floor=r_floor)
        return (raw / (math.pi * r * r)) ** (p - 1.0)

    coarse = once(cfg.r_floor)
    fine = once(cfg.r_floor / 2.0)
    delta = abs(fine - coarse) if math.isfinite(fine) and math.isfinite(coarse) else math.inf
    flags: tuple[str, ...] = ()
    if not math.isfinite(fine) or delta > 1e-9 + 1e-6 * abs(fine):
        flags = ("truncation-sensitive",)
    return TruncatedValue(value=fine, refinement_delta=delta, flags=flags)


def area(model: MappingModel, r: float, cfg: QuadratureConfig) -> float:
    """S(r): area of the image of B_r, by nested quadrature of the Jacobian."""
    return _disc_integral(lambda t, th: jacobian_grid(model, t, th), r, cfg,
                          model.theta_invariant)


def area_rate(model: MappingModel, r: float, cfg: QuadratureConfig) -> float:
    """S'(r) = r * integral_0^{2pi} J_f(r e^{i theta}) d theta."""
    if not 0.0 < r < 1.0:
        raise ConfigError(f"radius must lie in (0,1), got {r}")
    fn = _circle_integral_fn(lambda t, th: jacobian_grid(model, t, th), cfg,
                             model.theta_invariant)
    return float(fn(np.array([r]))[0])


def boundary_length(model: MappingModel, r: float, cfg: QuadratureConfig) -> float:
    """L(r): length of the image curve of the circle |z| = r."""
    if not 0.0 < r < 1.0:
        raise ConfigError(f"radius must lie in (0,1), got {r}")
    if model.theta_invariant:
        ft = np.abs(np.asarray(model.partial_theta(np.array([r]), np.array([0.0]))))
        return float(2.0 * math.pi * ft[0])
    th = circle_nodes(cfg.n_theta)
    ft = np.abs(np.asarray(model.partial_theta(np.full_like(th, r), th)))
    return float(2.0 * math.pi * np.mean(ft))


# ----------------------------- radial integrals -----------------------------

def _as_radial_fn(d_p: Union[RadialFn, RadialSeries]) -> RadialFn:
    if isinstance(d_p, RadialSeries):
        return d_p.interpolant()
    return d_p


def _radial_integrand(d_p: Union[RadialFn, RadialSeries], p: float) -> RadialFn:
    dp_fn = _as_radial_fn(d_p)

    def fn(t):
        t = np.asarray(t, dtype=float)
        d = np.asarray(dp_fn(t), dtype=float)
        with np.errstate(divide="ignore"):
            out = t ** (1.0 - p) / d
        return np.where(np.isinf(d), 0.0, out)  # d_p = +inf contributes nothing

    return fn


def radial_integral_outer(d_p: Union[RadialFn, RadialSeries], r: float,
                          p: Union[float, DilatationOrder],
                          cfg: QuadratureConfig) -> float:
    """integral_r^1 dt / (t^{p-1} d_p(t))."""
    p = _order(p)
    if r >= 1.0:
        raise EmptyRange(f"lower limit must satisfy r < 1, got {r}")
    if r <= 0.0:
        raise ConfigError(f"lower limit must be positive, got {r}")
    return integrate_radial(_radial_integrand(d_p, p), r, 1.0, cfg)


def radial_integral_inner(d_p: Union[RadialFn, RadialSeries], r: float,
                          p: Union[float, DilatationOrder],
                          cfg: QuadratureConfig) -> TruncatedValue:
    """integral_0^r dt / (t^{p-1} d_p(t)) for 1 < p < 2.

    Truncates at eps_trunc with a local power-law tail estimate; the Richardson
    check recomputes at eps_trunc/2 and reports the difference as the
    truncation error estimate. A non-stabilizing refinement is flagged.
    """
    p = _order(p)
    if not p < 2.0:
        raise ConfigError(f"inner radial integral needs 1 < p < 2, got p={p}")
    if r <= cfg.eps_trunc:
        raise EmptyRange(f"upper limit {r} does not exceed eps_trunc {cfg.eps_trunc}")
    fn = _radial_integrand(d_p, p)
    coarse = integrate_from_origin(fn, cfg.eps_trunc, r, cfg)
    fine = integrate_from_origin(fn, cfg.eps_trunc / 2.0, r, cfg)
    delta = abs(fine - coarse) if math.isfinite(fine) and math.isfinite(coarse) else math.inf
    flags: tuple[str, ...] = ()
    if not math.isfinite(fine) or delta > 1e-9 + 1e-6 * abs(fine):
        flags = ("nonconvergent",)
    return TruncatedValue(value=fine, refinement_delta=delta, flags=flags)
