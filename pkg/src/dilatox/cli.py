"""Command-line front end.

Subcommands:
  eval      tabulate d_p, disc mean, S, L, modulus extremes over a radius ladder
  verify    run every inequality check applicable to the given order p
  asym      report limit proxies and asymptotic-ratio bounds
  beltrami  solve the radial nonlinear Beltrami equation and verify it

Exit codes: 0 all checks hold, 1 an inequality is violated, 2 configuration
error, 3 numerical failure. Identical configurations produce byte-identical
reports. The environment variable DILATOX_SEED is reserved for future
stochastic features and is currently unused.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__, beltrami, catalog
from .errors import ConfigError, ToolkitError
from .functionals import (
    DilatationOrder,
    boundary_length,
    circular_dilatation_mean,
    dilatation_radial_fn,
    disc_mean,
    radial_integral_inner,
)
from .mapping import map_from_json, min_max_modulus
from .quadrature import QuadratureConfig
from .verifier import (
    RadiusLadder,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    check_length_area,
    margins_to_csv,
    reports_to_json,
    theorem1_bound,
    theorem3_bound,
    theorem5_bound,
    theorem6_bracket,
    theorem7_area_derivative,
)
from .functionals import area as area_fn

CHECKS_BELOW_2 = ("lemma1", "length_area", "lemma4", "theorem5", "theorem6")
CHECKS_ABOVE_2 = ("lemma1", "length_area", "lemma2", "lemma3", "theorem1", "theorem3")
CHECKS_AT_2 = ("lemma1", "length_area")


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for item in pairs or []:
        if "=" not in item:
            raise ConfigError(f"--param expects key=value, got {item!r}")
        key, raw = item.split("=", 1)
        try:
            val = complex(raw)
        except ValueError as exc:
            raise ConfigError(f"cannot parse parameter {item!r}") from exc
        params[key] = val if val.imag != 0.0 else val.real
    return params


def _build_map(args) -> catalog.CatalogEntry | None:
    if getattr(args, "map_json", None):
        doc = json.loads(Path(args.map_json).read_text())
        model = map_from_json(doc)
        return catalog.CatalogEntry(model=model, dilatation=None, area=None,
                                    length=None, ratio=None)
    if not getattr(args, "map", None):
        raise ConfigError("a map is required: --map <name> or --map-json <file>")
    return catalog.from_name(args.map, **_parse_params(args.param))


def _quad_config(args) -> QuadratureConfig:
    return QuadratureConfig(n_theta=args.ntheta, n_r=args.nr, r_min=args.rmin)


def _ladder(args) -> RadiusLadder:
    return RadiusLadder(r_max=args.rmax, rho=args.rho, count=args.count, tail=args.tail)


def _proxy_dict(proxy) -> dict:
    return {"kind": proxy.kind, "value": proxy.value, "tail_spread": proxy.tail_spread}


def _resolved_config(args) -> dict:
    skip = {"func", "out"}
    out = {}
    for key, val in sorted(vars(args).items()):
        if key in skip:
            continue
        out[key] = str(val) if isinstance(val, complex) else val
    out["version"] = __version__
    return out


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def cmd_eval(args) -> int:
    entry = _build_map(args)
    cfg = _quad_config(args)
    ladder = _ladder(args)
    ladder.validate_against(cfg)
    p = DilatationOrder(args.p)
    rows = []
    for r in ladder.radii():
        d = circular_dilatation_mean(entry.model, r, p, cfg)
        dm = disc_mean(entry.model, r, p, cfg).value
        s = area_fn(entry.model, r, cfg)
        ell = boundary_length(entry.model, r, cfg)
        lo, hi = min_max_modulus(entry.model, r)
        rows.append((r, d, dm, s, ell, lo, hi, ell * ell - 4.0 * math.pi * s))
    out = Path(args.out) / "functionals.csv"
    lines = ["r,d_p,disc_mean,S,L,l_f,L_f,iso_defect"]
    for row in rows:
        lines.append(",".join(repr(float(v)) for v in row))
    _write(out, "\n".join(lines) + "\n")
    print(f"wrote {out}")
    return 0


def _applicable_checks(p: float) -> tuple[str, ...]:
    if p > 2.0:
        return CHECKS_ABOVE_2
    if p < 2.0:
        return CHECKS_BELOW_2
    return CHECKS_AT_2


def cmd_verify(args) -> int:
    entry = _build_map(args)
    cfg = _quad_config(args)
    ladder = _ladder(args)
    ladder.validate_against(cfg)
    p = args.p
    requested = tuple(args.check) if args.check else _applicable_checks(p)
    applicable = set(_applicable_checks(p))
    reports = []
    for name in requested:
        if name not in applicable:
            raise ConfigError(f"check {name!r} is not applicable at p={p}")
        if name == "lemma1":
            reports.append(check_lemma1(entry.model, p, ladder, cfg))
        elif name == "length_area":
            radii = ladder.radii()
            reports.append(check_length_area(entry.model, p, float(radii[-1]),
                                             float(radii[0]), cfg))
        elif name == "lemma2":
            reports.append(check_lemma2(entry.model, p, ladder, cfg))
        elif name == "lemma3":
            def q_fn(rr, th, _model=entry.model):
                from .functionals import dilatation_grid
                return dilatation_grid(_model, np.asarray(rr, dtype=float), th, p)
            reports.append(check_lemma3(q_fn, p, min(0.25, ladder.r_max / 2.0), cfg))
        elif name == "lemma4":
            reports.append(check_lemma4(entry.model, p, ladder, cfg))
        elif name == "theorem1":
            reports.append(theorem1_bound(entry.model, p, ladder, cfg).report)
        elif name == "theorem3":
            reports.append(theorem3_bound(entry.model, p, ladder, cfg).report)
        elif name == "theorem5":
            reports.append(theorem5_bound(entry.model, p, ladder, cfg).report)
        elif name == "theorem6":
            reports.append(theorem6_bracket(entry.model, p, ladder, cfg).report)
        else:
            raise ConfigError(f"unknown check {name!r}")
    doc = {
        "config": _resolved_config(args),
        "matrix": [rep.to_dict() for rep in reports],
    }
    out = Path(args.out) / "verify.json"
    _write(out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    margins_to_csv(reports, Path(args.out) / "margins.csv")
    ok = all(rep.holds for rep in reports)
    for rep in reports:
        print(f"{rep.check_id:12s} p={rep.p:<6g} "
              f"{'holds' if rep.holds else 'VIOLATED'} margin_min={rep.margin:.3e}")
    print(f"wrote {out}")
    return 0 if ok else 1


def cmd_asym(args) -> int:
    entry = _build_map(args)
    cfg = _quad_config(args)
    ladder = _ladder(args)
    ladder.validate_against(cfg)
    p = args.p
    doc: dict = {"config": _resolved_config(args), "bounds": {}, "proxies": {},
                 "tail_spreads": {}}
    holds = True
    if p > 2.0:
        t1 = theorem1_bound(entry.model, p, ladder, cfg)
        t3 = theorem3_bound(entry.model, p, ladder, cfg)
        doc["proxies"]["k"] = _proxy_dict(t1.k)
        doc["proxies"]["k_0"] = _proxy_dict(t3.k0)
        doc["bounds"]["theorem1"] = t1.bound
        doc["bounds"]["theorem3"] = t3.bound
        doc["attained"] = {"liminf_ratio": t1.attained}
        holds = t1.report.holds and t3.report.holds
    elif p < 2.0:
        t5 = theorem5_bound(entry.model, p, ladder, cfg)
        t6 = theorem6_bracket(entry.model, p, ladder, cfg)
        doc["proxies"]["k_0"] = _proxy_dict(t5.k0)
        doc["proxies"]["k_1"] = _proxy_dict(t6.k1)
        doc["proxies"]["k_2"] = _proxy_dict(t6.k2)
        doc["proxies"]["A_proxy"] = _proxy_dict(t6.a_proxy)
        doc["bounds"]["theorem5"] = t5.bound
        doc["bounds"]["bracket"] = [t6.lower, t6.upper]
        doc["tail_spreads"]["ratio"] = t6.a_proxy.tail_spread
        holds = t5.report.holds and t6.report.holds
        if args.s is not None:
            t7 = theorem7_area_derivative(entry.model, p, args.s, ladder, cfg)
            doc["proxies"]["area_derivative"] = {
                "limit_lower": _proxy_dict(t7.limit_lower),
                "limit_upper": _proxy_dict(t7.limit_upper),
                "area_ratio": _proxy_dict(t7.area_ratio),
            }
            holds = holds and t7.report.holds
    else:
        raise ConfigError("asym needs p != 2 (no theorem applies at p = 2)")
    out = Path(args.out) / "asym.json"
    _write(out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(json.dumps(doc["bounds"], indent=2, sort_keys=True))
    print(f"wrote {out}")
    return 0 if holds else 1


def cmd_beltrami(args) -> int:
    if args.coef:
        coef = beltrami.sigma_from_json(json.loads(Path(args.coef).read_text()))
    else:
        params = _parse_params(args.param)
        if "kappa" not in params or "m" not in params:
            raise ConfigError("beltrami needs --coef <json> or --param kappa=... m=...")
        coef = beltrami.power_sigma(float(params["kappa"].real if isinstance(params["kappa"], complex) else params["kappa"]),
                                    float(params["m"]))
    cfg = _quad_config(args)
    ladder = _ladder(args)
    ladder.validate_against(cfg)
    solution = beltrami.solve_radial(coef, args.r0, args.R0,
                                     (args.span_lo, args.span_hi), args.step)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    solution.to_csv(out_dir / "solution.csv")
    doc = {
        "config": _resolved_config(args),
        "coefficient": coef.label,
        "residual_max": solution.residual_max,
        "notes": list(solution.notes),
    }
    if coef.m > 0.0:
        nb = beltrami.theorem_nb_bound(coef, solution, ladder, cfg)
        doc["sigma0"] = _proxy_dict(nb.sigma0)
        doc["bound"] = nb.bound
        doc["attained"] = nb.attained
        doc["holds"] = nb.report.holds
    _write(out_dir / "beltrami.json", json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(f"residual_max={solution.residual_max:.3e}")
    print(f"wrote {out_dir / 'solution.csv'} and {out_dir / 'beltrami.json'}")
    return 0 if doc.get("holds", True) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dilatox",
                                     description="Angular-dilatation toolkit")
    parser.add_argument("--version", action="version", version=f"dilatox {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--map", help="catalog map name")
        sp.add_argument("--param", action="append", default=[],
                        help="map/coefficient parameter key=value (repeatable)")
        sp.add_argument("--map-json", help="JSON file with a custom map document")
        sp.add_argument("--p", type=float, default=4.0, help="dilatation order")
        sp.add_argument("--s", type=float, default=None,
                        help="second order for the area-derivative theorem")
        sp.add_argument("--rmax", type=float, default=0.5)
        sp.add_argument("--rho", type=float, default=0.8)
        sp.add_argument("--count", type=int, default=20)
        sp.add_argument("--tail", type=int, default=5)
        sp.add_argument("--ntheta", type=int, default=512)
        sp.add_argument("--nr", type=int, default=1024)
        sp.add_argument("--rmin", type=float, default=1e-4)
        sp.add_argument("--out", default=".", help="output directory")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("eval", help="tabulate functionals over the ladder")
    common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="run inequality checks")
    common(sp)
    sp.add_argument("--check", action="append", default=[],
                    help="restrict to specific checks (repeatable)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("asym", help="limit proxies and theorem bounds")
    common(sp)
    sp.set_defaults(func=cmd_asym)

    sp = sub.add_parser("beltrami", help="solve the radial Beltrami equation")
    common(sp)
    sp.add_argument("--coef", help="JSON file describing the coefficient")
    sp.add_argument("--r0", type=float, default=0.5, help="anchor radius")
    sp.add_argument("--R0", type=float, default=1.0, help="anchor value")
    sp.add_argument("--span-lo", type=float, default=0.05)
    sp.add_argument("--span-hi", type=float, default=0.95)
    sp.add_argument("--step", type=float, default=1e-3)
    sp.set_defaults(func=cmd_beltrami)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (ToolkitError, ValueError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
