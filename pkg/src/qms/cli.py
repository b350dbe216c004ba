"""Command-line front end: `qms <group> <op> --flags`.

Output is a single machine-readable table on stdout — JSON by default
(metadata / summary / rows), CSV with `--format csv` (metadata and
summary as `#` comment lines, then one row per index). Exit codes:
0 success, 1 a numeric contract was violated mid-computation, 2 bad
usage or bad input values.

Exact mode (`--mode exact`) only accepts integers or `p/q` rationals
for the parameters it touches; decimal strings are rejected so no
binary-float artifact can leak into exact arithmetic. `--sweep
NAME=v1,v2,...` repeats the run over the sorted values, overriding
that flag, and emits a list of tables.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from . import __version__
from . import operators, parabola, surfaces, torusdegree
from .exactmath import ContractViolation, InputError, Poly, rational


# ---------------------------------------------------------------------
# value parsing / encoding
# ---------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_number(text: str, mode: str):
    """Float mode: decimal, scientific, or p/q. Exact mode: integer or
    p/q only."""
    s = text.strip()
    if mode == "exact":
        if not _RATIONAL_RE.match(s):
            raise InputError(
                f"exact mode needs an integer or p/q rational, got {text!r}"
            )
        return rational(s)
    if _RATIONAL_RE.match(s) and "/" in s:
        return float(Fraction(s))
    try:
        return float(s)
    except ValueError:
        raise InputError(f"not a number: {text!r}")


def parse_decimal_exact(text: str) -> Fraction:
    """Integer, p/q, or finite decimal, all read exactly."""
    s = text.strip()
    if _RATIONAL_RE.match(s):
        return rational(s)
    try:
        return Fraction(s)
    except ValueError:
        raise InputError(f"not an exact decimal or rational: {text!r}")


def encode(value):
    """JSON-safe encoding: Fractions as 'p/q' strings, complex as
    {re, im}, polynomials as low-to-high coefficient lists."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, Poly):
        return [encode(c) for c in value.coeffs]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if isinstance(value, float) or isinstance(value, int) \
            or isinstance(value, str) or value is None or \
            isinstance(value, bool):
        return value
    return str(value)  # mpfr and friends keep full precision as text


def _csv_cell(value) -> str:
    v = encode(value)
    if isinstance(v, dict):  # complex
        return f"{v['re']}+{v['im']}j" if v["im"] >= 0 \
            else f"{v['re']}{v['im']}j"
    if isinstance(v, list):
        return ",".join(str(t) for t in v)
    return str(v)


# ---------------------------------------------------------------------
# run plumbing
# ---------------------------------------------------------------------

@dataclass
class RunConfig:
    subcommand: str
    params: Dict[str, object]
    mode: str = "float"
    output_format: str = "json"
    seed: Optional[int] = None
    sweep: Optional[Tuple[str, List[object]]] = None


@dataclass
class ResultTable:
    metadata: Dict[str, object]
    summary: Dict[str, object]
    rows: List[Dict[str, object]] = field(default_factory=list)

    def to_json_obj(self):
        return {
            "metadata": encode(self.metadata),
            "summary": encode(self.summary),
            "rows": [encode(r) for r in self.rows],
        }

    def to_csv(self) -> str:
        lines = []
        for k, v in self.metadata.items():
            if isinstance(v, dict):
                for kk, vv in v.items():
                    lines.append(f"# {k}.{kk}={_csv_cell(vv)}")
            else:
                lines.append(f"# {k}={_csv_cell(v)}")
        for k, v in self.summary.items():
            lines.append(f"# summary.{k}={_csv_cell(v)}")
        if self.rows:
            cols = list(self.rows[0].keys())
            lines.append(",".join(cols))
            for r in self.rows:
                lines.append(",".join(_csv_cell(r[c]) for c in cols))
        return "\n".join(lines) + "\n"


def _metadata(config: RunConfig) -> Dict[str, object]:
    return {
        "tool": "qms",
        "version": __version__,
        "command": config.subcommand,
        "mode": config.mode,
        "seed": config.seed,
        "config": dict(config.params),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


# ---------------------------------------------------------------------
# handlers: each takes the parsed params and returns (rows, summary)
# ---------------------------------------------------------------------

def _h_surfaces_catenoid(p, mode):
    sol = surfaces.catenoid_build(
        p["c"], p["r0"], p["r1"], p["z0"], p["n_min"], p["n_max"],
        exact=(mode == "exact"),
    )
    rows = [{"n": n, "r": sol.r[n], "z": sol.z[n]}
            for n in range(sol.n_min, sol.n_max + 1)]
    worst = 0.0
    for n in range(sol.n_min + 1, sol.n_max):
        shape, flux = sol.residual(n)
        worst = max(worst, abs(float(shape)), abs(float(flux)))
    summary = {"max_residual": worst}
    try:
        cls = surfaces.catenoid_classify(sol)
        summary.update(n0=cls.n0, delta=cls.delta)
    except InputError as exc:
        summary.update(n0=None, delta=None, classify_note=str(exc))
    return rows, summary


def _h_surfaces_catenoid_closed(p, mode):
    rows = []
    for n in range(p["n_min"], p["n_max"] + 1):
        r, z = surfaces.catenoid_closed(p["a"], p["hbar"], n,
                                        branch=p["branch"])
        rows.append({"n": n, "r": r, "z": z})
    edge = max(abs(p["n_min"]), abs(p["n_max"]))
    summary = {}
    if edge >= 1:
        r_edge, _ = surfaces.catenoid_closed(p["a"], p["hbar"], edge,
                                             branch=p["branch"])
        summary["asymptotic_gap_at_edge"] = (
            r_edge - surfaces.catenoid_asymptotic(p["a"], p["hbar"], edge)
        )
    return rows, summary


def _h_surfaces_enneper(p, mode):
    seq = surfaces.enneper_sigma(p["hbar"], p["n_max"])
    rows = [{"n": n, "sigma": s} for n, s in enumerate(seq.sigma)]
    summary = {}
    if p["n_max"] >= 1:
        summary["sigma1"] = seq.sigma[1]
        summary["sigma1_over_2h_minus_1"] = seq.sigma[1] / (2 * p["hbar"]) - 1
    return rows, summary


def _h_surfaces_helicoid(p, mode):
    rows, worst = [], 0.0
    for k in range(1, p["steps"] + 1):
        x = p["x_max"] * k / p["steps"]
        w = surfaces.helicoid_profile(x)
        res = surfaces.helicoid_residual(x, p["hbar"])
        worst = max(worst, abs(res))
        rows.append({"k": k, "x": x, "w": w, "residual": res})
    return rows, {"max_residual": worst}


def _h_surfaces_hyperbola(p, mode):
    par = surfaces.HyperbolaParams(eps=p["eps"], delta=p["delta"],
                                   c_abs=p["c"], sign=p["sign"])
    rows, worst = [], 0.0
    for n in range(-p["n_max"], p["n_max"] + 1):
        r = surfaces.hyperbola_r(par, n)
        res = surfaces.hyperbola_residual(par, n)
        worst = max(worst, abs(res))
        rows.append({"n": n, "r": r, "residual": res})
    return rows, {"max_residual": worst}


def _h_parabola_orbit(p, mode):
    orbit = parabola.v_iterate(p["eps"], p["x"], p["n_max"])
    rows = [{"n": n, "v": v} for n, v in enumerate(orbit.v)]
    return rows, {"first_failure": orbit.first_failure}


def _h_parabola_shoot(p, mode):
    res = parabola.vhat_bisect(p["eps"], p["tol"], n_max=p["n_max"],
                               precision=p["precision"])
    summary = {
        "vhat": float(res.vhat),
        "bracket_lo": float(res.bracket[0]),
        "bracket_hi": float(res.bracket[1]),
        "survived_steps": res.survived_steps,
        "series_cubic": parabola.vhat_series(float(p["eps"])),
    }
    if p["precision"] is not None:
        summary["vhat_full"] = str(res.vhat)
    return [], summary


def _h_parabola_intervals(p, mode):
    cs = parabola.interval_endpoints(p["eps"], p["n_max"])
    rows = [{"n": n, "c": c} for n, c in enumerate(cs)]
    return rows, {"count": len(cs)}


def _h_parabola_upoly(p, mode):
    us = parabola.u_exact(p["eps"], p["n"])
    rows = [{"index": f"u{k}", "coeffs": u} for k, u in enumerate(us)]
    return rows, {"degrees": [u.degree for u in us]}


def _h_parabola_tau(p, mode):
    table = parabola.tau_table(p["eps"], p["n_max"])
    rows = [{"index": f"tau{n}", "coeffs": table.get_tau(n)}
            for n in range(-1, table.top + 1)]
    checked, ok = [], True
    for n in range(2, table.top - 1):
        ra, rb = parabola.conserved_residual(table, n)
        checked.append(n)
        ok = ok and ra.num == 0 and rb.num == 0
    return rows, {"identities_checked_n": checked, "identities_zero": ok}


def _h_parabola_monomial(p, mode):
    seeds = parabola.monomial_pair_seeds(p["p"], p["q"], p["eps"],
                                         window=p["window"])
    orbit = parabola.monomial_pair_iterate(p["p"], p["q"], p["eps"],
                                           seeds, p["n_max"])
    rows = [{"n": n, "v": v} for n, v in enumerate(orbit.v)]
    return rows, {"seeds": list(seeds),
                  "first_failure": orbit.first_failure}


def _h_operators_embed(p, mode):
    model = p["model"]
    margin = p["margin"]
    dim = p["N"]
    if model == "catenoid":
        sol = surfaces.catenoid_build(p["c"], p["r0"], p["r1"], 0.0,
                                      p["n_min"], p["n_min"] + dim - 1)
        w, z = operators.embed("catenoid", sol, dim)
        if margin is None:
            margin = 4
        rep = operators.wz_residual(w, z, margin=margin)
        rows = [{"k": k, "weight": w.weights[k].real,
                 "z": z.array[k, k].real} for k in range(dim - 1)]
        summary = {"equation": "wz", "interior_norms": list(rep.interior_norms)}
    elif model == "enneper":
        seq = surfaces.enneper_sigma(p["hbar"], dim - 1)
        w, x3 = operators.embed("enneper", seq, dim)
        if margin is None:
            margin = 10
        rep = operators.wz_residual(w, x3, margin=margin)
        rows = [{"k": k, "sigma": seq.sigma[k]} for k in range(dim)]
        summary = {"equation": "wz", "interior_norms": list(rep.interior_norms)}
    elif model == "hyperbola":
        par = surfaces.HyperbolaParams(eps=p["eps"], delta=p["delta"],
                                       c_abs=p["c"])
        z1, z2 = operators.embed("hyperbola", par, dim)
        if margin is None:
            margin = 2
        rep = operators.hym_residual(z1, z2, p["eps"], margin=margin)
        rows = [{"k": k, "w1": z1.weights[k].real,
                 "w2": z2.weights[k].real} for k in range(dim - 1)]
        summary = {"equation": "hym",
                   "interior_norms": list(rep.interior_norms),
                   "defect": rep.defect}
    elif model == "parabola":
        shot = parabola.vhat_bisect(p["eps"], 1e-14)
        orbit = parabola.v_iterate(p["eps"], shot.vhat, max(dim, 2))
        z1, z2 = operators.embed("parabola", orbit, dim)
        if margin is None:
            margin = 4
        rep = operators.hym_residual(z1, z2, p["eps"], margin=margin)
        rows = [{"k": k, "w1": z1.weights[k].real}
                for k in range(dim - 1)]
        summary = {"equation": "hym",
                   "interior_norms": list(rep.interior_norms),
                   "defect": rep.defect}
    else:  # pragma: no cover - argparse choices gate this
        raise InputError(f"unknown model {model!r}")
    summary["margin"] = margin
    summary["interior_norm"] = max(summary["interior_norms"])
    return rows, summary


def _h_operators_moment(p, mode):
    shot = parabola.vhat_bisect(p["eps"], 1e-14)
    orbit = parabola.v_iterate(p["eps"], shot.vhat, p["n"] + 2)
    dim = max(p["dim"] or 0, p["n"] + 1)
    need = dim - 1
    if orbit.first_failure is not None and orbit.first_failure < need:
        raise InputError(
            f"orbit from vhat fails at {orbit.first_failure}, "
            f"dim {dim} needs {need} positive values"
        )
    w = operators.ShiftOperator([v ** 0.5 for v in orbit.v[:need]],
                                dim, +1)
    rows, prod, worst = [], 1.0, 0.0
    running = 1.0
    for m in range(1, p["n"] + 1):
        running *= float(np.prod(orbit.v[:m]))
        mom = operators.moment(w, m)
        worst = max(worst, abs(mom - running))
        rows.append({"n": m, "moment": mom, "tau_product": running,
                     "abs_diff": abs(mom - running)})
    return rows, {"max_abs_diff": worst, "vhat": float(shot.vhat)}


def _h_operators_schild(p, mode):
    if p["model"] == "sphere":
        xs = torusdegree.fuzzy_sphere(p["N"])
    else:  # pauli
        if p["N"] != 2:
            raise InputError("pauli model is N=2 only")
        sx = np.array([[0, 1], [1, 0]], dtype=complex)
        sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
        sz = np.diag([1.0, -1.0]).astype(complex)
        xs = [sx / 2, sy / 2, sz / 2]
    val = operators.schild_matrix(xs)
    return [], {"schild": val}


def _h_torus_degree(p, mode):
    pair = torusdegree.clock_shift(p["N"])
    p2 = pair.matrices[1]
    p2 = np.linalg.matrix_power(p2, p["flux"])
    rep = torusdegree.torus_degree(pair.matrices[0], p2)
    return [], {
        "trace": complex(rep.trace_value),
        "k": rep.k_estimate,
        "defect": rep.defect,
        "defect_frobenius": rep.defect_frobenius,
        "bound_satisfied": rep.degree_bound_satisfied,
        "convention": pair.convention,
    }


def _h_torus_action(p, mode):
    val = torusdegree.unitary_schild(torusdegree.clock_shift(p["N"]))
    return [], {"schild": val,
                "gap_to_4pi2": val - 4 * np.pi ** 2}


def _h_torus_eom(p, mode):
    _, norms = torusdegree.torus_eom_residual(torusdegree.clock_shift(p["N"]))
    return [], {"max_norm": max(norms), "norms": norms}


def _h_sphere_degree(p, mode):
    x1, x2, x3 = torusdegree.fuzzy_sphere(p["N"])
    if p["swap"]:
        x2, x3 = x3, x2
    rep = torusdegree.sphere_degree(x1, x2, x3)
    return [], {
        "trace": complex(rep.trace_value),
        "k": rep.k_estimate,
        "defect": rep.defect,
        "defect_frobenius": rep.defect_frobenius,
    }


# ---------------------------------------------------------------------
# argument grammar
# ---------------------------------------------------------------------

# flag kinds: 'num' is mode-sensitive, 'dec' is exact-decimal (always
# rational), 'float'/'int'/'str'/'flag' are literal
_OPS: Dict[Tuple[str, str], Dict] = {
    ("surfaces", "catenoid"): dict(
        handler=_h_surfaces_catenoid,
        flags=[("c", "num", None), ("r0", "num", None), ("r1", "num", None),
               ("z0", "num", "0"), ("n-min", "int", -16),
               ("n-max", "int", 16)],
        help="solve the catenoid recursion and classify the orbit",
    ),
    ("surfaces", "catenoid-closed"): dict(
        handler=_h_surfaces_catenoid_closed,
        flags=[("a", "float", None), ("hbar", "float", None),
               ("n-min", "int", -16), ("n-max", "int", 16),
               ("branch", "int", 1)],
        help="sample the closed-form catenoid profile",
    ),
    ("surfaces", "enneper"): dict(
        handler=_h_surfaces_enneper,
        flags=[("hbar", "float", None), ("n-max", "int", 32)],
        help="solve the Enneper sigma recursion",
    ),
    ("surfaces", "helicoid"): dict(
        handler=_h_surfaces_helicoid,
        flags=[("hbar", "float", None), ("x-max", "float", 1.0),
               ("steps", "int", 10)],
        help="sample the helicoid profile and its residual",
    ),
    ("surfaces", "hyperbola"): dict(
        handler=_h_surfaces_hyperbola,
        flags=[("eps", "float", None), ("delta", "float", 0.0),
               ("c", "float", 1.0), ("sign", "int", 1),
               ("n-max", "int", 100)],
        help="evaluate the hyperbola closed form and its residual",
    ),
    ("parabola", "orbit"): dict(
        handler=_h_parabola_orbit,
        flags=[("eps", "num", None), ("x", "num", None),
               ("n-max", "int", 20)],
        help="iterate the parabola recursion from v_0 = x",
    ),
    ("parabola", "shoot"): dict(
        handler=_h_parabola_shoot,
        flags=[("eps", "float", None), ("tol", "float", None),
               ("n-max", "int", 400), ("precision", "int?", None)],
        help="bisect for the initial value with an everywhere-positive orbit",
    ),
    ("parabola", "intervals"): dict(
        handler=_h_parabola_intervals,
        flags=[("eps", "float", None), ("n-max", "int", 6)],
        help="survival-interval endpoints c_0..c_n",
    ),
    ("parabola", "upoly"): dict(
        handler=_h_parabola_upoly,
        flags=[("eps", "dec", None), ("n", "int", 5)],
        help="exact polynomials u_0..u_n",
    ),
    ("parabola", "tau"): dict(
        handler=_h_parabola_tau,
        flags=[("eps", "dec", None), ("n-max", "int", 8)],
        help="exact tau polynomials and the conserved identities",
    ),
    ("parabola", "monomial"): dict(
        handler=_h_parabola_monomial,
        flags=[("p", "int", 1), ("q", "int", 3), ("eps", "float", None),
               ("n-max", "int", 60), ("window", "int", 60)],
        help="two-monomial orbit from relaxed seeds",
    ),
    ("operators", "embed"): dict(
        handler=_h_operators_embed,
        flags=[("model", "choice:catenoid,enneper,hyperbola,parabola", None),
               ("N", "int", 32), ("margin", "int?", None),
               ("c", "float", 1.0), ("r0", "float", 1.0),
               ("r1", "float", 2.0), ("n-min", "int", 0),
               ("hbar", "float", 0.1), ("eps", "float", 0.2),
               ("delta", "float", 0.3)],
        help="embed a solved surface and report its equation residual",
    ),
    ("operators", "moment"): dict(
        handler=_h_operators_moment,
        flags=[("eps", "float", None), ("n", "int", 5),
               ("dim", "int?", None)],
        help="vacuum moments of the shot parabola orbit vs tau products",
    ),
    ("operators", "schild"): dict(
        handler=_h_operators_schild,
        flags=[("model", "choice:sphere,pauli", "sphere"),
               ("N", "int", 9)],
        help="matrix Schild action of a reference configuration",
    ),
    ("torus", "degree"): dict(
        handler=_h_torus_degree,
        flags=[("N", "int", None), ("flux", "int", 1)],
        help="quantum degree of the clock/shift pair",
    ),
    ("torus", "action"): dict(
        handler=_h_torus_action,
        flags=[("N", "int", None)],
        help="unitary Schild action of the clock/shift pair",
    ),
    ("torus", "eom"): dict(
        handler=_h_torus_eom,
        flags=[("N", "int", None)],
        help="equation-of-motion residual of the clock/shift pair",
    ),
    ("sphere", "degree"): dict(
        handler=_h_sphere_degree,
        flags=[("N", "int", None), ("swap", "flag", False)],
        help="quantum degree of the fuzzy sphere",
    ),
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qms",
        description="quantized minimal surfaces: recursions, exact "
                    "structure, finite-truncation checks",
    )
    top.add_argument("--version", action="version", version=__version__)
    groups = top.add_subparsers(dest="group", required=True)
    seen = {}
    for (group, op), spec in _OPS.items():
        if group not in seen:
            gp = groups.add_parser(group)
            seen[group] = gp.add_subparsers(dest="op", required=True)
        sub = seen[group].add_parser(op, help=spec["help"])
        for name, kind, default in spec["flags"]:
            flag = "--" + name
            if kind == "flag":
                sub.add_argument(flag, action="store_true")
            elif kind == "int?":
                sub.add_argument(flag, type=int, default=None)
            elif kind == "int":
                sub.add_argument(flag, type=int, default=default,
                                 required=default is None)
            elif kind == "float":
                sub.add_argument(flag, type=str, default=default,
                                 required=default is None)
            elif kind.startswith("choice:"):
                sub.add_argument(flag, choices=kind.split(":")[1].split(","),
                                 default=default, required=default is None)
            else:  # 'num' or 'dec': mode-dependent, parsed later
                sub.add_argument(flag, type=str, default=default,
                                 required=default is None)
        sub.add_argument("--mode", choices=("float", "exact"),
                         default="float")
        sub.add_argument("--format", choices=("json", "csv"),
                         default="json")
        sub.add_argument("--seed", type=int, default=None)
        sub.add_argument("--sweep", type=str, default=None,
                         metavar="NAME=V1,V2,...",
                         help="rerun over sorted values of one flag "
                              "(the base flag is still required and "
                              "is overridden)")
    return top


def _coerce_params(spec, ns, mode: str) -> Dict[str, object]:
    out = {}
    for name, kind, _default in spec["flags"]:
        attr = name.replace("-", "_")
        raw = getattr(ns, attr)
        if raw is None or kind in ("int", "int?", "flag") \
                or kind.startswith("choice:"):
            out[attr] = raw
        elif kind == "float":
            out[attr] = parse_number(str(raw), "float")
        elif kind == "dec":
            out[attr] = parse_decimal_exact(str(raw))
        else:  # num
            out[attr] = parse_number(str(raw), mode)
    return out


def _execute(group: str, op: str, spec, ns) -> ResultTable:
    mode = ns.mode
    params = _coerce_params(spec, ns, mode)
    if params.get("precision", None) is None and "precision" in params:
        env = os.environ.get("QMS_PRECISION")
        if env is not None:
            try:
                params["precision"] = int(env)
            except ValueError:
                raise InputError(f"QMS_PRECISION={env!r} is not an integer")
    config = RunConfig(
        subcommand=f"{group} {op}", params=params, mode=mode,
        output_format=ns.format, seed=ns.seed,
    )
    rows, summary = spec["handler"](params, mode)
    return ResultTable(metadata=_metadata(config), summary=summary,
                       rows=rows)


def run(argv: List[str]) -> int:
    """Parse, execute, print one table (or a sweep list); return the
    exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    spec = _OPS[(ns.group, ns.op)]
    try:
        tables = []
        if ns.sweep:
            if "=" not in ns.sweep:
                raise InputError("--sweep needs NAME=V1,V2,...")
            name, _, vals = ns.sweep.partition("=")
            attr = name.strip().replace("-", "_")
            kinds = {f.replace("-", "_"): k for f, k, _ in spec["flags"]}
            if attr not in kinds:
                raise InputError(f"cannot sweep {name!r}")
            pairs = []  # (sort key, value to assign)
            for tok in vals.split(","):
                if kinds[attr] in ("int", "int?"):
                    pairs.append((int(tok), int(tok)))
                else:
                    pairs.append((parse_number(tok, ns.mode), tok))
            for _, v in sorted(pairs, key=lambda t: t[0]):
                setattr(ns, attr, v)
                tables.append(_execute(ns.group, ns.op, spec, ns))
        else:
            tables.append(_execute(ns.group, ns.op, spec, ns))
    except InputError as exc:
        print(f"qms: invalid input: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"qms: contract violation: "
              f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if ns.format == "csv":
        out = "\n".join(t.to_csv() for t in tables)
    elif len(tables) == 1:
        out = json.dumps(tables[0].to_json_obj(), indent=2)
    else:
        out = json.dumps([t.to_json_obj() for t in tables], indent=2)
    print(out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
