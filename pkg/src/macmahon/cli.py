"""Command line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import characters as ch
from . import glinf_gz as gz
from .fockrep import FockModule, VectorModule
from .macmahonrep import MacmahonModule, cartan_from_psi, limit_coefficients, psi_shell
from .planepartitions import (VACUUM, BoundaryTriple, NoResonanceError, NotSplitError,
                              enumerate_pp, minimal_pp, parse_boundary, resonance_box)
from .scalars import NonGenericError, make_generic_params
from .verify import check_tame, relation_suite, summarize


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    boundary: BoundaryTriple = VACUUM
    level: Optional[tuple] = None  # (m, n) or None for generic K
    max_degree: int = 3
    order: int = 8
    modes: tuple = (-2, 2)
    seed: int = 0
    bound: int = 16
    fmt: str = "text"
    output: Optional[str] = None
    extra: dict = field(default_factory=dict)


def _parse_level(text: str):
    if text in (None, "generic"):
        return None
    try:
        m, n = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--level must be 'generic' or 'm,n', got {text!r}")
    return (m, n)


def _parse_modes(text: str):
    try:
        a, b = (int(t) for t in text.split(".."))
    except ValueError:
        raise UsageError(f"--modes must look like a..b, got {text!r}")
    if a > b:
        raise UsageError("--modes needs a <= b")
    return (a, b)


def _parse_ints(text: str):
    text = text.strip().strip("()")
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected a comma separated integer list, got {text!r}")


def _params(cfg: RunConfig):
    p = make_generic_params(cfg.seed, cfg.bound)
    if cfg.level is not None:
        p = p.with_resonance(*cfg.level)
    return p


# -- commands ----------------------------------------------------------------

def cmd_enumerate(cfg: RunConfig):
    forbidden = resonance_box(cfg.boundary, *cfg.level) if cfg.level else None
    if cfg.extra.get("counts"):
        counts = [len(enumerate_pp(cfg.boundary, d, forbidden)) for d in range(cfg.max_degree + 1)]
        return {"boundary": str(cfg.boundary), "forbidden": forbidden, "counts": counts}, 0
    listing = {d: [mu.to_json() for mu in enumerate_pp(cfg.boundary, d, forbidden)]
               for d in range(cfg.max_degree + 1)}
    return {"boundary": str(cfg.boundary), "forbidden": forbidden, "plane_partitions": listing}, 0


def cmd_psi(cfg: RunConfig):
    mu = minimal_pp(cfg.boundary)
    psi = psi_shell(mu)
    return {"boundary": str(cfg.boundary), "psi": psi.describe(),
            "factors": [{"K": bool(k), "triple": list(t), "order": e} for k, t, e in psi.triples()]}, 0


def _module(cfg: RunConfig):
    p = _params(cfg)
    kind = cfg.extra.get("module", "macmahon")
    if kind == "vector":
        return VectorModule(p)
    if kind == "fock":
        return FockModule(p)
    return MacmahonModule(cfg.boundary, p, quotient=cfg.extra.get("quotient", False))


def cmd_verify(cfg: RunConfig):
    mod = _module(cfg)
    degrees = mod.degree_range(cfg.max_degree)
    if cfg.extra.get("inject_fault"):
        mod.inject_fault(mod.basis(min(1, cfg.max_degree))[0])
    reports = relation_suite(mod, degrees, cfg.modes)
    if cfg.extra.get("module", "macmahon") != "vector":
        reports += [check_tame(mod, d) for d in degrees]
    summary = summarize(reports)
    out = {"summary": summary.to_json(), "failures": [r.to_json() for r in reports if not r.passed]}
    return out, 0 if summary.passed else 1


def cmd_character(cfg: RunConfig):
    N = cfg.order
    if cfg.extra.get("theorem"):
        alpha = cfg.extra["alpha"]
        n = cfg.extra.get("n") or len(alpha)
        s = ch.theorem_character(alpha, n, N)
        return {"alpha": alpha, "n": n, "p_alpha": ch.p_alpha(alpha, n), "series": s.to_list()}, 0
    if cfg.extra.get("macmahon"):
        return {"series": ch.macmahon_series(N).to_list()}, 0
    if cfg.extra.get("chi") is not None:
        return {"k": cfg.extra["chi"], "series": ch.chi(cfg.extra["chi"], N).to_list()}, 0
    s = ch.module_character(cfg.boundary, cfg.level, N)
    return {"boundary": str(cfg.boundary), "level": cfg.level, "series": s.to_list()}, 0


def cmd_conjecture(cfg: RunConfig):
    N = cfg.order
    m = cfg.extra["m"]
    if cfg.extra["id"] == 1:
        formula, res = ch.conjecture1(m, N), (1, m)
    else:
        n = cfg.extra["n"]
        formula, res = ch.conjecture2(n, m, N), (n, m)
    enum = ch.module_character(VACUUM, res, N)
    diff = formula.first_difference(enum)
    out = {"conjecture": cfg.extra["id"], "resonance": list(res), "formula": formula.to_list(),
           "enumeration": enum.to_list(), "agrees": diff is None, "first_difference": diff}
    return out, 0 if diff is None else 1


def cmd_gz(cfg: RunConfig):
    n, alpha, c = cfg.extra["n"], cfg.extra["alpha"], cfg.extra.get("c", 0)
    reports = gz.check_glinf_relations(n, alpha, c, cfg.extra.get("window", 2), cfg.max_degree)
    bad = [r for r in reports if not r.passed]
    lw = gz.lowest_weight_theta(n, alpha, c, (-n - 1, n + 1))
    out = {"n": n, "alpha": alpha, "c": c,
           "counts": gz.gz_character(n, alpha, c, cfg.max_degree),
           "lowest_weight": {str(i): v for i, v in lw.items()},
           "relations_checked": len(reports), "failures": [r.to_json() for r in bad]}
    return out, 0 if not bad else 1


def cmd_limit(cfg: RunConfig):
    n = cfg.extra["n"]
    if cfg.boundary.beta:
        raise UsageError("limit needs beta = ()")
    cfg.level = (n, n)
    mod = MacmahonModule(cfg.boundary, _params(cfg), quotient=cfg.extra.get("quotient", False))
    rep = limit_coefficients(mod, cfg.max_degree)
    window = (-n - 2, n + 2)
    theta = cartan_from_psi(mod, window=window)
    expected = gz.theta_from_boundary(cfg.boundary.alpha, cfg.boundary.gamma, -n, window)
    ok = rep.all_finite and theta == expected
    out = {"module": rep.module, "entries": len(rep.entries), "all_finite": rep.all_finite,
           "theta_from_psi": {str(i): int(v) if v.denominator == 1 else str(v) for i, v in theta.items()},
           "theta_from_boundary": {str(i): v for i, v in expected.items()},
           "theta_agrees": theta == expected}
    return out, 0 if ok else 1


def cmd_tensor(cfg: RunConfig):
    a, b, c = cfg.extra["abc"]
    rep = ch.tensor_factorization_check(cfg.boundary, a, b, c, cfg.order)
    return rep.to_json(), 0 if rep.agrees else 1


COMMANDS = {
    "enumerate": cmd_enumerate, "psi": cmd_psi, "verify": cmd_verify, "character": cmd_character,
    "conjecture": cmd_conjecture, "gz": cmd_gz, "limit": cmd_limit, "tensor": cmd_tensor,
}


# -- output ----------------------------------------------------------------------

def _series_rows(out: dict):
    for key in ("series", "counts", "formula"):
        if key in out:
            return list(enumerate(out[key]))
    return None


def render(out: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out, indent=2, sort_keys=True, default=str) + "\n"
    if fmt == "csv":
        rows = _series_rows(out)
        if rows is None:
            raise UsageError("csv output is only available for series and counts")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "value"])
        w.writerows(rows)
        return buf.getvalue()
    lines = []
    for k, v in out.items():
        if isinstance(v, (dict, list)) and k in ("plane_partitions", "failures", "summary"):
            v = json.dumps(v, sort_keys=True, default=str)
        lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="macmahon", description="Macmahon modules of the quantum toroidal gl1 algebra")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--boundary", default="();();()", help='e.g. "(3,1);(3,2,1,1);()"')
        p.add_argument("--level", default="generic", help="'generic' or m,n for K = q2^m q3^n")
        p.add_argument("--max-degree", type=int, default=3)
        p.add_argument("--order", type=int, default=8)
        p.add_argument("--modes", default="-2..2")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--bound", type=int, default=16)
        p.add_argument("--format", default="text", choices=("text", "json", "csv"))
        p.add_argument("--output")
        return p

    p = common(sub.add_parser("enumerate", help="plane partitions by degree"))
    p.add_argument("--counts", action="store_true")
    p.add_argument("--forbidden-from-resonance", help="m,n; same as --level m,n")
    common(sub.add_parser("psi", help="psi eigenvalue of the minimal vector"))
    p = common(sub.add_parser("verify", help="defining relations on a truncation"))
    p.add_argument("--module", default="macmahon", choices=("macmahon", "fock", "vector"))
    p.add_argument("--quotient", action="store_true")
    p.add_argument("--inject-fault", action="store_true", help="test hook: corrupt one coefficient")
    p = common(sub.add_parser("character", help="characters"))
    p.add_argument("--theorem", action="store_true")
    p.add_argument("--alpha", default="")
    p.add_argument("--n", type=int)
    p.add_argument("--chi", type=int)
    p.add_argument("--macmahon", action="store_true", help="plain MacMahon function")
    p = common(sub.add_parser("conjecture", help="conjectural character formulas"))
    p.add_argument("--id", type=int, choices=(1, 2), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p = common(sub.add_parser("gz", help="gl_inf relations on hook patterns"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="")
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--window", type=int, default=2)
    p = common(sub.add_parser("limit", help="q1 -> 1 limit of a module at K = (q2 q3)^n"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--quotient", action="store_true")
    p = common(sub.add_parser("tensor", help="tensor factorization at character level"))
    p.add_argument("--abc", required=True, help="a,b,c")
    return ap


def config_from_args(ns) -> RunConfig:
    try:
        boundary = parse_boundary(ns.boundary)
    except ValueError as exc:
        raise UsageError(str(exc))
    level = _parse_level(getattr(ns, "forbidden_from_resonance", None) or ns.level)
    cfg = RunConfig(ns.command, boundary, level, ns.max_degree, ns.order, _parse_modes(ns.modes),
                    ns.seed, ns.bound, ns.format, ns.output)
    for key in ("counts", "module", "quotient", "inject_fault", "theorem", "macmahon", "n", "chi", "id", "m",
                "c", "window"):
        if hasattr(ns, key):
            cfg.extra[key] = getattr(ns, key)
    if hasattr(ns, "alpha"):
        cfg.extra["alpha"] = _parse_ints(ns.alpha)
    if hasattr(ns, "abc"):
        abc = _parse_ints(ns.abc)
        if len(abc) != 3:
            raise UsageError("--abc needs three integers")
        cfg.extra["abc"] = tuple(abc)
    if cfg.command == "conjecture" and cfg.extra["id"] == 2 and cfg.extra.get("n") is None:
        raise UsageError("conjecture 2 needs --n")
    if cfg.command == "character" and cfg.extra.get("theorem") and not cfg.extra["alpha"]:
        raise UsageError("--theorem needs --alpha")
    if cfg.max_degree < 0 or cfg.order < 0:
        raise UsageError("degrees and orders must be >= 0")
    return cfg


def _glue_modes(argv):
    # "-1..1" looks like a flag to argparse
    out, it = [], iter(argv)
    for a in it:
        if a == "--modes":
            a = "--modes=" + next(it, "")
        out.append(a)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(_glue_modes(sys.argv[1:] if argv is None else list(argv)))
    try:
        cfg = config_from_args(ns)
        out, code = COMMANDS[cfg.command](cfg)
        text = render(out, cfg.fmt)
    except (UsageError, NonGenericError, NoResonanceError, NotSplitError,
            gz.PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
