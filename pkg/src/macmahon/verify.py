"""Exact checks of the defining relations on graded truncations.

Mode forms used (e(z) = sum e_r z^-r, g(z,w) = sum g_pt z^p w^t):

    [e_r, f_s] = (psi+_{r+s} - psi-_{r+s}) / g(1,1)
    sum g_pt (e_{r+p} e_{s+t} + e_{s+p} e_{r+t}) = 0
    sum g_pt (f_{r+t} f_{s+p} + f_{s+t} f_{r+p}) = 0
    sum g_pt (psi_{r+p} e_{s+t} + e_{s+p} psi_{r+t}) = 0
    sum g_pt (psi_{r+t} f_{s+p} + f_{s+t} psi_{r+p}) = 0
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .graded import GradedModule, combine
from .scalars import to_fraction


@dataclass
class RelationReport:
    relation: str
    module: str
    degrees: list
    modes: list
    passed: bool
    counterexample: Optional[dict] = None
    checked: int = 0

    def to_json(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.relation} on {self.module} degrees={self.degrees} modes={self.modes}"
        if self.counterexample:
            msg += f" counterexample={self.counterexample}"
        return msg


def g_coeffs(p) -> dict:
    s1 = p.q1 + p.q2 + p.q3
    s2 = p.q1 * p.q2 + p.q1 * p.q3 + p.q2 * p.q3
    return {(3, 0): Fraction(1), (2, 1): -s1, (1, 2): s2, (0, 3): Fraction(-1)}


def g11(p) -> Fraction:
    return (1 - p.q1) * (1 - p.q2) * (1 - p.q3)


def _describe(mod) -> str:
    return getattr(mod, "descriptor", mod.name)


def _run(mod: GradedModule, relation: str, d: int, modes, residual) -> RelationReport:
    """residual(label) -> sparse vector that must vanish."""
    count = 0
    for label in mod.basis(d):
        count += 1
        res = residual(label)
        if res:
            target, val = min(res.items(), key=lambda kv: repr(kv[0]))
            cex = {"basis": repr(label), "target": repr(target), "residual": str(to_fraction(val))}
            return RelationReport(relation, _describe(mod), [d], list(modes), False, cex, count)
    return RelationReport(relation, _describe(mod), [d], list(modes), True, None, count)


def _unit(label):
    return {label: 1}


def check_ef(mod: GradedModule, d: int, r: int, s: int) -> RelationReport:
    p = mod.params
    c = 1 / g11(p)

    def residual(label):
        v = _unit(label)
        ef = mod.apply_word([("e", r), ("f", s)], v)
        fe = mod.apply_word([("f", s), ("e", r)], v)
        diag = (mod.psi_mode(label, 1, r + s) - mod.psi_mode(label, -1, r + s)) * c
        return combine((1, ef), (-1, fe), (-1, {label: diag}))

    return _run(mod, "rel3 [e,f]", d, (r, s), residual)


def check_quadratic(mod: GradedModule, gen: str, d: int, r: int, s: int) -> RelationReport:
    g = g_coeffs(mod.params)

    def residual(label):
        v = _unit(label)
        parts = []
        for (pp, t), c in g.items():
            if gen == "e":
                words = [[("e", r + pp), ("e", s + t)], [("e", s + pp), ("e", r + t)]]
            else:
                words = [[("f", r + t), ("f", s + pp)], [("f", s + t), ("f", r + pp)]]
            for w in words:
                parts.append((c, mod.apply_word(w, v)))
        return combine(*parts)

    return _run(mod, f"rel4 {gen}{gen}", d, (r, s), residual)


def check_psi_e(mod: GradedModule, d: int, r: int, s: int, sign: int = 1) -> RelationReport:
    g = g_coeffs(mod.params)
    psi = "psi+" if sign > 0 else "psi-"

    def residual(label):
        v = _unit(label)
        parts = []
        for (pp, t), c in g.items():
            parts.append((c, mod.apply_word([(psi, r + pp), ("e", s + t)], v)))
            parts.append((c, mod.apply_word([("e", s + pp), (psi, r + t)], v)))
        return combine(*parts)

    return _run(mod, f"rel2 {psi} e", d, (r, s), residual)


def check_psi_f(mod: GradedModule, d: int, r: int, s: int, sign: int = 1) -> RelationReport:
    g = g_coeffs(mod.params)
    psi = "psi+" if sign > 0 else "psi-"

    def residual(label):
        v = _unit(label)
        parts = []
        for (pp, t), c in g.items():
            parts.append((c, mod.apply_word([(psi, r + t), ("f", s + pp)], v)))
            parts.append((c, mod.apply_word([("f", s + t), (psi, r + pp)], v)))
        return combine(*parts)

    return _run(mod, f"rel2 {psi} f", d, (r, s), residual)


def check_psi_commute(mod: GradedModule, d: int, r: int, s: int) -> RelationReport:
    def residual(label):
        v = _unit(label)
        parts = []
        for a in ("psi+", "psi-"):
            for b in ("psi+", "psi-"):
                parts.append((1, mod.apply_word([(a, r), (b, s)], v)))
                parts.append((-1, mod.apply_word([(b, s), (a, r)], v)))
        return combine(*parts)

    return _run(mod, "rel1 [psi,psi]", d, (r, s), residual)


def check_serre(mod: GradedModule, d: int, gen: str = "e") -> RelationReport:
    x = gen

    def residual(label):
        v = _unit(label)
        return combine(
            (1, mod.apply_word([(x, 0), (x, 1), (x, -1)], v)),
            (-1, mod.apply_word([(x, 0), (x, -1), (x, 1)], v)),
            (-1, mod.apply_word([(x, 1), (x, -1), (x, 0)], v)),
            (1, mod.apply_word([(x, -1), (x, 1), (x, 0)], v)),
        )

    return _run(mod, f"rel5 serre {gen}", d, (-1, 0, 1), residual)


def check_tame(mod: GradedModule, d: int) -> RelationReport:
    seen = {}
    basis = mod.basis(d)
    for label in basis:
        psi = mod.psi(label)
        if psi in seen:
            cex = {"basis": repr(label), "clashes_with": repr(seen[psi]), "psi": psi.describe()}
            return RelationReport("tame", _describe(mod), [d], [], False, cex, len(basis))
        seen[psi] = label
    return RelationReport("tame", _describe(mod), [d], [], True, None, len(basis))


def relation_suite(mod: GradedModule, degrees, window=(-2, 2)) -> list:
    """All relations on each degree in `degrees` for modes in the window."""
    lo, hi = window
    modes = range(lo, hi + 1)
    reports = []
    for d in degrees:
        for r in modes:
            for s in modes:
                reports.append(check_ef(mod, d, r, s))
                reports.append(check_quadratic(mod, "e", d, r, s))
                reports.append(check_quadratic(mod, "f", d, r, s))
                for sign in (1, -1):
                    reports.append(check_psi_e(mod, d, r, s, sign))
                    reports.append(check_psi_f(mod, d, r, s, sign))
        reports.append(check_psi_commute(mod, d, 1, -1))
        reports.append(check_serre(mod, d, "e"))
        reports.append(check_serre(mod, d, "f"))
    return reports


def summarize(reports) -> RelationReport:
    bad = next((r for r in reports if not r.passed), None)
    if bad is not None:
        return bad
    degrees = sorted({d for r in reports for d in r.degrees})
    name = reports[0].module if reports else "?"
    return RelationReport("all", name, degrees, [], True, None, sum(r.checked for r in reports))
