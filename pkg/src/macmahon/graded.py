"""Common interface for graded modules and exact sparse mode operators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .psi import PsiModes
from .scalars import ParamSpec, to_fast, to_fraction


class GradedModule:
    """Subclasses provide basis(d), e_terms, f_terms and psi.

    e_terms(label) returns [(target, BinomialProduct, support_key)] so that
    e_r |label> = sum coef * (support * u)^r |target>; likewise f_terms.
    """

    params: ParamSpec
    name = "module"

    def __init__(self, params: ParamSpec):
        self.params = params
        self._num = {}
        self._modes = {}
        self._images = {}
        self._fault = None

    def basis(self, d: int):
        raise NotImplementedError

    def e_terms(self, label):
        raise NotImplementedError

    def f_terms(self, label):
        raise NotImplementedError

    def psi(self, label):
        raise NotImplementedError

    def degree_range(self, dmax: int):
        return range(0, dmax + 1)

    def inject_fault(self, label):
        """Test hook: doubles the e coefficients on one basis vector."""
        self._fault = label
        self._num.clear()
        self._images.clear()

    # -- numeric layer ---------------------------------------------------
    def terms_num(self, gen: str, label):
        key = (gen, label)
        hit = self._num.get(key)
        if hit is None:
            p = self.params
            raw = self.e_terms(label) if gen == "e" else self.f_terms(label)
            hit = []
            for target, bp, support in raw:
                c = bp.evaluate(p)
                if c:
                    if gen == "e" and label == self._fault:
                        c *= 2
                    hit.append((target, to_fast(c), to_fast(p.value(support) * p.u)))
            self._num[key] = hit
        return hit

    def psi_mode(self, label, sign: int, k: int) -> Fraction:
        m = self._modes.get(label)
        if m is None:
            m = self._modes[label] = PsiModes(self.psi(label), self.params)
        return m(sign, k)

    def image(self, gen: str, r: int, label) -> dict:
        """Cached image of a single basis vector."""
        key = (gen, r, label)
        hit = self._images.get(key)
        if hit is None:
            if gen in ("e", "f"):
                hit = {}
                for target, coef, x in self.terms_num(gen, label):
                    hit[target] = hit.get(target, 0) + coef * x ** r
            else:
                v = self.psi_mode(label, 1 if gen == "psi+" else -1, r)
                hit = {label: to_fast(v)} if v else {}
            self._images[key] = hit = {k: v for k, v in hit.items() if v}
        return hit

    def apply(self, gen: str, r: int, vec: dict) -> dict:
        out = {}
        for label, c in vec.items():
            for target, v in self.image(gen, r, label).items():
                out[target] = out.get(target, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def apply_word(self, word, vec: dict) -> dict:
        """Apply generators right to left: word = [(gen, r), ...]."""
        for gen, r in reversed(word):
            vec = self.apply(gen, r, vec)
            if not vec:
                break
        return vec


def as_fractions(vec: dict) -> dict:
    return {k: to_fraction(v) for k, v in vec.items()}


def combine(*pairs) -> dict:
    """Linear combination sum c * vec of sparse vectors."""
    out = {}
    for c, vec in pairs:
        c = to_fast(c)
        for k, v in vec.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


@dataclass
class ModeOperator:
    gen: str
    mode: int
    source_degree: int
    target_degree: int
    columns: list
    rows: list
    entries: dict  # (row index, column index) -> Fraction

    def to_json(self, label_json=repr) -> dict:
        return {
            "generator": self.gen,
            "mode": self.mode,
            "source_degree": self.source_degree,
            "target_degree": self.target_degree,
            "shape": [len(self.rows), len(self.columns)],
            "rows": [label_json(x) for x in self.rows],
            "columns": [label_json(x) for x in self.columns],
            "entries": [[r, c, str(v)] for (r, c), v in sorted(self.entries.items())],
        }


def mode_matrix(mod: GradedModule, gen: str, r: int, d: int) -> ModeOperator:
    shift = {"e": 1, "f": -1}.get(gen, 0)
    cols = list(mod.basis(d))
    rows = list(mod.basis(d + shift)) if shift else cols
    index = {x: n for n, x in enumerate(rows)}
    entries = {}
    for cidx, label in enumerate(cols):
        for target, v in mod.apply(gen, r, {label: 1}).items():
            if target not in index:
                raise KeyError(f"target {target} outside the truncated basis")
            entries[(index[target], cidx)] = to_fraction(v)
    return ModeOperator(gen, r, d, d + shift, cols, rows, entries)
