"""Factored psi-eigenvalues prod (1 - w x)^e in x = u/z."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .scalars import (BinomialProduct, Key, MonomialTriple, ParamSpec, PoleError,
                      fold_key, key_div, key_triple)

K_KEY = (1, 0, 0)


class PsiEigenvalue:
    """Immutable multiset of binomial factors {key: order}."""

    __slots__ = ("_f", "_hash")

    def __init__(self, factors=None):
        c = Counter()
        for k, e in dict(factors or {}).items():
            c[k] += e
        self._f = tuple(sorted((k, e) for k, e in c.items() if e))
        self._hash = hash(self._f)

    @property
    def factors(self) -> dict:
        return dict(self._f)

    def items(self):
        return self._f

    def __eq__(self, other):
        return isinstance(other, PsiEigenvalue) and self._f == other._f

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "PsiEigenvalue") -> "PsiEigenvalue":
        c = Counter(dict(self._f))
        for k, e in other._f:
            c[k] += e
        return PsiEigenvalue(c)

    def __truediv__(self, other: "PsiEigenvalue") -> "PsiEigenvalue":
        c = Counter(dict(self._f))
        for k, e in other._f:
            c[k] -= e
        return PsiEigenvalue(c)

    def __repr__(self):
        return f"PsiEigenvalue({self.describe()})"

    def describe(self) -> str:
        num, den = [], []
        for (kp, A, B), e in self._f:
            mono = "".join(s for s in (
                "K" * kp if kp >= 0 else f"K^{kp}",
                "" if A == 0 else ("q1" if A == 1 else f"q1^{A}"),
                "" if B == 0 else ("q2" if B == 1 else f"q2^{B}"),
            ))
            term = f"(1-{mono or '1'}x)" + (f"^{abs(e)}" if abs(e) > 1 else "")
            (num if e > 0 else den).append(term)
        if len(den) > 1:
            return ("*".join(num) or "1") + "/(" + "*".join(den) + ")"
        return ("*".join(num) or "1") + ("/" + den[0] if den else "")

    def triples(self):
        """[(has_K, MonomialTriple, order)] with canonical i = 0 triples."""
        return [(k[0], key_triple(k), e) for k, e in self._f]

    def fold(self, resonance) -> "PsiEigenvalue":
        if resonance is None:
            return self
        c = Counter()
        for k, e in self._f:
            c[fold_key(k, resonance)] += e
        return PsiEigenvalue(c)

    def total_order(self) -> int:
        return sum(e for _, e in self._f)

    # -- evaluation ----------------------------------------------------------
    def evaluate(self, x, p: ParamSpec) -> Fraction:
        x = Fraction(x)
        val = Fraction(1)
        for k, e in self._f:
            b = 1 - p.value(fold_key(k, p.resonance)) * x
            if b == 0:
                if e < 0:
                    raise PoleError("evaluation at a pole")
                return Fraction(0)
            val *= b ** e
        return val

    def at_support(self, w0: Key):
        """Evaluate at x = 1/w0 after cancelling; returns (order, BinomialProduct).

        The factor (1 - w/w0) vanishes exactly when w = w0 (genericity), so
        its net exponent is the vanishing order and it is left out.
        """
        order = 0
        out = Counter()
        for k, e in self._f:
            r = key_div(k, w0)
            if r == (0, 0, 0):
                order += e
            else:
                out[r] += e
        return order, BinomialProduct.make(1, (0, 0), out)

    def expand_plus(self, n: int, p: ParamSpec):
        """[psi+_0, ..., psi+_n]: Taylor coefficients at x = 0 times u^k."""
        s = [Fraction(1)] + [Fraction(0)] * n
        for k, e in self._f:
            w = p.value(fold_key(k, p.resonance))
            _mul_binomial(s, w, e)
        return [c * p.u ** t for t, c in enumerate(s)]

    def expand_minus(self, n: int, p: ParamSpec):
        """[psi-_0, psi-_{-1}, ..., psi-_{-n}]: expansion at x = infinity."""
        if self.total_order() != 0:
            raise ValueError("psi eigenvalue is not regular at infinity")
        s = [Fraction(1)] + [Fraction(0)] * n
        const = Fraction(1)
        for k, e in self._f:
            w = p.value(fold_key(k, p.resonance))
            const *= (-w) ** e
            _mul_binomial(s, 1 / w, e)
        return [const * c / p.u ** t for t, c in enumerate(s)]


def _mul_binomial(s, w, e):
    """In place: s <- s * (1 - w y)^e, truncated."""
    n = len(s) - 1
    if e > 0:
        for _ in range(e):
            for t in range(n, 0, -1):
                s[t] -= w * s[t - 1]
    else:
        for _ in range(-e):
            for t in range(1, n + 1):
                s[t] += w * s[t - 1]


def psi_from_triples(entries, with_K: bool = True) -> PsiEigenvalue:
    """Build (1 - Kx) * prod (1 - q1^j q2^k q3^i x)^a from [((i,j,k), a)]."""
    c = Counter()
    if with_K:
        c[K_KEY] += 1
    for pos, a in entries:
        c[MonomialTriple(*pos).key] += a
    return PsiEigenvalue(c)


class PsiModes:
    """Cached psi+-modes and psi- modes of one eigenvalue."""

    def __init__(self, psi: PsiEigenvalue, p: ParamSpec):
        self.psi = psi
        self.p = p
        self._plus = []
        self._minus = []

    def __call__(self, sign: int, k: int) -> Fraction:
        if sign > 0:
            if k < 0:
                return Fraction(0)
            if k >= len(self._plus):
                self._plus = self.psi.expand_plus(max(k, 2 * len(self._plus), 6), self.p)
            return self._plus[k]
        if k > 0:
            return Fraction(0)
        if -k >= len(self._minus):
            self._minus = self.psi.expand_minus(max(-k, 2 * len(self._minus), 6), self.p)
        return self._minus[-k]
