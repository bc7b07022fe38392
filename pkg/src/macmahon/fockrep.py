"""The vector representation V(u) and the Fock module F(u)."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .graded import GradedModule, as_fractions
from .partitions import Partition, corners2d, partitions_of
from .psi import PsiEigenvalue
from .scalars import BinomialProduct, ParamSpec, key_mul, triple_key

INV_1MQ1 = {(0, 1, 0): -1}  # 1/(1 - q1)


def _t(i, j, k=0):
    return triple_key(i, j, k)


# -- vector representation -------------------------------------------------

def vector_psi(i: int) -> PsiEigenvalue:
    """psi(q1^i x) with psi(x) = (1-q3 x)(1-q2 x)/((1-x)(1-q2 q3 x))."""
    return PsiEigenvalue({_t(1, i, 0): 1, _t(0, i, 1): 1, _t(0, i, 0): -1, _t(1, i, 1): -1})


class VectorModule(GradedModule):
    """Basis [u]_i, i in Z, graded by i."""

    name = "V(u)"

    def basis(self, d):
        return [d]

    def degree_range(self, dmax):
        return range(-dmax, dmax + 1)

    def e_terms(self, i):
        return [(i + 1, BinomialProduct.make(1, (0, 0), INV_1MQ1), _t(0, i))]

    def f_terms(self, i):
        # -1/(1 - q1^-1) = q1/(1 - q1)
        return [(i - 1, BinomialProduct.make(1, (1, 0), INV_1MQ1), _t(0, i - 1))]

    def psi(self, i):
        return vector_psi(i).fold(self.params.resonance)


def vector_action(gen: str, r: int, i: int, p: ParamSpec) -> dict:
    return as_fractions(VectorModule(p).apply(gen, r, {i: Fraction(1)}))


# -- Fock module ---------------------------------------------------------------

def fock_psi_factors(lam, shift=(0, 0, 0)) -> Counter:
    """Factor multiset of psi_lambda(u'/z) with u' = shift * u."""
    cc, cv = corners2d(lam)
    c = Counter()
    for (i, j) in cc:
        c[key_mul(_t(i - 2, j - 2), shift)] += 1
        c[key_mul(_t(i - 1, j - 1), shift)] -= 1
    for (i, j) in cv:
        c[key_mul(_t(i, j), shift)] += 1
        c[key_mul(_t(i - 1, j - 1), shift)] -= 1
    return c


def fock_psi(lam, p: ParamSpec = None, shift=(0, 0, 0)) -> PsiEigenvalue:
    return PsiEigenvalue(fock_psi_factors(Partition(lam), shift))


def _qq(a: int, b: int):
    """Key of q1^a q3^b."""
    return _t(b, a, 0)


def psi_la(lam: Partition, i: int) -> Counter:
    """Factors of psi_{lambda,i} (coefficient of adding a box in row i)."""
    c = Counter()
    li = lam.part(i)
    for k in range(1, i):
        d = lam.part(k) - li
        c[_qq(d, k - i + 1)] += 1
        c[_qq(d - 1, k - i - 1)] += 1
        c[_qq(d, k - i)] -= 1
        c[_qq(d - 1, k - i)] -= 1
    return c


def psi_prime(lam: Partition, i: int) -> Counter:
    """Factors of psi'_{lambda,i} (coefficient of removing a box in row i).

    The infinite product stops at k = len(lambda): past it every factor is 1.
    """
    c = Counter()
    li = lam.part(i)
    d1 = lam.part(i + 1) - li
    c[_qq(d1, 0)] += 1
    c[_qq(d1 + 1, 1)] -= 1
    for k in range(i + 1, len(lam) + 1):
        dk = lam.part(k) - li
        dk1 = lam.part(k + 1) - li
        c[_qq(dk + 1, k - i + 1)] += 1
        c[_qq(dk1, k - i)] += 1
        c[_qq(dk1 + 1, k - i + 1)] -= 1
        c[_qq(dk, k - i)] -= 1
    return c


class FockModule(GradedModule):
    """F(u) with basis |lambda>, graded by |lambda|."""

    name = "F(u)"

    def basis(self, d):
        return list(partitions_of(d))[::-1]

    def e_terms(self, lam):
        lam = Partition(lam)
        out = []
        for (i, j) in sorted(corners2d(lam)[0]):
            f = psi_la(lam, i)
            f.update(INV_1MQ1)
            out.append((lam.add_box(i), BinomialProduct.make(1, (0, 0), f), _t(i - 1, j - 1)))
        return out

    def f_terms(self, lam):
        lam = Partition(lam)
        out = []
        for (i, j) in sorted(corners2d(lam)[1]):
            f = psi_prime(lam, i)
            f.update(INV_1MQ1)
            out.append((lam.remove_box(i), BinomialProduct.make(1, (1, 0), f), _t(i - 1, j - 1)))
        return out

    def psi(self, lam):
        return fock_psi(lam).fold(self.params.resonance)


def fock_e(lam, r: int, p: ParamSpec) -> dict:
    return as_fractions(FockModule(p).apply("e", r, {Partition(lam): Fraction(1)}))


def fock_f(lam, r: int, p: ParamSpec) -> dict:
    return as_fractions(FockModule(p).apply("f", r, {Partition(lam): Fraction(1)}))
