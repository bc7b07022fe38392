"""Macmahon modules M_{alpha,beta,gamma}(u, K) and their resonance quotients."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .fockrep import INV_1MQ1, fock_psi_factors, psi_la, psi_prime
from .graded import GradedModule, as_fractions
from .planepartitions import (BoundaryTriple, PlanePartition, corners3d, enumerate_pp,
                              minimal_pp, omega_t, resonance_box, shell, to_layers)
from .psi import K_KEY, PsiEigenvalue
from .scalars import (BinomialProduct, FactoredQ1Scalar, ParamSpec, PoleError, key_mul,
                      laurent_at_q1_one, limit_at_q1_one, triple_key)


def psi_shell(mu: PlanePartition) -> PsiEigenvalue:
    """(1 - Kx) * prod over the shell of (1 - q1^j q2^k q3^i x)^a."""
    c = Counter({K_KEY: 1})
    for (i, j, k), a in shell(mu):
        c[triple_key(i, j, k)] += a
    return PsiEigenvalue(c)


def psi_box(i: int, j: int, k: int) -> Counter:
    """Factors of psi_{i,j,k}, the contribution of one box."""
    return Counter({
        triple_key(i, j, k - 1): 1, triple_key(i, j - 1, k): 1, triple_key(i - 1, j, k): 1,
        triple_key(i - 1, j - 1, k): -1, triple_key(i, j - 1, k - 1): -1,
        triple_key(i - 1, j, k - 1): -1,
    })


def psi_vacuum_boxes(mu: PlanePartition) -> PsiEigenvalue:
    """(1 - Kx)/(1 - x) * prod over Y of psi_{i,j,k}; needs a finite Y."""
    if any(mu.boundary):
        raise ValueError("box product is only finite for the vacuum boundary")
    c = Counter({K_KEY: 1, (0, 0, 0): -1})
    for box in mu.boxes:
        c.update(psi_box(*box))
    return PsiEigenvalue(c)


def psi_product(mu: PlanePartition) -> PsiEigenvalue:
    """Layerwise product formula; finite because layers stabilize to gamma."""
    layers = to_layers(mu)
    L = len(layers) + 1
    lam = lambda m: layers[min(m, len(layers)) - 1][0]
    a, b, _ = mu.boundary

    def s(m):
        return triple_key(b.part(m), a.part(m), m - 1)

    def F(e1, e2, e3, m):  # key of q1^e1 q2^e2 q3^e3 u_m / u
        return key_mul(triple_key(e3, e1, e2), s(m))

    Jm = max(len(x[0]) for x in layers) + 2
    c = Counter({K_KEY: 1})
    c[F(lam(1).part(1), 0, 0, 1)] -= 1
    for i in range(1, L + 1):
        c[F(lam(i).part(1), 1, 0, i)] += 1
        c[F(lam(i + 1).part(1), 0, 0, i + 1)] -= 1
    for j in range(1, Jm + 1):
        c[F(lam(1).part(j), 0, j, 1)] += 1
        c[F(lam(1).part(j + 1), 0, j, 1)] -= 1
    for i in range(1, L + 1):
        for j in range(1, Jm + 1):
            c[F(lam(i + 1).part(j), 0, j, i + 1)] += 1
            c[F(lam(i).part(j + 1), 1, j, i)] += 1
            c[F(lam(i + 1).part(j + 1), 0, j, i + 1)] -= 1
            c[F(lam(i).part(j), 1, j, i)] -= 1
    return PsiEigenvalue(c)


class MacmahonModule(GradedModule):
    """M_{alpha,beta,gamma}(u,K); with quotient=True at resonance, N^{m,n}."""

    name = "M"

    def __init__(self, boundary: BoundaryTriple, params: ParamSpec, quotient: bool = False):
        super().__init__(params)
        self.boundary = minimal_pp(boundary).boundary
        self.resonance = params.resonance
        self.forbidden = None
        if quotient:
            if self.resonance is None:
                raise ValueError("a quotient needs a resonance level K = q2^m q3^n")
            self.forbidden = resonance_box(self.boundary, *self.resonance)
        self._cache = {}

    @property
    def descriptor(self) -> str:
        b = str(self.boundary)
        if self.forbidden is not None:
            m, n = self.resonance
            return f"N^{{{m},{n}}}[{b}]"
        if self.resonance is not None:
            return f"M[{b}] at K=q2^{self.resonance[0]} q3^{self.resonance[1]}"
        return f"M[{b}]"

    def basis(self, d):
        return enumerate_pp(self.boundary, d, self.forbidden)

    def _data(self, mu: PlanePartition):
        hit = self._cache.get(mu)
        if hit is None:
            layers = to_layers(mu)
            prefix = [Counter()]
            for lam, shift in layers:
                nxt = Counter(prefix[-1])
                nxt.update(fock_psi_factors(lam, shift.key))
                prefix.append(nxt)
            hit = self._cache[mu] = (layers, prefix, corners3d(mu))
        return hit

    def _layer(self, layers, k):
        return layers[min(k, len(layers)) - 1][0]

    def psi(self, mu):
        return psi_shell(mu).fold(self.resonance)

    def e_terms(self, mu: PlanePartition):
        layers, prefix, (cc, _) = self._data(mu)
        beta = self.boundary.beta
        out = []
        for (i, j, k) in sorted(cc):
            if (i, j, k) == self.forbidden:
                continue
            w0 = triple_key(i, j, k)
            pre = PsiEigenvalue(prefix[min(k - 1, len(prefix) - 1)]).fold(self.resonance)
            order, bp = pre.at_support(w0)
            if order < 0:
                raise PoleError(f"e coefficient has a pole at corner {(i, j, k)} of {mu}")
            if order > 0:
                continue
            f = psi_la(self._layer(layers, k), i - beta.part(k))
            f.update(INV_1MQ1)
            coef = bp * BinomialProduct.make(1, (0, 0), f)
            out.append((PlanePartition(mu.boundary, mu.boxes | {(i, j, k)}), coef, w0))
        return out

    def f_coefficients(self, mu: PlanePartition):
        """[(box, order, BinomialProduct)] for every convex corner, zeros included."""
        layers, prefix, (_, cv) = self._data(mu)
        beta = self.boundary.beta
        full = self.psi(mu)
        out = []
        for (i, j, k) in sorted(cv):
            w0 = triple_key(i, j, k)
            head = PsiEigenvalue(prefix[min(k, len(prefix) - 1)]).fold(self.resonance)
            order, bp = (full / head).at_support(w0)
            if order < 0:
                raise PoleError(f"f coefficient has a pole at corner {(i, j, k)} of {mu}")
            f = psi_prime(self._layer(layers, k), i - beta.part(k))
            f.update(INV_1MQ1)
            out.append(((i, j, k), order, bp * BinomialProduct.make(1, (1, 0), f)))
        return out

    def f_terms(self, mu: PlanePartition):
        out = []
        for box, order, coef in self.f_coefficients(mu):
            if order == 0:
                out.append((PlanePartition(mu.boundary, mu.boxes - {box}), coef, triple_key(*box)))
        return out


def e_action(mod: MacmahonModule, mu: PlanePartition, r: int) -> dict:
    return as_fractions(mod.apply("e", r, {mu: Fraction(1)}))


def f_action(mod: MacmahonModule, mu: PlanePartition, r: int) -> dict:
    return as_fractions(mod.apply("f", r, {mu: Fraction(1)}))


def singular_vector_check(mod: MacmahonModule, t: int, window=(-3, 3)) -> bool:
    if mod.resonance is None:
        raise ValueError("singular vectors exist only at resonance")
    if t < 1:
        raise ValueError("t must be >= 1")
    w = omega_t(mod.boundary, *mod.resonance, t)
    lo, hi = window
    return all(not f_action(mod, w, r) for r in range(lo, hi + 1))


# -- the limit q1 -> 1 -----------------------------------------------------------

class PreconditionError(ValueError):
    pass


def _limit_level(mod: MacmahonModule) -> int:
    if mod.boundary.beta:
        raise PreconditionError("the q1 -> 1 limit needs beta = empty")
    res = mod.resonance
    if res is None or res[0] != res[1]:
        raise PreconditionError("the q1 -> 1 limit needs K = (q2 q3)^n")
    return res[0]


def p_layers(mu: PlanePartition) -> int:
    """p(lambda) = sum_i lambda^(i)_i."""
    K = mu.extents()[2]
    return sum(mu.layer(k).part(k) for k in range(1, K + 1))


@dataclass
class LimitEntry:
    gen: str
    source: PlanePartition
    target: PlanePartition
    mode: int
    order: int
    value: Fraction

    def to_json(self) -> dict:
        return {"generator": self.gen, "source": self.source.to_json(), "target": self.target.to_json(),
                "mode": self.mode, "order": self.order, "limit": str(self.value)}


@dataclass
class LimitReport:
    module: str
    degrees: list
    entries: list = field(default_factory=list)

    @property
    def all_finite(self) -> bool:
        return all(e.order >= 0 for e in self.entries)

    def to_json(self) -> dict:
        return {"module": self.module, "degrees": self.degrees, "all_finite": self.all_finite,
                "entries": [e.to_json() for e in self.entries]}


def limit_coefficients(mod: MacmahonModule, d: int, modes=(0, 1)) -> LimitReport:
    """q1 -> 1 limits of rescaled e/f matrix entries at degrees <= d.

    q2 and u keep their values from mod.params, K = q1^-n.  The basis is
    rescaled by (1 - q1)^p(lambda).  A pole raises PoleError.
    """
    n = _limit_level(mod)
    p = mod.params
    report = LimitReport(mod.descriptor, list(range(d + 1)))
    for deg in range(d + 1):
        for mu in mod.basis(deg):
            pm = p_layers(mu)
            for gen in ("e", "f"):
                terms = mod.e_terms(mu) if gen == "e" else mod.f_terms(mu)
                for target, bp, (_, A, B) in terms:
                    if mod.forbidden is not None and target.in_Y(*mod.forbidden):
                        continue
                    base = bp.to_q1_scalar(p.q2, -n)
                    base = base * FactoredQ1Scalar.binomial(1, 1, p_layers(target) - pm)
                    for r in modes:
                        x = base * FactoredQ1Scalar(p.q2 ** (B * r) * p.u ** r, A * r)
                        value, order = limit_at_q1_one(x)
                        report.entries.append(LimitEntry(gen, mu, target, r, order, value))
    return report


def cartan_from_psi(mod: MacmahonModule, mu: PlanePartition = None, window=(-6, 6)) -> dict:
    """Limit eigenvalues theta_i of E_{i,i} read off from psi on mu (default: omega).

    (psi+ - psi-)/(1 - q1) is a sum of delta functions at the poles of psi;
    the limiting residue at q^B gives theta_{1-B} - theta_{-B}.
    """
    n = _limit_level(mod)
    p = mod.params
    if mu is None:
        mu = mod.basis(0)[0]
    psi = mod.psi(mu)
    jumps = Counter()
    for key, e in psi.items():
        if e > 0:
            continue
        if e < -1:
            raise PoleError(f"pole of order {-e} in psi at {key}")
        order, bp = psi.at_support(key)
        residue = bp.to_q1_scalar(p.q2, -n) / FactoredQ1Scalar.binomial(1, 1, 1)
        for power, c in laurent_at_q1_one(residue, 0).items():
            jumps[(key[2], power)] += c
    if any(c for (B, power), c in jumps.items() if power < 0):
        raise PoleError("residues do not have a finite limit")
    steps = Counter({-B: c for (B, power), c in jumps.items() if power == 0})
    lo, hi = window
    out = {}
    for i in range(lo, hi + 1):
        out[i] = sum((c for j, c in steps.items() if j < i), Fraction(0))
    return out
