"""Truncated q-series: MacMahon's product, chi_k, the S_n character formula,
the two conjectural formulas and enumerative characters of modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Optional

from .partitions import Partition, partitions_of
from .planepartitions import BoundaryTriple, enumerate_pp, resonance_box, splits_decompose


class CharacterError(ArithmeticError):
    pass


class IntegerSeries:
    """c_0 + c_1 q + ... + c_N q^N, exact modulo q^(N+1)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, coeffs, N: Optional[int] = None):
        coeffs = list(coeffs)
        if N is None:
            N = len(coeffs) - 1
        if N < 0:
            raise ValueError("truncation order must be >= 0")
        coeffs = (coeffs + [0] * (N + 1))[:N + 1]
        self.N = N
        self.coeffs = tuple(int(c) if Fraction(c).denominator == 1 else Fraction(c) for c in coeffs)

    @staticmethod
    def one(N: int) -> "IntegerSeries":
        return IntegerSeries([1], N)

    @staticmethod
    def monomial(k: int, N: int, c=1) -> "IntegerSeries":
        if k < 0:
            raise ValueError("negative power")
        out = [0] * (N + 1)
        if k <= N:
            out[k] = c
        return IntegerSeries(out, N)

    def _n(self, other) -> int:
        return min(self.N, other.N)

    def __add__(self, other):
        N = self._n(other)
        return IntegerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)][:N + 1], N)

    def __sub__(self, other):
        N = self._n(other)
        return IntegerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)][:N + 1], N)

    def __neg__(self):
        return IntegerSeries([-a for a in self.coeffs], self.N)

    def __mul__(self, other):
        if not isinstance(other, IntegerSeries):
            return IntegerSeries([a * other for a in self.coeffs], self.N)
        N = self._n(other)
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs[:N + 1]):
            if a:
                for j, b in enumerate(other.coeffs[:N + 1 - i]):
                    out[i + j] += a * b
        return IntegerSeries(out, N)

    __rmul__ = __mul__

    def inverse(self) -> "IntegerSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term")
        out = [Fraction(0)] * (self.N + 1)
        out[0] = Fraction(1) / c0
        for k in range(1, self.N + 1):
            s = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -s / c0
        return IntegerSeries(out, self.N)

    def __truediv__(self, other):
        if isinstance(other, IntegerSeries):
            return self * other.inverse()
        return IntegerSeries([Fraction(a) / other for a in self.coeffs], self.N)

    def __pow__(self, e: int):
        base = self if e >= 0 else self.inverse()
        out = IntegerSeries.one(self.N)
        for _ in range(abs(e)):
            out = out * base
        return out

    def shift(self, k: int) -> "IntegerSeries":
        """Multiply by q^k; a negative k requires the low coefficients to vanish."""
        if k >= 0:
            return IntegerSeries([0] * k + list(self.coeffs), self.N)
        if any(self.coeffs[:-k]):
            raise CharacterError(f"cannot divide by q^{-k}: low coefficients nonzero")
        return IntegerSeries(list(self.coeffs[-k:]), self.N + k)

    def truncate(self, N: int) -> "IntegerSeries":
        return IntegerSeries(self.coeffs[:N + 1], min(N, self.N))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_character(self) -> bool:
        return self.is_integral() and all(c >= 0 for c in self.coeffs)

    def first_difference(self, other) -> Optional[tuple]:
        """(degree, mine, theirs) of the first differing coefficient, or None."""
        for d, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if d > self._n(other):
                break
            if a != b:
                return (d, a, b)
        return None

    def __eq__(self, other):
        if not isinstance(other, IntegerSeries):
            return NotImplemented
        N = self._n(other)
        return self.coeffs[:N + 1] == other.coeffs[:N + 1]

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntegerSeries({list(self.coeffs)}, N={self.N})"

    def to_list(self) -> list:
        return [int(c) if isinstance(c, int) else str(c) for c in self.coeffs]

    def to_csv_rows(self):
        return [(d, c) for d, c in enumerate(self.to_list())]


def _check_character(s: IntegerSeries, what: str) -> IntegerSeries:
    if not s.is_character():
        raise CharacterError(f"{what} has a non-integral or negative coefficient: {s.coeffs}")
    return s


# -- basic products ---------------------------------------------------------------

def q_pochhammer(N: int) -> IntegerSeries:
    """(q)_inf mod q^(N+1) via Euler's pentagonal theorem."""
    out = [0] * (N + 1)
    k = 0
    while True:
        done = True
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e <= N:
                out[e] += -1 if kk % 2 else 1
                done = False
        if done and k > 0:
            break
        k += 1
    return IntegerSeries(out, N)


def finite_q_product(exps, N: int) -> IntegerSeries:
    """prod (1 - q^a)^e over (a, e) pairs, a >= 1."""
    out = IntegerSeries.one(N)
    for a, e in exps:
        if a < 1:
            raise ValueError("exponent must be >= 1")
        out = out * (IntegerSeries.one(N) - IntegerSeries.monomial(a, N)) ** e
    return out


def macmahon_series(N: int) -> IntegerSeries:
    if N < 0:
        raise ValueError("N must be >= 0")
    return _check_character(finite_q_product([(i, -i) for i in range(1, N + 1)], N), "MacMahon series")


# -- chi_k ------------------------------------------------------------------------

def chi_bar(a: int, N: int) -> IntegerSeries:
    """(q)_inf^-2 sum_j (-1)^j q^(j(j+1)/2 + j a)."""
    if a < 0:
        raise ValueError("chi_bar needs a >= 0")
    s = [0] * (N + 1)
    j = 0
    while j * (j + 1) // 2 + j * a <= N:
        s[j * (j + 1) // 2 + j * a] += (-1) ** j
        j += 1
    return IntegerSeries(s, N) * q_pochhammer(N) ** -2


def chi(k: int, N: int) -> IntegerSeries:
    if k >= 0:
        return chi_bar(k, N)
    return chi_bar(-k, N).shift(-k).truncate(N)


# -- the S_n formula -----------------------------------------------------------------

def p_alpha(alpha, n: Optional[int] = None) -> int:
    """Degree of the singular vector v_alpha.

    Positive parts contribute (i-1) alpha_i; the i-th part from the end,
    when non-positive, contributes -i alpha_{n-i+1}.
    """
    alpha = list(alpha)
    if n is not None:
        if len(alpha) > n:
            raise ValueError(f"alpha has more than {n} entries")
        alpha += [0] * (n - len(alpha))
    n = len(alpha)
    if any(a < b for a, b in zip(alpha, alpha[1:])):
        raise ValueError("alpha must be weakly decreasing")
    k = sum(1 for a in alpha if a > 0)
    pos = sum((i - 1) * alpha[i - 1] for i in range(1, k + 1))
    neg = sum(i * alpha[n - i] for i in range(1, n - k + 1))
    return pos - neg


def _sign(perm) -> int:
    s, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def alternating_sum(alpha, N: int) -> IntegerSeries:
    """sum_sigma (-1)^sigma prod_i chi_{(sigma(alpha+rho)-rho)_i}."""
    n = len(alpha)
    total = IntegerSeries([0], N)
    for perm in permutations(range(n)):
        # (sigma(alpha + rho) - rho)_i = alpha_s + rho_s - rho_i, rho_i = (n+1)/2 - i
        weights = [alpha[s] + i - s for i, s in enumerate(perm)]
        term = IntegerSeries.one(N)
        for w in weights:
            term = term * chi(w, N)
        total = total + term * _sign(perm)
    return total


def theorem_character(alpha, n: Optional[int] = None, N: int = 8) -> IntegerSeries:
    alpha = list(alpha)
    if n is not None:
        alpha += [0] * (n - len(alpha))
    p = p_alpha(alpha)
    # compute with a margin so that dividing by q^p keeps order N
    s = alternating_sum(alpha, N + max(p, 0)).shift(-p).truncate(N)
    return _check_character(s, f"character of W(theta({tuple(alpha)},0))")


# -- conjectures ------------------------------------------------------------------------

def conjecture1(m: int, N: int) -> IntegerSeries:
    if m < 1:
        raise ValueError("m must be >= 1")
    pref = finite_q_product([(i, m - i - 1) for i in range(1, m - 1)], N)
    s = IntegerSeries([0], N)
    j = 0
    while j * (j + 1) // 2 <= N:
        term = IntegerSeries.monomial(j * (j + 1) // 2, N, (-1) ** j)
        term = term * finite_q_product([(i + j, 1) for i in range(1, m)], N)
        s = s + term
        j += 1
    return pref * s * q_pochhammer(N) ** -(m + 1)


def conjecture2(n: int, m: int, N: int) -> IntegerSeries:
    if not n >= m >= 1:
        raise ValueError("need n >= m >= 1")
    total = IntegerSeries([0], N)
    for size in range(N + 1):
        for lam in partitions_of(size):
            if len(lam) > m:
                continue
            l = list(lam) + [0] * (n - len(lam))
            e = sum(l[i] ** 2 + (2 * i + 1) * l[i] for i in range(m)) // 2
            if e > N:
                continue
            exps = [(l[i] - l[j] + j - i, 1) for i in range(m) for j in range(i + 1, m)]
            exps += [(l[i] - l[j] + j - i, 1) for i in range(n) for j in range(i + 1, n)]
            term = IntegerSeries.monomial(e, N, (-1) ** sum(l)) * finite_q_product(exps, N)
            total = total + term
    return total * q_pochhammer(N) ** -(m + n)


# -- enumerative characters ----------------------------------------------------------

def module_character(b: BoundaryTriple, resonance=None, N: int = 6) -> IntegerSeries:
    b = BoundaryTriple(*(Partition(p) for p in b))
    forbidden = resonance_box(b, *resonance) if resonance is not None else None
    return IntegerSeries([len(enumerate_pp(b, d, forbidden)) for d in range(N + 1)], N)


def elevated_tuples_character(alpha, beta, n: int, N: int) -> IntegerSeries:
    """n-tuples of partitions with lam^(k)_i + a_k >= lam^(k+1)_{i+b_k}, graded by size.

    a_k = alpha_k - alpha_{k+1}, b_k = beta_k - beta_{k+1}.
    """
    if n == 0:
        return IntegerSeries.one(N)
    alpha, beta = Partition(alpha), Partition(beta)
    a = [alpha.part(k) - alpha.part(k + 1) for k in range(1, n)]
    bb = [beta.part(k) - beta.part(k + 1) for k in range(1, n)]
    by_size = [list(partitions_of(s)) for s in range(N + 1)]
    counts = [0] * (N + 1)
    for sizes in product(range(N + 1), repeat=n):
        total = sum(sizes)
        if total > N:
            continue
        for lams in product(*(by_size[s] for s in sizes)):
            if all(all(lams[k].part(i) + a[k] >= lams[k + 1].part(i + bb[k])
                       for i in range(1, len(lams[k + 1]) + 1))
                   for k in range(n - 1)):
                counts[total] += 1
    return IntegerSeries(counts, N)


@dataclass
class FactorizationReport:
    boundary: str
    abc: tuple
    resonance: tuple
    module: IntegerSeries
    factors: list
    product: IntegerSeries

    @property
    def agrees(self) -> bool:
        return self.module == self.product

    def to_json(self) -> dict:
        return {"boundary": self.boundary, "abc": list(self.abc), "resonance": list(self.resonance),
                "module": self.module.to_list(), "factors": [f.to_list() for f in self.factors],
                "product": self.product.to_list(), "agrees": self.agrees,
                "first_difference": self.module.first_difference(self.product)}


def tensor_factorization_check(b: BoundaryTriple, a: int, bb: int, c: int, N: int = 6) -> FactorizationReport:
    """Character of N^{c-b, a-b} against the product of the three factor characters."""
    b = BoundaryTriple(*(Partition(p) for p in b))
    sp = splits_decompose(b, a, bb, c)
    factors = [
        elevated_tuples_character(sp.alpha_arms, sp.beta_arms, c - 1, N),
        elevated_tuples_character(sp.beta_legs, sp.gamma_arms, a - 1, N),
        elevated_tuples_character(sp.alpha_legs, sp.gamma_legs, bb - 1, N),
    ]
    prod = factors[0] * factors[1] * factors[2]
    res = (c - bb, a - bb)
    return FactorizationReport(str(b), (a, bb, c), res, module_character(b, res, N), factors, prod)
