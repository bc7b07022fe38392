"""Exact scalars: parameter specializations, monomials and factored binomials.

Every monomial q1^j q2^k q3^i is reduced with q3 = 1/(q1 q2) to a pair
(A, B) = (j - i, k - i), so q1^A q2^B.  A binomial factor (1 - w x) is keyed
by ``(kpow, A, B)`` with w = K^kpow q1^A q2^B.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

try:  # exact rationals in C for the hot loops; results are reported as Fraction
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = None

Key = tuple  # (kpow, A, B)

ONE_KEY = (0, 0, 0)


def to_fast(x):
    if _mpq is None or isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _mpq(x.numerator, x.denominator)
    return x


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


class NonGenericError(ValueError):
    pass


class PoleError(ArithmeticError):
    pass


class MonomialTriple(NamedTuple):
    """Exponents of q3, q1, q2 (in this order, matching box coordinates)."""

    i: int
    j: int
    k: int

    @property
    def key(self) -> Key:
        return (0, self.j - self.i, self.k - self.i)


def triple_key(i: int, j: int, k: int, kpow: int = 0) -> Key:
    return (kpow, j - i, k - i)


def key_triple(key: Key) -> MonomialTriple:
    """Canonical representative of a reduced monomial (i = 0)."""
    return MonomialTriple(0, key[1], key[2])


def key_mul(a: Key, b: Key) -> Key:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def key_div(a: Key, b: Key) -> Key:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


@lru_cache(maxsize=None)
def _pow(base: Fraction, e: int) -> Fraction:
    return base ** e


@dataclass(frozen=True)
class ParamSpec:
    """Rational values for q1, q2, u, K.  q3 is always 1/(q1 q2).

    ``resonance`` is (m, n) when K = q2^m q3^n exactly, else None.
    """

    q1: Fraction
    q2: Fraction
    u: Fraction
    K: Fraction
    resonance: Optional[tuple] = None
    bound: int = 16

    @property
    def q3(self) -> Fraction:
        return 1 / (self.q1 * self.q2)

    def mono(self, A: int, B: int) -> Fraction:
        return _pow(self.q1, A) * _pow(self.q2, B)

    def value(self, key: Key) -> Fraction:
        kp, A, B = key
        return _pow(self.K, kp) * self.mono(A, B)

    def with_resonance(self, m: int, n: int) -> "ParamSpec":
        K = _pow(self.q2, m) * _pow(self.q3, n)
        return ParamSpec(self.q1, self.q2, self.u, K, (m, n), self.bound)


def eval_monomial(m, p: ParamSpec) -> Fraction:
    i, j, k = m
    return p.mono(j - i, k - i)


def fold_key(key: Key, resonance) -> Key:
    """Rewrite K = q2^m q3^n = q1^-n q2^(m-n) into a plain monomial."""
    if resonance is None or key[0] == 0:
        return key
    m, n = resonance
    kp = key[0]
    return (0, key[1] - kp * n, key[2] + kp * (m - n))


def is_generic(q1: Fraction, q2: Fraction, bound: int) -> bool:
    if q1 in (0, 1, -1) or q2 in (0, 1, -1):
        return False
    r = 2 * bound
    for A in range(-r, r + 1):
        for B in range(-r, r + 1):
            if (A or B) and _pow(q1, A) * _pow(q2, B) == 1:
                return False
    return True


def is_generic_level(q1: Fraction, q2: Fraction, K: Fraction, bound: int) -> bool:
    if K == 0:
        return False
    r = 2 * bound
    for A in range(-r, r + 1):
        for B in range(-r, r + 1):
            if _pow(q1, A) * _pow(q2, B) == K:
                return False
    return True


def make_params(q1, q2, u=1, K=None, bound: int = 16, resonance=None) -> ParamSpec:
    q1, q2, u = Fraction(q1), Fraction(q2), Fraction(u)
    if not is_generic(q1, q2, bound):
        raise NonGenericError(f"q1={q1}, q2={q2} not generic up to bound {bound}")
    if u == 0:
        raise NonGenericError("u must be nonzero")
    if resonance is not None:
        return ParamSpec(q1, q2, u, Fraction(1), None, bound).with_resonance(*resonance)
    K = Fraction(K)
    if not is_generic_level(q1, q2, K, bound):
        raise NonGenericError(f"K={K} lies on the monomial lattice")
    return ParamSpec(q1, q2, u, K, None, bound)


def _rand_rational(rng: random.Random) -> Fraction:
    while True:
        num, den = rng.randint(2, 11), rng.randint(2, 11)
        x = Fraction(num, den)
        if x != 1:
            return x


def make_generic_params(seed: int = 0, bound: int = 16) -> ParamSpec:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = random.Random(seed)
    while True:
        q1, q2 = _rand_rational(rng), _rand_rational(rng)
        u = _rand_rational(rng) * rng.choice((1, -1))
        K = _rand_rational(rng) * rng.choice((1, -1))
        try:
            return make_params(q1, q2, u, K, bound)
        except NonGenericError:
            continue


def make_resonance_params(m: int, n: int, seed: int = 0, bound: int = 16) -> ParamSpec:
    return make_generic_params(seed, bound).with_resonance(m, n)


# ---------------------------------------------------------------------------
# products of binomials


@dataclass(frozen=True)
class BinomialProduct:
    """const * q1^A q2^B * prod (1 - K^kp q1^a q2^b)^e, with a symbolic level K."""

    const: Fraction = Fraction(1)
    mono: tuple = (0, 0)
    factors: tuple = ()  # sorted ((kp, a, b), e)

    @staticmethod
    def make(const=1, mono=(0, 0), factors=None) -> "BinomialProduct":
        c = Counter()
        for key, e in (factors or {}).items():
            if e:
                c[key] += e
        return BinomialProduct(Fraction(const), tuple(mono),
                               tuple(sorted((k, e) for k, e in c.items() if e)))

    def __mul__(self, other: "BinomialProduct") -> "BinomialProduct":
        c = Counter(dict(self.factors))
        for k, e in other.factors:
            c[k] += e
        return BinomialProduct.make(self.const * other.const,
                                    (self.mono[0] + other.mono[0], self.mono[1] + other.mono[1]), c)

    def evaluate(self, p: ParamSpec) -> Fraction:
        val = self.const * p.mono(*self.mono)
        if not val:
            return val
        for key, e in self.factors:
            b = 1 - p.value(fold_key(key, p.resonance))
            if b == 0:
                if e < 0:
                    raise PoleError(f"factor {key} vanishes in a denominator")
                return Fraction(0)
            val *= b ** e
        return val

    def to_q1_scalar(self, q2: Fraction, kappa: int) -> "FactoredQ1Scalar":
        """Specialize q2 and K = q1^kappa; keep q1 free."""
        out = FactoredQ1Scalar(self.const, self.mono[0], ())
        q2 = Fraction(q2)
        out = out * FactoredQ1Scalar(_pow(q2, self.mono[1]), 0, ())
        for (kp, a, b), e in self.factors:
            out = out * FactoredQ1Scalar.binomial(a + kp * kappa, _pow(q2, b), e)
        return out


ONE = BinomialProduct()


# ---------------------------------------------------------------------------
# functions of q1 in factored form


@dataclass(frozen=True)
class FactoredQ1Scalar:
    """c * q1^s * prod (1 - q1^a rho)^e with a != 0."""

    c: Fraction
    q1_exp: int = 0
    factors: tuple = field(default=())  # sorted ((a, rho), e)

    @staticmethod
    def binomial(a: int, rho, e: int = 1) -> "FactoredQ1Scalar":
        rho = Fraction(rho)
        if a == 0:
            base = 1 - rho
            if base == 0:
                if e < 0:
                    raise PoleError("constant factor 1 - 1 in a denominator")
                return FactoredQ1Scalar(Fraction(0))
            return FactoredQ1Scalar(base ** e)
        return FactoredQ1Scalar(Fraction(1), 0, (((a, rho), e),) if e else ())

    def _combine(self, other: "FactoredQ1Scalar", sign: int) -> "FactoredQ1Scalar":
        c = Counter(dict(self.factors))
        for k, e in other.factors:
            c[k] += sign * e
        if sign > 0:
            const = self.c * other.c
        else:
            if other.c == 0:
                raise ZeroDivisionError("division by zero scalar")
            const = self.c / other.c
        return FactoredQ1Scalar(const, self.q1_exp + sign * other.q1_exp,
                                tuple(sorted((k, e) for k, e in c.items() if e)))

    def __mul__(self, other):
        return self._combine(other, 1)

    def __truediv__(self, other):
        return self._combine(other, -1)

    def evaluate(self, q1) -> Fraction:
        q1 = Fraction(q1)
        val = self.c * q1 ** self.q1_exp
        for (a, rho), e in self.factors:
            b = 1 - q1 ** a * rho
            if b == 0:
                if e < 0:
                    raise PoleError("evaluation at a pole")
                return Fraction(0)
            val *= b ** e
        return val

    def order_at_one(self) -> int:
        return sum(e for (a, rho), e in self.factors if rho == 1)


def limit_at_q1_one(s: FactoredQ1Scalar) -> tuple:
    """Return (value, order) of s as q1 -> 1; raises PoleError if order < 0."""
    order = s.order_at_one()
    if order < 0:
        raise PoleError(f"pole of order {-order} at q1 = 1")
    if order > 0 or s.c == 0:
        return Fraction(0), order
    val = s.c
    for (a, rho), e in s.factors:
        # (1 - q1^a) ~ a (1 - q1); the (1 - q1) powers cancel since order == 0
        val *= Fraction(a) ** e if rho == 1 else (1 - rho) ** e
    return val, 0


# -- Laurent expansion in t = q1 - 1 ---------------------------------------

def _binom_series(a: int, M: int) -> list:
    """Coefficients of (1 + t)^a up to t^M (a may be negative)."""
    out, c = [], Fraction(1)
    for k in range(M + 1):
        out.append(c)
        c = c * (a - k) / (k + 1)
    return out


def _ser_mul(x: list, y: list, M: int) -> list:
    out = [Fraction(0)] * (M + 1)
    for i, a in enumerate(x[:M + 1]):
        if a:
            for j, b in enumerate(y[:M + 1 - i]):
                out[i + j] += a * b
    return out


def _ser_inv(x: list, M: int) -> list:
    if not x[0]:
        raise PoleError("series with zero constant term is not invertible")
    out = [Fraction(0)] * (M + 1)
    out[0] = 1 / x[0]
    for k in range(1, M + 1):
        s = sum(x[i] * out[k - i] for i in range(1, min(k, len(x) - 1) + 1))
        out[k] = -s / x[0]
    return out


def _ser_pow(x: list, e: int, M: int) -> list:
    base = x if e >= 0 else _ser_inv(x, M)
    out = [Fraction(1)] + [Fraction(0)] * M
    for _ in range(abs(e)):
        out = _ser_mul(out, base, M)
    return out


def laurent_at_q1_one(s: FactoredQ1Scalar, upto: int = 0) -> dict:
    """{power: coefficient} of s in t = q1 - 1, for powers <= upto."""
    v = s.order_at_one()
    M = upto - v
    if M < 0:
        return {}
    ser = [Fraction(s.c)] + [Fraction(0)] * M
    ser = _ser_mul(ser, _binom_series(s.q1_exp, M), M)
    for (a, rho), e in s.factors:
        b = _binom_series(a, M + 1)
        if rho == 1:
            g = [-b[k + 1] for k in range(M + 1)]  # (1 - (1+t)^a) / t
        else:
            g = [1 - rho * b[0]] + [-rho * b[k] for k in range(1, M + 1)]
        ser = _ser_mul(ser, _ser_pow(g, e, M), M)
    return {v + k: c for k, c in enumerate(ser) if c}
