"""Gelfand-Zetlin realizations of gl_N, gl_{inf/2}^{+-} and gl_inf modules.

A hook pattern of width n is an array mu[i, j] (i, j >= 1) with
mu[i, j] >= mu[i, j+1], mu[i, j] >= mu[i+1, j], mu[i, j] = 0 when i, j > n,
rows stabilizing to alpha_i and columns to gamma_j.  It is stored as the
finite deviation from the minimal pattern max(alpha_i, gamma_j).

Index conventions for gl_inf: E_i = E_{i,i+1}, F_i = E_{i+1,i},
H_i = E_{i,i} - E_{i+1,i+1}.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .partitions import Partition
from .verify import RelationReport


class PreconditionError(ValueError):
    pass


# -- hook patterns ----------------------------------------------------------

class GZPattern:
    """Hook pattern of width n with stabilization data (alpha, gamma)."""

    __slots__ = ("n", "alpha", "gamma", "dev", "_hash")

    def __init__(self, n: int, alpha, gamma=(), dev=None):
        alpha, gamma = Partition(alpha), Partition(gamma)
        if n < 1:
            raise PreconditionError("width must be >= 1")
        if len(alpha) > n or len(gamma) > n:
            raise PreconditionError(f"alpha, gamma must have at most {n} parts")
        self.n, self.alpha, self.gamma = n, alpha, gamma
        self.dev = {k: v for k, v in (dev or {}).items() if v}
        self._hash = hash((n, alpha, gamma, frozenset(self.dev.items())))

    def base(self, i: int, j: int) -> int:
        if i > self.n and j > self.n:
            return 0
        return max(self.alpha.part(i), self.gamma.part(j))

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.base(i, j) + self.dev.get(ij, 0)

    def ell(self, i: int, j: int) -> int:
        return self[i, j] - min(i, j) + 1

    @property
    def degree(self) -> int:
        return sum(self.dev.values())

    def in_hook(self, i: int, j: int) -> bool:
        return i >= 1 and j >= 1 and (i <= self.n or j <= self.n)

    def shifted(self, i: int, j: int, delta: int):
        """mu +- 1^(i)_j, or None when the result breaks interlacing."""
        if not self.in_hook(i, j):
            return None
        v = self[i, j] + delta
        if i > 1 and v > self[i - 1, j]:
            return None
        if j > 1 and v > self[i, j - 1]:
            return None
        if v < self[i + 1, j] or v < self[i, j + 1]:
            return None
        dev = dict(self.dev)
        dev[(i, j)] = v - self.base(i, j)
        return GZPattern(self.n, self.alpha, self.gamma, dev)

    def extents(self):
        I = max([self.n] + [i for i, _ in self.dev])
        J = max([self.n] + [j for _, j in self.dev])
        return I, J

    def __eq__(self, other):
        return (isinstance(other, GZPattern) and self._hash == other._hash
                and self.dev == other.dev and self.n == other.n
                and self.alpha == other.alpha and self.gamma == other.gamma)

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return tuple(sorted(self.dev.items()))

    def __repr__(self):
        return f"GZPattern(n={self.n}, alpha={self.alpha}, gamma={self.gamma}, dev={self.sort_key()})"

    def to_json(self) -> dict:
        return {"width": self.n, "alpha": list(self.alpha), "gamma": list(self.gamma),
                "deviation": [[i, j, d] for (i, j), d in sorted(self.dev.items())]}


def minimal_pattern(n: int, alpha, c: int = 0) -> GZPattern:
    return GZPattern(n, alpha, [c] * n)


def raise_candidates(p: GZPattern):
    I, J = p.extents()
    for i in range(1, p.n + 1):
        for j in range(1, J + 2):
            yield (i, j)
    for j in range(1, p.n + 1):
        for i in range(p.n + 1, I + 2):
            yield (i, j)


@lru_cache(maxsize=None)
def _pattern_levels(n: int, alpha: Partition, gamma: Partition, d: int):
    if d == 0:
        return (GZPattern(n, alpha, gamma),)
    seen = set()
    for p in _pattern_levels(n, alpha, gamma, d - 1):
        for (i, j) in raise_candidates(p):
            q = p.shifted(i, j, 1)
            if q is not None:
                seen.add(q)
    return tuple(sorted(seen, key=GZPattern.sort_key))


def enumerate_patterns(n: int, alpha, gamma, d: int) -> list:
    """All hook patterns of total deviation d."""
    return list(_pattern_levels(n, Partition(alpha), Partition(gamma), d))


def gz_character(n: int, alpha, c: int, N: int) -> list:
    """Graded counts of hook patterns (n, alpha, gamma = c^n), degrees 0..N."""
    gamma = Partition([c] * n)
    return [len(enumerate_patterns(n, alpha, gamma, d)) for d in range(N + 1)]


# -- coefficient formulas ---------------------------------------------------

def _ratio(num, den) -> Fraction:
    out = Fraction(1)
    for x in num:
        out *= x
    for x in den:
        out /= x
    return out


def _c_minus_half(p: GZPattern, i: int, j: int, sign: int) -> Fraction:
    """c^{+-}_{i+j,j} of the gl^-_{inf/2} action."""
    n = p.n
    l0 = p.ell(i + j, j)
    num = [l0 - p.ell(i - sign + k, k) for k in range(1, n + 1)]
    den = [l0 - p.ell(i + k, k) for k in range(1, n + 1) if k != j]
    return sign * _ratio(num, den)


def _c_plus_half(p: GZPattern, i: int, j: int, sign: int) -> Fraction:
    """c^{+-}_{j,i+j} of the gl^+_{inf/2} action (note the opposite sign)."""
    n = p.n
    l0 = p.ell(j, i + j)
    num = [l0 - p.ell(k, i - sign + k) for k in range(1, n + 1)]
    den = [l0 - p.ell(k, i + k) for k in range(1, n + 1) if k != j]
    return -sign * _ratio(num, den)


def _c_zero(p: GZPattern, j: int, sign: int) -> Fraction:
    n = p.n
    l0 = p.ell(j, j)
    den = [l0 - p.ell(k, k) for k in range(1, n + 1) if k != j]
    if sign > 0:
        return _ratio([], den)
    num = []
    for k in range(1, n + 1):
        num.append(l0 - p.ell(k + 1, k))
        num.append(l0 - p.ell(k, k + 1))
    return -_ratio(num, den)


def gz_action_half(sign: int, gen: str, i: int, p: GZPattern) -> dict:
    """gl^-_{inf/2} (sign < 0) or gl^+_{inf/2} (sign > 0) generators.

    sign < 0: gen 'E' is E_{-i,-i+1}, 'F' is E_{-i+1,-i} (i >= 1), 'D' is E_{-i,-i} (i >= 0).
    sign > 0: gen 'E' is E_{i,i+1}, 'F' is E_{i+1,i}, 'D' is E_{i,i} (i >= 1).
    """
    n = p.n
    out = {}
    if gen == "D":
        if sign < 0:
            if i < 0:
                raise PreconditionError("E_{-i,-i} needs i >= 0")
            v = sum(p[i + j, j] - p[i + 1 + j, j] for j in range(1, n + 1))
        else:
            if i < 1:
                raise PreconditionError("E_{i,i} of gl^+ needs i >= 1")
            v = sum(p[j, i + j] - p[j, i - 1 + j] for j in range(1, n + 1)) - n
        return {p: Fraction(v)} if v else {}
    if i < 1:
        raise PreconditionError("half-infinite raising/lowering needs i >= 1")
    s = 1 if gen == "E" else -1
    for j in range(1, n + 1):
        pos = (i + j, j) if sign < 0 else (j, i + j)
        q = p.shifted(*pos, s)
        if q is None:
            continue
        c = _c_minus_half(p, i, j, s) if sign < 0 else _c_plus_half(p, i, j, s)
        if c:
            out[q] = out.get(q, 0) + c
    return out


def gz_action_zero(gen: str, p: GZPattern) -> dict:
    """E_{0,1} (gen 'E') and E_{1,0} (gen 'F') on hook patterns."""
    s = 1 if gen == "E" else -1
    out = {}
    for j in range(1, p.n + 1):
        q = p.shifted(j, j, s)
        if q is None:
            continue
        c = _c_zero(p, j, s)
        if c:
            out[q] = out.get(q, 0) + c
    return out


def diag_eigenvalue(p: GZPattern, i: int) -> Fraction:
    """Eigenvalue of E_{i,i}."""
    if i <= 0:
        d = gz_action_half(-1, "D", -i, p)
    else:
        d = gz_action_half(1, "D", i, p)
    return d.get(p, Fraction(0))


def gz_apply(gen: str, i: int, p: GZPattern) -> dict:
    """gl_inf generator on a hook pattern: gen in E, F (index i) or H, D."""
    if gen == "E":
        if i <= -1:
            return gz_action_half(-1, "E", -i, p)
        if i == 0:
            return gz_action_zero("E", p)
        return gz_action_half(1, "E", i, p)
    if gen == "F":
        if i <= -1:
            return gz_action_half(-1, "F", -i, p)
        if i == 0:
            return gz_action_zero("F", p)
        return gz_action_half(1, "F", i, p)
    if gen == "D":
        v = diag_eigenvalue(p, i)
        return {p: v} if v else {}
    if gen == "H":
        v = diag_eigenvalue(p, i) - diag_eigenvalue(p, i + 1)
        return {p: v} if v else {}
    raise ValueError(f"unknown generator {gen!r}")


def gz_apply_vec(gen: str, i: int, vec: dict) -> dict:
    out = defaultdict(Fraction)
    for p, c in vec.items():
        for q, v in gz_apply(gen, i, p).items():
            out[q] += c * v
    return {k: v for k, v in out.items() if v}


def gz_word(word, vec: dict) -> dict:
    """Apply [(gen, i), ...] right to left."""
    for gen, i in reversed(word):
        vec = gz_apply_vec(gen, i, vec)
        if not vec:
            break
    return vec


# -- finite gl_N --------------------------------------------------------------

class FinitePattern:
    """Triangular gl_N pattern mu[i, j], 1 <= j <= i <= N, with mu[i, i] = eta_i."""

    __slots__ = ("N", "entries", "_hash")

    def __init__(self, N: int, entries: dict):
        self.N = N
        self.entries = dict(entries)
        self._hash = hash(frozenset(self.entries.items()))

    def __getitem__(self, ij):
        return self.entries[ij]

    def ell(self, i, j):
        return self.entries[(i, j)] - j + 1

    def valid(self) -> bool:
        e = self.entries
        for (i, j), v in e.items():
            if j < i and v < e[(i, j + 1)]:
                return False
            if i < self.N and v < e[(i + 1, j)]:
                return False
        return True

    def shifted(self, i, j, delta):
        e = dict(self.entries)
        e[(i, j)] += delta
        q = FinitePattern(self.N, e)
        return q if q.valid() else None

    @property
    def eta(self):
        return tuple(self.entries[(i, i)] for i in range(1, self.N + 1))

    def __eq__(self, other):
        return isinstance(other, FinitePattern) and self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __repr__(self):
        rows = [[self.entries[(i, j)] for j in range(1, i + 1)] for i in range(1, self.N + 1)]
        return f"FinitePattern({rows})"


def finite_patterns(eta) -> list:
    """All gl_N patterns with diagonal eta (eta weakly decreasing)."""
    eta = tuple(eta)
    N = len(eta)
    if any(a < b for a, b in zip(eta, eta[1:])):
        raise PreconditionError("eta must be weakly decreasing")
    cells = [(i, j) for i in range(1, N + 1) for j in range(1, i)]
    # entries between eta_i (below diagonal: eta_j >= mu[i,j] >= eta_i)
    ranges = [range(eta[i - 1], eta[j - 1] + 1) for i, j in cells]
    out = []
    for vals in iproduct(*ranges):
        e = {(i, i): eta[i - 1] for i in range(1, N + 1)}
        e.update(zip(cells, vals))
        p = FinitePattern(N, e)
        if p.valid():
            out.append(p)
    return out


def gz_action_finite(gen: str, i: int, p: FinitePattern) -> dict:
    """gen 'E': E_{-i,-i+1}, 'F': E_{-i+1,-i} (1 <= i <= N-1); 'D': E_{-i,-i} (0 <= i <= N-1)."""
    N = p.N
    if gen == "D":
        if not 0 <= i <= N - 1:
            raise PreconditionError("diagonal index out of range")
        v = (sum(p[i + j, j] for j in range(1, N - i + 1))
             - sum(p[i + 1 + j, j] for j in range(1, N - i)))
        return {p: Fraction(v)} if v else {}
    if not 1 <= i <= N - 1:
        raise PreconditionError("generator index out of range")
    out = {}
    for j in range(1, N - i + 1):
        l0 = p.ell(i + j, j)
        den = [l0 - p.ell(i + k, k) for k in range(1, N - i + 1) if k != j]
        if gen == "E":
            q = p.shifted(i + j, j, 1)
            num = [l0 - p.ell(i - 1 + k, k) for k in range(1, N - i + 2)]
            sign = 1
        else:
            q = p.shifted(i + j, j, -1)
            num = [l0 - p.ell(i + 1 + k, k) for k in range(1, N - i)]
            sign = -1
        if q is None:
            continue
        c = sign * _ratio(num, den)
        if c:
            out[q] = out.get(q, 0) + c
    return out


def finite_word(word, vec: dict) -> dict:
    for gen, i in reversed(word):
        nxt = defaultdict(Fraction)
        for p, c in vec.items():
            for q, v in gz_action_finite(gen, i, p).items():
                nxt[q] += c * v
        vec = {k: v for k, v in nxt.items() if v}
        if not vec:
            break
    return vec


# -- lowest weights ---------------------------------------------------------------

def lowest_weight_theta(n: int, alpha, c: int, window=(-6, 6)) -> dict:
    """theta^(n)(alpha, c)_i for i in the window."""
    alpha = list(alpha) + [0] * (n - len(alpha))
    if len(alpha) != n:
        raise PreconditionError(f"alpha has more than {n} entries")
    if any(a < b for a, b in zip(alpha, alpha[1:])):
        raise PreconditionError("alpha must be weakly decreasing")
    k = sum(1 for a in alpha if a > c)
    A = lambda t: alpha[t - 1]
    out = {}
    for i in range(window[0], window[1] + 1):
        if i <= -k:
            out[i] = 0
        elif i <= 0:
            out[i] = A(-i + 1) - c
        elif i <= n - k:
            out[i] = A(n - i + 1) - c - n
        else:
            out[i] = -n
    return out


def theta_from_boundary(alpha, gamma, kappa_minus: int, window=(-6, 6)) -> dict:
    """Cartan eigenvalues on the minimal vector from d_{i,j} = max(gamma_i, alpha_j)."""
    alpha, gamma = Partition(alpha), Partition(gamma)
    d = lambda i, j: max(gamma.part(i), alpha.part(j))
    out = {}
    for i in range(window[0], window[1] + 1):
        L = len(alpha) + len(gamma) + abs(i) + 2
        if i <= 0:
            out[i] = d(1, 1 - i) - sum(d(j, j - i + 1) - d(j + 1, j - i + 1) for j in range(1, L))
        else:
            out[i] = kappa_minus - sum(d(j + i - 1, j) - d(j + i, j) for j in range(1, L))
    return out


# -- relation checks ---------------------------------------------------------------

def _first_bad(p, res, relation, descriptor, modes):
    target, val = min(res.items(), key=lambda kv: kv[0].sort_key())
    cex = {"basis": repr(p), "target": repr(target), "residual": str(val)}
    return RelationReport(relation, descriptor, [p.degree], list(modes), False, cex)


def _combine(*pairs):
    out = defaultdict(Fraction)
    for c, vec in pairs:
        for k, v in vec.items():
            out[k] += c * v
    return {k: v for k, v in out.items() if v}


def check_glinf_relations(n: int, alpha, c: int = 0, window: int = 2, max_deviation: int = 4) -> list:
    """[E_i,F_j] = delta_ij H_i, [E_aa, E_i] weights and Serre relations next to 0."""
    gamma = Partition([c] * n)
    descriptor = f"Y[n={n}, alpha={Partition(alpha)}, c={c}]"
    patterns = [p for d in range(max_deviation + 1) for p in enumerate_patterns(n, alpha, gamma, d)]
    idx = range(-window, window + 1)
    reports = []

    def run(relation, modes, residual):
        for p in patterns:
            res = residual(p)
            if res:
                reports.append(_first_bad(p, res, relation, descriptor, modes))
                return
        reports.append(RelationReport(relation, descriptor, list(range(max_deviation + 1)),
                                      list(modes), True, None, len(patterns)))

    for i in idx:
        for j in idx:
            def ef(p, i=i, j=j):
                v = {p: Fraction(1)}
                parts = [(1, gz_word([("E", i), ("F", j)], v)), (-1, gz_word([("F", j), ("E", i)], v))]
                if i == j:
                    parts.append((-1, gz_apply_vec("H", i, v)))
                return _combine(*parts)
            run("[E,F]=H", (i, j), ef)

    for a in idx:
        for i in idx:
            def weight(p, a=a, i=i):
                v = {p: Fraction(1)}
                shift = (a == i) - (a == i + 1)
                return _combine((1, gz_word([("D", a), ("E", i)], v)),
                                (-1, gz_word([("E", i), ("D", a)], v)),
                                (-shift, gz_word([("E", i)], v)))
            run("[E_aa,E_i]", (a, i), weight)

    pairs = [(0, 1), (1, 0), (0, -1), (-1, 0)]
    for gen in ("E", "F"):
        for i, j in pairs:
            def serre(p, gen=gen, i=i, j=j):
                v = {p: Fraction(1)}
                return _combine((1, gz_word([(gen, i), (gen, i), (gen, j)], v)),
                                (-2, gz_word([(gen, i), (gen, j), (gen, i)], v)),
                                (1, gz_word([(gen, j), (gen, i), (gen, i)], v)))
            run(f"serre {gen}", (i, j), serre)
        for j in idx:
            if abs(j) >= 2:
                def commute(p, gen=gen, j=j):
                    v = {p: Fraction(1)}
                    return _combine((1, gz_word([(gen, 0), (gen, j)], v)),
                                    (-1, gz_word([(gen, j), (gen, 0)], v)))
                run(f"[{gen}_0,{gen}_j]", (0, j), commute)

    def integral(p):
        bad = {p: Fraction(1)} if any(diag_eigenvalue(p, i).denominator != 1 for i in idx) else {}
        return bad
    run("integral weights", list(idx), integral)
    return reports


# -- plane partitions <-> hook patterns ----------------------------------------

def pp_to_gz(mu, n: int) -> GZPattern:
    """Hook pattern with mu[i, j] = layer-i, row-j entry of the plane partition."""
    a, b, g = mu.boundary
    if b:
        raise PreconditionError("pp_to_gz needs beta = empty")
    if len(a) > n or len(g) > n:
        raise PreconditionError(f"alpha, gamma must have at most {n} parts")
    if mu.in_Y(n + 1, 1, n + 1):
        raise PreconditionError(f"plane partition contains the box {(n + 1, 1, n + 1)}")
    dev = {}
    for (row, _, layer) in mu.boxes:
        dev[(layer, row)] = None
    p0 = GZPattern(n, a, g)
    for (layer, row) in dev:
        dev[(layer, row)] = mu.entry(layer, row) - p0.base(layer, row)
    return GZPattern(n, a, g, dev)


def gz_to_pp(p: GZPattern):
    from .planepartitions import BoundaryTriple, minimal_pp, PlanePartition

    w = minimal_pp(BoundaryTriple(p.alpha, Partition(), p.gamma))
    boxes = set()
    for (i, j), d in p.dev.items():
        base = p.base(i, j)
        for col in range(base + 1, base + d + 1):
            boxes.add((j, col, i))
    return PlanePartition(w.boundary, frozenset(boxes))
