"""Plane partitions with boundary conditions (alpha, beta, gamma).

A box (i, j, k) sits in row i (q3 direction), column j (q1 direction) and
layer k (q2 direction); it belongs to Y_mu iff j <= mu^(k)_i.  A plane
partition is stored as the finite set of boxes added to the minimal
configuration omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Optional

from .partitions import EMPTY, Partition, format_partition, parse_partition, transpose
from .scalars import MonomialTriple

INF = math.inf


class InvalidCornerError(ValueError):
    pass


class NoResonanceError(ValueError):
    pass


class NotSplitError(ValueError):
    pass


class BoundaryTriple(NamedTuple):
    alpha: Partition = EMPTY
    beta: Partition = EMPTY
    gamma: Partition = EMPTY

    @staticmethod
    def of(alpha=(), beta=(), gamma=()) -> "BoundaryTriple":
        return BoundaryTriple(Partition(alpha), Partition(beta), Partition(gamma))

    def omega_entry(self, k: int, i: int):
        if i <= self.beta.part(k):
            return INF
        return max(self.gamma.part(i), self.alpha.part(k))

    def __str__(self):
        return ";".join(format_partition(p) for p in self)


VACUUM = BoundaryTriple()


def parse_boundary(text: str) -> BoundaryTriple:
    pieces = text.split(";")
    if len(pieces) != 3:
        raise ValueError(f"boundary needs three ';'-separated partitions: {text!r}")
    return BoundaryTriple(*(parse_partition(p) for p in pieces))


class ShellPoint(NamedTuple):
    position: tuple
    order: int


@dataclass(frozen=True)
class PlanePartition:
    boundary: BoundaryTriple
    boxes: frozenset = frozenset()
    _rows: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        rows = {}
        for (i, j, k) in self.boxes:
            if j > rows.get((k, i), 0):
                rows[(k, i)] = j
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_hash", hash((self.boundary, self.boxes)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PlanePartition):
            return NotImplemented
        return self._hash == other._hash and self.boxes == other.boxes and self.boundary == other.boundary

    # -- membership --------------------------------------------------------
    def entry(self, k: int, i: int):
        """mu^(k)_i (may be inf)."""
        w = self.boundary.omega_entry(k, i)
        if w == INF:
            return INF
        return max(w, self._rows.get((k, i), 0))

    def in_Y(self, i: int, j: int, k: int) -> bool:
        if i <= 0 or j <= 0 or k <= 0:
            return False
        return j <= self.entry(k, i)

    def in_closure(self, i: int, j: int, k: int) -> bool:
        if i <= 0 or j <= 0 or k <= 0:
            return True
        return j <= self.entry(k, i)

    @property
    def degree(self) -> int:
        return len(self.boxes)

    def extents(self):
        """(I, J, K): Y is translation invariant along each axis beyond these."""
        a, b, g = self.boundary
        I = max([b.part(1), len(g)] + [x[0] for x in self.boxes])
        J = max([a.part(1), g.part(1)] + [x[1] for x in self.boxes])
        K = max([len(a), len(b)] + [x[2] for x in self.boxes])
        return I, J, K

    def sort_key(self):
        return tuple(sorted(self.boxes))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"PlanePartition({self.boundary}, {sorted(self.boxes)})"

    def layer(self, k: int) -> Partition:
        """lambda^(k)_i = mu^(k)_{i+beta_k} - alpha_k."""
        a, b, _ = self.boundary
        I = self.extents()[0]
        return Partition(self.entry(k, i + b.part(k)) - a.part(k)
                         for i in range(1, I + 2))

    def to_json(self) -> dict:
        K = self.extents()[2]
        return {
            "boundary": [list(p) for p in self.boundary],
            "layers": [list(lam) for lam, _ in to_layers(self)[:K]],
            "added_boxes": [list(x) for x in sorted(self.boxes)],
        }


def minimal_pp(b: BoundaryTriple) -> PlanePartition:
    return PlanePartition(BoundaryTriple(*(Partition(p) for p in b)))


def from_boxes(b: BoundaryTriple, Y) -> PlanePartition:
    """Plane partition whose Y equals the given boxes plus omega."""
    w = minimal_pp(b)
    return PlanePartition(w.boundary, frozenset(x for x in Y if not w.in_Y(*x)))


def to_layers(mu: PlanePartition):
    """[(lambda^(k), shift of u_k)] for k = 1..K+1; later layers equal the last."""
    a, b, _ = mu.boundary
    K = mu.extents()[2]
    return [(mu.layer(k), MonomialTriple(b.part(k), a.part(k), k - 1))
            for k in range(1, K + 2)]


def from_layers(b: BoundaryTriple, layers) -> PlanePartition:
    a, beta, _ = b
    Y = set()
    for k, item in enumerate(layers, start=1):
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], MonomialTriple):
            item = item[0]
        lam = Partition(item)
        for r, length in enumerate(lam, start=1):
            i = r + beta.part(k)
            for j in range(a.part(k) + 1, a.part(k) + length + 1):
                Y.add((i, j, k))
    return from_boxes(b, Y)


# -- corners -----------------------------------------------------------------

def corners3d(mu: PlanePartition):
    I, _, K = mu.extents()
    concave, convex = set(), set()
    for k in range(1, K + 2):
        for i in range(1, I + 2):
            m = mu.entry(k, i)
            if m == INF:
                continue
            j = m + 1
            if mu.in_closure(i - 1, j, k) and mu.in_closure(i, j, k - 1):
                concave.add((i, j, k))
            if m >= 1 and not mu.in_Y(i + 1, m, k) and not mu.in_Y(i, m, k + 1):
                convex.add((i, m, k))
    return concave, convex


def add_box(mu: PlanePartition, box) -> PlanePartition:
    box = tuple(box)
    if box not in corners3d(mu)[0]:
        raise InvalidCornerError(f"{box} is not a concave corner")
    return PlanePartition(mu.boundary, mu.boxes | {box})


def remove_box(mu: PlanePartition, box) -> PlanePartition:
    box = tuple(box)
    if box not in corners3d(mu)[1] or box not in mu.boxes:
        raise InvalidCornerError(f"{box} is not a removable convex corner")
    return PlanePartition(mu.boundary, mu.boxes - {box})


@lru_cache(maxsize=None)
def _levels(b: BoundaryTriple, d: int, forbidden):
    if d == 0:
        w = minimal_pp(b)
        if forbidden is not None and w.in_Y(*forbidden):
            return ()
        return (w,)
    seen = set()
    for mu in _levels(b, d - 1, forbidden):
        for box in corners3d(mu)[0]:
            if box != forbidden:
                seen.add(PlanePartition(mu.boundary, mu.boxes | {box}))
    return tuple(sorted(seen, key=PlanePartition.sort_key))


def enumerate_pp(b: BoundaryTriple, d: int, forbidden: Optional[tuple] = None):
    if d < 0:
        raise ValueError("degree must be non-negative")
    b = BoundaryTriple(*(Partition(p) for p in b))
    return list(_levels(b, d, tuple(forbidden) if forbidden is not None else None))


# -- shell ---------------------------------------------------------------------

_EPS = list(product((0, 1), repeat=3))
_SIGN = {e: (1 if sum(e) % 2 == 1 else -1) for e in _EPS}


def local_order(mu: PlanePartition, i: int, j: int, k: int) -> int:
    """Order of (1 - q1^j q2^k q3^i x) in psi_mu, from the 2x2x2 cube at (i,j,k).

    Points with a coordinate <= 0 count as filled; this places the vacuum
    pole 1/(1 - x) on the shell.
    """
    return sum(_SIGN[e] for e in _EPS if mu.in_closure(i + e[0], j + e[1], k + e[2]))


def cube_matrices(mu: PlanePartition, i: int, j: int, k: int):
    """The T (j+1 slice) and B (j slice) 2x2 matrices of the cube at (i,j,k)."""
    A = lambda e1, e2, e3: int(mu.in_closure(i + e1, j + e2, k + e3))
    T = ((A(0, 1, 0), A(1, 1, 0)), (A(0, 1, 1), A(1, 1, 1)))
    B = ((A(0, 0, 0), A(1, 0, 0)), (A(0, 0, 1), A(1, 0, 1)))
    return T, B


def shell(mu: PlanePartition):
    """Shell points with nonzero order, sorted by position."""
    I, J, K = mu.extents()
    out = []
    for i in range(I + 2):
        for j in range(J + 2):
            for k in range(K + 2):
                a = local_order(mu, i, j, k)
                if a:
                    out.append(ShellPoint((i, j, k), a))
    return out


# -- S3 symmetry -------------------------------------------------------------

def _leg_cells(b: BoundaryTriple):
    a, beta, g = b
    return {
        0: {(j, k) for k in range(1, len(a) + 1) for j in range(1, a.part(k) + 1)},
        1: {(i, k) for k in range(1, len(beta) + 1) for i in range(1, beta.part(k) + 1)},
        2: {(i, j) for i in range(1, len(g) + 1) for j in range(1, g.part(i) + 1)},
    }


def _cells_to_partition(cells, value_pos: int, index_pos: int) -> Partition:
    rows = {}
    for c in cells:
        rows[c[index_pos]] = max(rows.get(c[index_pos], 0), c[value_pos])
    n = max(rows, default=0)
    return Partition(rows.get(t, 0) for t in range(1, n + 1))


def s3_transform(mu: PlanePartition, perm) -> PlanePartition:
    """New coordinates y_t = x_{perm[t]} (perm a permutation of (1,2,3))."""
    sigma = [p - 1 for p in perm]
    if sorted(sigma) != [0, 1, 2]:
        raise ValueError(f"not a permutation of (1,2,3): {perm}")
    inv = [sigma.index(a) for a in range(3)]
    new_cells = {}
    for axis, cells in _leg_cells(mu.boundary).items():
        others = [a for a in range(3) if a != axis]
        new_axis = inv[axis]
        new_others = [t for t in range(3) if t != new_axis]
        moved = set()
        for c in cells:
            x = {others[0]: c[0], others[1]: c[1]}
            y = tuple(x[sigma[t]] for t in new_others)
            moved.add(y)
        new_cells[new_axis] = moved
    alpha = _cells_to_partition(new_cells[0], 0, 1)  # cells (j, k): alpha_k = max j
    beta = _cells_to_partition(new_cells[1], 0, 1)   # cells (i, k): beta_k = max i
    gamma = _cells_to_partition(new_cells[2], 1, 0)  # cells (i, j): gamma_i = max j
    boxes = frozenset(tuple(x[s] for s in sigma) for x in mu.boxes)
    return PlanePartition(BoundaryTriple(alpha, beta, gamma), boxes)


# -- resonance -----------------------------------------------------------------

def resonance_box(b: BoundaryTriple, m: int, n: int):
    """The unique (a,b,c) with K = q1^b q2^c q3^a = q2^m q3^n, a,b,c >= 1,
    (a,b,c) not in Y_omega and (a-1,b-1,c-1) in the closure."""
    w = minimal_pp(b)
    start = max(1, 1 - m, 1 - n)
    I, J, K = w.extents()
    for t in range(start, start + I + J + K + 3):
        a, bb, c = n + t, t, m + t
        if not w.in_Y(a, bb, c) and w.in_closure(a - 1, bb - 1, c - 1):
            return (a, bb, c)
    raise NoResonanceError(f"no resonance box for (m,n)=({m},{n}) and boundary {b}")


def omega_t(b: BoundaryTriple, m: int, n: int, t: int) -> PlanePartition:
    if t < 0:
        raise ValueError("t must be >= 0")
    w = minimal_pp(b)
    if t == 0:
        return w
    a, bb, c = resonance_box(b, m, n)
    Y = {(i, j, k) for i in range(1, a + t) for k in range(1, c + t)
         for j in range(1, bb + t)}
    return PlanePartition(w.boundary, frozenset(x for x in Y if not w.in_Y(*x)))


class Splitting(NamedTuple):
    alpha_arms: Partition
    alpha_legs: Partition
    beta_arms: Partition
    beta_legs: Partition
    gamma_arms: Partition
    gamma_legs: Partition


def splits_decompose(b: BoundaryTriple, a: int, bb: int, c: int) -> Splitting:
    if min(a, bb, c) < 1:
        raise ValueError("a, b, c must be >= 1")
    w = minimal_pp(b)
    I, J, K = w.extents()
    for s in range(1, max(I, J, K) + max(a, bb, c) + 3):
        if not (w.in_closure(a - 1, bb - 1, s) and w.in_closure(a - 1, s, c - 1)
                and w.in_closure(s, bb - 1, c - 1)):
            raise NotSplitError(f"boundary {b} does not split at {(a, bb, c)}")
    al, be, ga = b
    alt, bet, gat = transpose(al), transpose(be), transpose(ga)

    def trunc(vals):
        return Partition(vals)

    return Splitting(
        alpha_arms=trunc(al.part(i) - bb + 1 for i in range(1, c)),
        alpha_legs=trunc(alt.part(i) - c + 1 for i in range(1, bb)),
        beta_arms=trunc(be.part(i) - a + 1 for i in range(1, c)),
        beta_legs=trunc(bet.part(i) - c + 1 for i in range(1, a)),
        gamma_arms=trunc(ga.part(i) - bb + 1 for i in range(1, a)),
        gamma_legs=trunc(gat.part(i) - a + 1 for i in range(1, bb)),
    )
