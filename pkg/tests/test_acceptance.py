"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line.

Run directly (python tests/test_acceptance.py) for just the summary lines.
"""

import random
import sys
import time
from contextlib import contextmanager


from macmahon.characters import (chi, chi_bar, conjecture1, conjecture2, macmahon_series, module_character,
                                 q_pochhammer, tensor_factorization_check, theorem_character)
from macmahon.fockrep import FockModule, VectorModule
from macmahon.glinf_gz import check_glinf_relations, gz_character, lowest_weight_theta, theta_from_boundary
from macmahon.macmahonrep import (MacmahonModule, cartan_from_psi, limit_coefficients, psi_shell,
                                  singular_vector_check)
from macmahon.planepartitions import VACUUM, BoundaryTriple, enumerate_pp, minimal_pp, resonance_box
from macmahon.psi import PsiEigenvalue
from macmahon.scalars import make_generic_params
from macmahon.verify import check_tame, relation_suite
from oracles import c_pairs_count, series_product, vacuum_pp_count

B = BoundaryTriple.of
SEEDS = (1, 2, 3)


RESULTS = []


@contextmanager
def criterion(number, title):
    t0 = time.time()
    status, detail = "PASS", ""
    try:
        yield
    except AssertionError as exc:
        status, detail = "FAIL", f" ({exc})" if str(exc) else ""
        raise
    finally:
        line = f"{status} criterion {number}: {title} [{time.time() - t0:.1f}s]{detail}"
        RESULTS.append(line)
        print(line)


def random_boundaries(count=5, seed=2024):
    small = [(), (1,), (2,), (1, 1)]
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        b = B(*(rng.choice(small) for _ in range(3)))
        if b not in out and b != VACUUM:
            out.append(b)
    return out


def relation_modules(p):
    mods = [(VectorModule(p), range(-4, 5)), (FockModule(p), range(5))]
    mods += [(MacmahonModule(b, p), range(5)) for b in random_boundaries()]
    mods += [(MacmahonModule(VACUUM, p.with_resonance(*res), quotient=True), range(5)) for res in ((1, 1), (2, 0))]
    return mods


def test_c01_vacuum_character():
    with criterion(1, "vacuum character to degree 10"):
        t0 = time.time()
        expected = [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500]
        assert series_product({i: i for i in range(1, 11)}, 10) == expected
        assert [vacuum_pp_count(d) for d in range(11)] == expected
        assert macmahon_series(10).to_list() == expected
        mod = MacmahonModule(VACUUM, make_generic_params(0))
        assert [len(mod.basis(d)) for d in range(11)] == expected
        assert time.time() - t0 < 30


def test_c02_eigenvalue_table():
    with criterion(2, "psi eigenvalue table"):
        t0 = time.time()
        K = (1, 0, 0)
        key = lambda A, B_: (0, A, B_)
        table = [
            (B(), {K: 1, key(0, 0): -1}),
            (B((1,)), {K: 1, key(1, 1): 1, key(1, 0): -1, key(0, 1): -1}),
            (B((2,)), {K: 1, key(2, 1): 1, key(2, 0): -1, key(0, 1): -1}),
            (B((1,), (1,)), {K: 1, key(0, 0): 1, key(0, 1): -1, key(0, -1): -1}),
            (B((1,), (1,), (1,)), {K: 1, key(0, 0): 2, key(1, 1): -1, key(0, -1): -1, key(-1, 0): -1}),
        ]
        for b, factors in table:
            got = psi_shell(minimal_pp(b))
            assert got == PsiEigenvalue(factors), f"{b}: {got.describe()}"
        assert time.time() - t0 < 1


def test_c03_relations():
    with criterion(3, "relation suite on V, F, M (5 boundaries), N^{1,1}, N^{2,0} under 3 parameter sets"):
        t0 = time.time()
        for seed in SEEDS:
            p = make_generic_params(seed)
            for mod, degrees in relation_modules(p):
                for rep in relation_suite(mod, degrees):
                    assert rep.passed, rep.line()
        assert time.time() - t0 < 300


def test_c04_tameness():
    with criterion(4, "tameness to degree 6"):
        for seed in SEEDS:
            p = make_generic_params(seed)
            for mod, _ in relation_modules(p):
                degrees = range(-6, 7) if isinstance(mod, VectorModule) else range(7)
                for d in degrees:
                    rep = check_tame(mod, d)
                    assert rep.passed, rep.line()


def test_c05_resonance():
    with criterion(5, "resonance (1,1): prohibited boxes, singular vectors, quotient basis"):
        p = make_generic_params(1).with_resonance(1, 1)
        mod = MacmahonModule(VACUUM, p)
        diagonal = {(2 + t, 1 + t, 2 + t) for t in range(4)}
        seen = 0
        for d in range(7):
            for mu in mod.basis(d):
                for box, order, _ in mod.f_coefficients(mu):
                    if box in diagonal:
                        seen += 1
                        assert order > 0, f"f removes {box} from {mu}"
        assert seen
        assert singular_vector_check(mod, 1) and singular_vector_check(mod, 2)
        quo = MacmahonModule(VACUUM, p, quotient=True)
        for d in range(7):
            assert set(quo.basis(d)) == {mu for mu in enumerate_pp(VACUUM, d) if mu.entry(2, 2) == 0}


def test_c06_chi():
    with criterion(6, "chi_k closed form vs pair enumeration, recursion"):
        for k in range(5):
            assert chi_bar(k, 12).to_list() == [c_pairs_count(k, n) for n in range(13)]
            assert chi(k, 12) == chi_bar(k, 12)
        target = q_pochhammer(16) ** -2
        for k in range(9):
            assert chi_bar(k, 16) + chi_bar(k + 1, 16).shift(k + 1) == target


def test_c07_theorem():
    with criterion(7, "character theorem vs hook GZ patterns"):
        t0 = time.time()
        for alpha in [(0, 0), (1, 0), (2, 1), (1, -1)]:
            c = max(0, -alpha[-1])
            patterns = gz_character(2, tuple(a + c for a in alpha), c, 8)
            assert theorem_character(alpha, 2, 8).to_list() == patterns, alpha
        assert time.time() - t0 < 60


def test_c08_conjectures():
    with criterion(8, "conjectures vs forbidden-box enumeration"):
        for m in (1, 2, 3):
            diff = conjecture1(m, 8).first_difference(module_character(VACUUM, (1, m), 8))
            assert diff is None, f"conjecture 1, m={m}: first difference {diff}"
        for n, m in [(1, 1), (2, 1), (2, 2)]:
            diff = conjecture2(n, m, 6).first_difference(module_character(VACUUM, (n, m), 6))
            assert diff is None, f"conjecture 2, (n,m)=({n},{m}): first difference {diff}"
        assert conjecture1(1, 10) == conjecture2(1, 1, 10)


def test_c09_gz_relations():
    with criterion(9, "gl_inf relations on hook patterns"):
        for n, alpha, c in [(1, (1,), 0), (2, (1, 0), 0), (2, (2, 2), 1)]:
            for rep in check_glinf_relations(n, alpha, c, window=2, max_deviation=4):
                assert rep.passed, rep.line()


def test_c10_limit():
    with criterion(10, "q1 -> 1 limit: finite entries and Cartan data"):
        n = 1
        for b in [VACUUM, B((1,)), B((2,), (), (1,))]:
            mod = MacmahonModule(b, make_generic_params(1).with_resonance(n, n))
            rep = limit_coefficients(mod, 2)
            assert rep.entries and rep.all_finite, b
            theta = cartan_from_psi(mod, window=(-4, 4))
            assert theta == theta_from_boundary(b.alpha, b.gamma, -n, (-4, 4)), b
            c = b.gamma.part(1)
            if len(b.gamma) <= n and len(b.alpha) <= n:
                assert theta == lowest_weight_theta(n, tuple(b.alpha) or (0,), c, (-4, 4)), b


def test_c11_tensor():
    with criterion(11, "tensor factorization at character level"):
        cases = [(VACUUM, (0, 0)), (VACUUM, (1, 0)), (VACUUM, (2, 0)), (B((), (1,)), (1, 1))]
        for b, (m, n) in cases:
            a, bb, c = resonance_box(b, m, n)
            rep = tensor_factorization_check(b, a, bb, c, 6)
            assert rep.agrees, f"{b} {(m, n)}: first difference {rep.module.first_difference(rep.product)}"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
