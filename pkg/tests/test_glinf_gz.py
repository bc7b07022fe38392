from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from macmahon.glinf_gz import (PreconditionError, check_glinf_relations, diag_eigenvalue,
                               enumerate_patterns, finite_patterns, finite_word, gz_action_finite,
                               gz_action_zero, gz_apply, gz_apply_vec, gz_character,
                               gz_to_pp, lowest_weight_theta, minimal_pattern, pp_to_gz,
                               theta_from_boundary)
from macmahon.planepartitions import BoundaryTriple, enumerate_pp, resonance_box
from oracles import gl2_weight_table


def test_finite_n1():
    (p,) = finite_patterns((4,))
    assert gz_action_finite("D", 0, p) == {p: 4}


def test_finite_gl2_weights():
    pats = finite_patterns((3, 0))
    # weights of E_{-1,-1} and E_{0,0} (index i = 1 is the top row)
    weights = sorted((diag_of(p, 1), diag_of(p, 0)) for p in pats)
    assert weights == gl2_weight_table((3, 0))


def diag_of(p, i):
    out = gz_action_finite("D", i, p)
    return int(out.get(p, 0))


@pytest.mark.parametrize("eta", [(1, 0), (2, 0), (3, 1), (2, 2)])
def test_finite_gl2_commutator(eta):
    for p in finite_patterns(eta):
        v = {p: Fraction(1)}
        ef = finite_word([("E", 1), ("F", 1)], v)
        fe = finite_word([("F", 1), ("E", 1)], v)
        h = diag_of(p, 1) - diag_of(p, 0)
        res = {k: ef.get(k, 0) - fe.get(k, 0) for k in set(ef) | set(fe)}
        res[p] = res.get(p, 0) - h
        assert not any(res.values())


def test_finite_highest_vector():
    eta = (2, 1, 0)
    top = [p for p in finite_patterns(eta) if all(p[i, j] == eta[j - 1] for i in range(1, 4) for j in range(1, i + 1))]
    assert len(top) == 1
    assert not gz_action_finite("E", 1, top[0]) and not gz_action_finite("E", 2, top[0])


def test_n1_lowest_weight():
    for k in range(4):
        th = lowest_weight_theta(1, (k,), 0, (-3, 3))
        assert th == {-3: 0, -2: 0, -1: 0, 0: k, 1: -1, 2: -1, 3: -1}


def test_lowest_weight_precondition():
    with pytest.raises(PreconditionError):
        lowest_weight_theta(2, (0, 1), 0)


def test_antidominant_except_jump():
    th = lowest_weight_theta(3, (4, 2, 0), 1, (-5, 5))
    for i in range(-5, 5):
        if i != 0:
            assert th[i] <= th[i + 1]


def test_theta_trivial():
    assert set(theta_from_boundary((), (), 0).values()) == {0}


def test_theta_direct_example():
    # alpha = (2), gamma = empty, kappa = -1: d_{i,j} = alpha_j
    th = theta_from_boundary((2,), (), -1, (-2, 2))
    assert th == {-2: 0, -1: 0, 0: 2, 1: -1, 2: -1}


@pytest.mark.parametrize("n,alpha,c", [(1, (2,), 0), (2, (1, 0), 0), (2, (3, 1), 1), (2, (2, 2), 1), (3, (2, 1, 0), 0)])
def test_theta_reduces_to_lowest_weight(n, alpha, c):
    assert theta_from_boundary(alpha, (c,) * n, -n) == lowest_weight_theta(n, alpha, c)


@pytest.mark.parametrize("n,alpha,c", [(1, (1,), 0), (2, (1, 0), 0), (2, (2, 2), 1)])
def test_minimal_pattern_weights(n, alpha, c):
    p = minimal_pattern(n, alpha, c)
    th = lowest_weight_theta(n, alpha, c, (-3, 3))
    for i in range(-3, 4):
        assert diag_eigenvalue(p, i) == th[i]
        assert not gz_apply("F", i, p)


def test_zero_coefficients_n1():
    p = minimal_pattern(1, (1,), 0)
    out = gz_action_zero("E", p)
    assert list(out.values()) == [1]


def test_zero_commutator_formula():
    # the closed expression sum(l^k_{k+1} + l^{k+1}_k - 2 l^k_k) - n comes out as -H_0
    for p in enumerate_patterns(2, (1, 0), (0, 0), 2):
        ef = gz_apply_vec("E", 0, gz_apply("F", 0, p))
        fe = gz_apply_vec("F", 0, gz_apply("E", 0, p))
        val = ef.get(p, 0) - fe.get(p, 0)
        n = 2
        ell = p.ell
        expected = sum(ell(k, k + 1) + ell(k + 1, k) - 2 * ell(k, k) for k in range(1, n + 1)) - n
        assert val == diag_eigenvalue(p, 0) - diag_eigenvalue(p, 1)
        assert val == -expected


def test_denominators_nonzero():
    for d in range(5):
        for p in enumerate_patterns(2, (2, 1), (0, 0), d):
            for i in range(-3, 4):
                for g in "EF":
                    gz_apply(g, i, p)  # raises ZeroDivisionError otherwise


@pytest.mark.parametrize("n,alpha,c", [(1, (1,), 0), (2, (1, 0), 0)])
def test_relations(n, alpha, c):
    reps = check_glinf_relations(n, alpha, c, window=2, max_deviation=3)
    assert reps and all(r.passed for r in reps)


def test_weight_shift():
    p = minimal_pattern(2, (1, 0), 0)
    for q in gz_apply("E", 1, p):
        for i in range(-2, 3):
            assert (diag_eigenvalue(q, i) - diag_eigenvalue(p, i)) == (1 if i == 1 else -1 if i == 2 else 0)


@pytest.mark.parametrize("n,alpha,c", [(1, (2,), 0), (2, (1, 0), 0), (2, (2, 1), 1)])
def test_pp_gz_bijection(n, alpha, c):
    b = BoundaryTriple.of(alpha, (), (c,) * n)
    forbidden = resonance_box(b, n, n)
    assert forbidden == (n + 1, 1, n + 1) or not alpha
    assert gz_character(n, alpha, c, 5) == [len(enumerate_pp(b, d, forbidden)) for d in range(6)]
    for d in range(4):
        pats = set()
        for mu in enumerate_pp(b, d, forbidden):
            p = pp_to_gz(mu, n)
            assert p.degree == d
            assert gz_to_pp(p) == mu
            pats.add(p)
        assert pats == set(enumerate_patterns(n, alpha, (c,) * n, d))


def test_pp_gz_precondition():
    mu = enumerate_pp(BoundaryTriple.of((), (1,)), 0)[0]
    with pytest.raises(PreconditionError):
        pp_to_gz(mu, 1)


PATTERNS = [p for d in range(4) for p in enumerate_patterns(2, (2, 1), (0, 0), d)]


@given(st.sampled_from(PATTERNS), st.integers(-2, 2), st.integers(-2, 2))
def test_ef_commutator_property(p, i, j):
    ef = gz_apply_vec("E", i, gz_apply("F", j, p))
    fe = gz_apply_vec("F", j, gz_apply("E", i, p))
    res = {k: ef.get(k, 0) - fe.get(k, 0) for k in set(ef) | set(fe)}
    if i == j:
        h = diag_eigenvalue(p, i) - diag_eigenvalue(p, i + 1)
        assert h.denominator == 1
        res[p] = res.get(p, 0) - h
    assert not any(res.values())
